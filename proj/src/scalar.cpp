// Copyright 2026 The zxsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zxsim/scalar.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace zxsim {

namespace {

// Coefficients in the power basis (1, w, w^2, w^3), where w^4 = -1.
// The stored basis (1, w, i, w^-1) maps onto it with w^-1 = -w^3.
using Poly = std::array<BigInt, 4>;

Poly to_poly(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d) {
  return {a, b, c, -d};
}

void rotate_once(Poly& p) {
  // p * w: every coefficient moves up a degree, w^4 wraps to -1.
  BigInt top = -p[3];
  p[3] = std::move(p[2]);
  p[2] = std::move(p[1]);
  p[1] = std::move(p[0]);
  p[0] = std::move(top);
}

unsigned trailing_zeros(const BigInt& x) {
  return static_cast<unsigned>(boost::multiprecision::lsb(boost::multiprecision::abs(x)));
}

// a + u / sqrt(2) evaluated without catastrophic cancellation.
long double add_over_sqrt2(const BigInt& a, const BigInt& u) {
  const long double sqrt2 = std::sqrt(2.0L);
  const long double fa = a.convert_to<long double>();
  const long double fu = u.convert_to<long double>();
  if (a.sign() * u.sign() >= 0) return fa + fu / sqrt2;
  // a + u/sqrt2 = (2a^2 - u^2) / (2 (a - u/sqrt2)), with an exact numerator.
  const BigInt num = 2 * a * a - u * u;
  return num.convert_to<long double>() / (2.0L * (fa - fu / sqrt2));
}

}  // namespace

std::string RealForm::to_string() const {
  std::ostringstream os;
  const bool has_root = !y.is_zero();
  if (!has_root) {
    os << x;
  } else if (x.is_zero()) {
    os << y << "*sqrt2";
  } else {
    os << "(" << x << (y.sign() < 0 ? "-" : "+") << boost::multiprecision::abs(y) << "*sqrt2)";
  }
  if (k != 0) os << "/2^" << k;
  return os.str();
}

Scalar::Scalar(long k, BigInt a, BigInt b, BigInt c, BigInt d)
    : k_(k), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  canonicalise();
}

void Scalar::canonicalise() {
  if (is_zero()) {
    k_ = 0;
    return;
  }
  unsigned shift = std::numeric_limits<unsigned>::max();
  for (const BigInt* x : {&a_, &b_, &c_, &d_}) {
    if (!x->is_zero()) shift = std::min(shift, trailing_zeros(*x));
  }
  if (shift == 0) return;
  // Exact division: each non-zero coefficient has at least `shift` trailing zeros.
  a_ /= BigInt(1) << shift;
  b_ /= BigInt(1) << shift;
  c_ /= BigInt(1) << shift;
  d_ /= BigInt(1) << shift;
  k_ -= static_cast<long>(shift);
}

Scalar Scalar::from_phase(int m) {
  switch (((m % 8) + 8) % 8) {
    case 0: return Scalar(0, 1, 0, 0, 0);
    case 1: return Scalar(0, 0, 1, 0, 0);
    case 2: return Scalar(0, 0, 0, 1, 0);
    case 3: return Scalar(0, 0, 0, 0, -1);
    case 4: return Scalar(0, -1, 0, 0, 0);
    case 5: return Scalar(0, 0, -1, 0, 0);
    case 6: return Scalar(0, 0, 0, -1, 0);
    default: return Scalar(0, 0, 0, 0, 1);
  }
}

Scalar Scalar::one_over_sqrt2_power(long p) {
  if (p % 2 == 0) return Scalar(p / 2, 1, 0, 0, 0);
  // (1/sqrt2)^p = (1/2)^((p+1)/2) * sqrt2, and sqrt2 = w + w^-1.
  return Scalar((p + 1) / 2, 0, 1, 0, 1);
}

Scalar Scalar::one_plus_phase(int m) { return one() + from_phase(m); }

Scalar Scalar::parse(std::string_view text) {
  std::string s(text);
  std::replace(s.begin(), s.end(), ';', ' ');
  std::replace(s.begin(), s.end(), ',', ' ');
  const auto open = s.find('(');
  const auto close = s.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open) {
    throw std::invalid_argument("scalar text must look like \"(k; a, b, c, d)\"");
  }
  std::istringstream is(s.substr(open + 1, close - open - 1));
  long k = 0;
  std::string parts[4];
  if (!(is >> k >> parts[0] >> parts[1] >> parts[2] >> parts[3])) {
    throw std::invalid_argument("scalar text must have five integer fields");
  }
  std::string rest;
  if (is >> rest) throw std::invalid_argument("trailing fields in scalar text");
  BigInt coeffs[4];
  for (int i = 0; i < 4; ++i) {
    const auto& p = parts[i];
    const std::size_t digits_from = (!p.empty() && (p[0] == '-' || p[0] == '+')) ? 1 : 0;
    if (p.size() == digits_from ||
        !std::all_of(p.begin() + static_cast<long>(digits_from), p.end(),
                     [](unsigned char ch) { return std::isdigit(ch) != 0; })) {
      throw std::invalid_argument("bad integer in scalar text: " + p);
    }
    coeffs[i] = BigInt(p[0] == '+' ? p.substr(1) : p);
  }
  return Scalar(k, coeffs[0], coeffs[1], coeffs[2], coeffs[3]);
}

Scalar Scalar::conj() const {
  // conj(w) = w^-1, conj(i) = -i.
  return Scalar(k_, a_, d_, -c_, b_);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  r.c_ = -r.c_;
  r.d_ = -r.d_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (k_ >= other.k_) {
    const BigInt f = BigInt(1) << static_cast<unsigned>(k_ - other.k_);
    a_ += other.a_ * f;
    b_ += other.b_ * f;
    c_ += other.c_ * f;
    d_ += other.d_ * f;
  } else {
    const BigInt f = BigInt(1) << static_cast<unsigned>(other.k_ - k_);
    a_ = a_ * f + other.a_;
    b_ = b_ * f + other.b_;
    c_ = c_ * f + other.c_;
    d_ = d_ * f + other.d_;
    k_ = other.k_;
  }
  canonicalise();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  if (is_zero() || other.is_zero()) return *this = Scalar();
  const Poly p = to_poly(a_, b_, c_, d_);
  const Poly q = to_poly(other.a_, other.b_, other.c_, other.d_);
  Poly r;
  for (int i = 0; i < 4; ++i) {
    if (p[i].is_zero()) continue;
    for (int j = 0; j < 4; ++j) {
      if (q[j].is_zero()) continue;
      const int n = i + j;
      if (n < 4) {
        r[n] += p[i] * q[j];
      } else {
        r[n - 4] -= p[i] * q[j];
      }
    }
  }
  k_ += other.k_;
  a_ = std::move(r[0]);
  b_ = std::move(r[1]);
  c_ = std::move(r[2]);
  d_ = -r[3];
  canonicalise();
  return *this;
}

void Scalar::mul_phase(int m) {
  m = ((m % 8) + 8) % 8;
  if (m == 0 || is_zero()) return;
  Poly p = to_poly(a_, b_, c_, d_);
  for (int i = 0; i < m; ++i) rotate_once(p);
  a_ = std::move(p[0]);
  b_ = std::move(p[1]);
  c_ = std::move(p[2]);
  d_ = -p[3];
}

void Scalar::mul_sqrt2_power(long e) {
  if (is_zero()) return;
  if (e % 2 != 0) {
    // * (w - w^3) in the power basis.
    Poly p = to_poly(a_, b_, c_, d_);
    Poly w = p;
    rotate_once(w);
    Poly w3 = w;
    rotate_once(w3);
    rotate_once(w3);
    a_ = w[0] - w3[0];
    b_ = w[1] - w3[1];
    c_ = w[2] - w3[2];
    d_ = -(w[3] - w3[3]);
    e -= 1;
  }
  k_ -= e / 2;
  canonicalise();
}

std::optional<RealForm> Scalar::as_real() const {
  if (!c_.is_zero() || b_ != d_) return std::nullopt;
  RealForm r{k_, a_, b_};
  if (r.k < 0) {
    r.x <<= static_cast<unsigned>(-r.k);
    r.y <<= static_cast<unsigned>(-r.k);
    r.k = 0;
  }
  return r;
}

std::complex<double> Scalar::to_complex() const {
  if (is_zero()) return {0.0, 0.0};
  // long double covers exponents up to 2^16383; beyond ~2^4000 the
  // coefficients are truncated, far below double precision.
  long msb = 0;
  for (const BigInt* x : {&a_, &b_, &c_, &d_}) {
    if (!x->is_zero()) {
      msb = std::max<long>(msb, static_cast<long>(boost::multiprecision::msb(boost::multiprecision::abs(*x))));
    }
  }
  const long shift = msb > 4000 ? msb - 4000 : 0;
  auto scaled = [shift](const BigInt& x) {
    return shift == 0 ? x : BigInt(x / (BigInt(1) << static_cast<unsigned>(shift)));
  };
  const BigInt sa = scaled(a_), sb = scaled(b_), sc = scaled(c_), sd = scaled(d_);
  const long double re = add_over_sqrt2(sa, sb + sd);
  const long double im = add_over_sqrt2(sc, sb - sd);
  const int exponent = static_cast<int>(shift - k_);
  return {static_cast<double>(std::ldexp(re, exponent)), static_cast<double>(std::ldexp(im, exponent))};
}

std::string Scalar::to_string() const {
  std::ostringstream os;
  os << "(" << k_ << "; " << a_ << ", " << b_ << ", " << c_ << ", " << d_ << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace zxsim
