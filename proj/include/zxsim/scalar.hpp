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

#pragma once

#include <complex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace zxsim {

using BigInt = boost::multiprecision::cpp_int;

/// Exact real value of the form (x + y*sqrt(2)) / 2^k.
struct RealForm {
  long k = 0;
  BigInt x;
  BigInt y;

  bool operator==(const RealForm&) const = default;
  std::string to_string() const;
};

/**
 * Exact element of the ring Z[1/2, w] with w = e^{i pi/4}.
 *
 * The value is (a + b*w + c*i + d*w^-1) / 2^k. Every constructor and
 * operation returns the canonical form: all common factors of two are
 * divided out of (a, b, c, d) (k may become negative), and zero is stored
 * as k = 0 with all coefficients zero. Canonical forms are unique, so
 * equality of values is equality of representations.
 */
class Scalar {
 public:
  Scalar() = default;
  Scalar(long k, BigInt a, BigInt b, BigInt c, BigInt d);

  static Scalar zero() { return {}; }
  static Scalar one() { return Scalar(0, 1, 0, 0, 0); }
  /// w^m for m taken mod 8.
  static Scalar from_phase(int m);
  /// (1/sqrt 2)^p, any sign of p.
  static Scalar one_over_sqrt2_power(long p);
  static Scalar sqrt2_power(long p) { return one_over_sqrt2_power(-p); }
  /// 1 + w^m, the value of a zero-legged Z spider with phase m*pi/4.
  static Scalar one_plus_phase(int m);
  /// Parses the "(k; a, b, c, d)" text form. Throws std::invalid_argument.
  static Scalar parse(std::string_view text);

  long k() const { return k_; }
  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }
  const BigInt& d() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero(); }

  Scalar conj() const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other) { return *this += -other; }
  Scalar& operator*=(const Scalar& other);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  bool operator==(const Scalar&) const = default;

  /// In-place multiplication by w^m; a coefficient rotation.
  void mul_phase(int m);
  /// In-place multiplication by sqrt(2)^e.
  void mul_sqrt2_power(long e);

  /// Returns (k, x, y) when the value is real, i.e. c == 0 and b == d.
  /// A negative exponent is folded into x and y so that k >= 0.
  std::optional<RealForm> as_real() const;
  std::complex<double> to_complex() const;
  /// "(k; a, b, c, d)", exact.
  std::string to_string() const;

 private:
  void canonicalise();

  long k_ = 0;
  BigInt a_, b_, c_, d_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace zxsim
