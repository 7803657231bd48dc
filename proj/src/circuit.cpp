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

#include "zxsim/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>

#include "zxsim/errors.hpp"

namespace zxsim {

std::size_t arity(GateKind k) {
  switch (k) {
    case GateKind::CNOT:
    case GateKind::CZ: return 2;
    case GateKind::CCZ: return 3;
    default: return 1;
  }
}

std::string_view gate_name(GateKind k) {
  switch (k) {
    case GateKind::CNOT: return "cx";
    case GateKind::CZ: return "cz";
    case GateKind::CCZ: return "ccz";
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::Z: return "z";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::ZPhase: return "rz";
    case GateKind::XPhase: return "rx";
  }
  return "?";
}

Circuit& Circuit::add(GateKind k, std::vector<std::size_t> qubits, int m) {
  if (qubits.size() != arity(k)) {
    throw ConstructionError(std::string(gate_name(k)) + " takes " + std::to_string(arity(k)) + " qubits");
  }
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] >= n_qubits) throw ConstructionError("qubit index out of range");
    for (std::size_t j = 0; j < i; ++j) {
      if (qubits[i] == qubits[j]) throw ConstructionError("repeated qubit operand");
    }
  }
  const bool phased = k == GateKind::ZPhase || k == GateKind::XPhase;
  gates.push_back(Gate{k, std::move(qubits), phased ? ((m % 8) + 8) % 8 : 0});
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_qubits > n_qubits) throw ConstructionError("appending a wider circuit");
  for (const Gate& g : other.gates) add(g.kind, g.qubits, g.m);
  return *this;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
  enum Kind { Ident, Int, Symbol, String, End } kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      if (i_ >= s_.size()) {
        out.push_back({Token::End, "", line_, col_});
        return out;
      }
      const char c = s_[i_];
      const std::size_t l = line_, co = col_;
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string t;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) t += take();
        out.push_back({Token::Ident, t, l, co});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string t;
        while (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '.')) t += take();
        out.push_back({Token::Int, t, l, co});
      } else if (c == '"') {
        take();
        std::string t;
        while (i_ < s_.size() && s_[i_] != '"' && s_[i_] != '\n') t += take();
        if (i_ >= s_.size() || s_[i_] != '"') throw ParseError("unterminated string", l, co);
        take();
        out.push_back({Token::String, t, l, co});
      } else if (std::string_view("[](),;*/-+").find(c) != std::string_view::npos) {
        out.push_back({Token::Symbol, std::string(1, take()), l, co});
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", l, co);
      }
    }
  }

 private:
  char take() {
    const char c = s_[i_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space() {
    while (i_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[i_]))) {
        take();
      } else if (s_.substr(i_, 2) == "//") {
        while (i_ < s_.size() && s_[i_] != '\n') take();
      } else {
        return;
      }
    }
  }

  std::string_view s_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

  Circuit run() {
    if (peek().kind == Token::Ident && peek().text == "OPENQASM") {
      next();
      const Token v = next();
      if (v.kind != Token::Int || v.text != "2.0") throw ParseError("expected version 2.0 in header", v.line, v.col);
      expect(";");
    }
    while (peek().kind == Token::Ident && peek().text == "include") {
      next();
      const Token f = next();
      if (f.kind != Token::String) throw ParseError("include needs a quoted file name", f.line, f.col);
      expect(";");
    }
    const Token q = next();
    if (q.kind != Token::Ident || q.text != "qreg") throw ParseError("expected qreg declaration", q.line, q.col);
    const Token name = next();
    if (name.kind != Token::Ident) throw ParseError("expected register name", name.line, name.col);
    reg_ = name.text;
    expect("[");
    const std::size_t n = integer("register size");
    expect("]");
    expect(";");
    Circuit c(n);
    while (peek().kind != Token::End) statement(c);
    return c;
  }

 private:
  const Token& peek() const { return t_[p_]; }
  Token next() { return t_[p_ < t_.size() - 1 ? p_++ : p_]; }

  void expect(const std::string& sym) {
    const Token t = next();
    if (t.kind != Token::Symbol || t.text != sym) {
      throw ParseError("expected '" + sym + "'" + (t.kind == Token::End ? " before end of input" : " near '" + t.text + "'"),
                       t.line, t.col);
    }
  }

  bool accept(const std::string& sym) {
    if (peek().kind == Token::Symbol && peek().text == sym) {
      next();
      return true;
    }
    return false;
  }

  std::size_t integer(const char* what) {
    const Token t = next();
    if (t.kind != Token::Int || t.text.find('.') != std::string::npos) {
      throw ParseError(std::string("expected integer ") + what, t.line, t.col);
    }
    try {
      return std::stoul(t.text);
    } catch (const std::exception&) {
      throw ParseError(std::string("integer out of range for ") + what, t.line, t.col);
    }
  }

  // [-] [c '*'] pi ['/' d]  |  0 ; returns the multiple of pi/4.
  int angle(const Token& gate) {
    const Token start = peek();
    long sign = 1;
    if (accept("-")) sign = -1;
    long num = 1;
    if (peek().kind == Token::Int && peek().text.find('.') != std::string::npos) {
      throw ParseError("angle of " + gate.text + " must be a symbolic multiple of pi/4, not a decimal", start.line,
                       start.col);
    }
    if (peek().kind == Token::Int) {
      num = static_cast<long>(integer("angle coefficient"));
      if (!(peek().kind == Token::Symbol && peek().text == "*")) {
        if (num == 0) return 0;
        throw ParseError("angle of " + gate.text + " must be a symbolic multiple of pi/4", start.line, start.col);
      }
      expect("*");
    }
    const Token pi = next();
    if (pi.kind != Token::Ident || pi.text != "pi") {
      throw ParseError("angle of " + gate.text + " must be a symbolic multiple of pi/4", pi.line, pi.col);
    }
    long den = 1;
    if (accept("/")) den = static_cast<long>(integer("angle denominator"));
    if (den == 0 || (4 * num) % den != 0) {
      throw ParseError("angle of " + gate.text + " is not a multiple of pi/4", start.line, start.col);
    }
    return static_cast<int>(((sign * 4 * num / den) % 8 + 8) % 8);
  }

  std::size_t operand() {
    const Token r = next();
    if (r.kind != Token::Ident || r.text != reg_) throw ParseError("expected register '" + reg_ + "'", r.line, r.col);
    expect("[");
    const std::size_t i = integer("qubit index");
    expect("]");
    return i;
  }

  void statement(Circuit& c) {
    const Token g = next();
    if (g.kind != Token::Ident) throw ParseError("expected a gate name", g.line, g.col);
    static const std::pair<const char*, GateKind> table[] = {
        {"cx", GateKind::CNOT}, {"CX", GateKind::CNOT}, {"cz", GateKind::CZ}, {"ccz", GateKind::CCZ},
        {"h", GateKind::H},     {"x", GateKind::X},     {"z", GateKind::Z},   {"s", GateKind::S},
        {"sdg", GateKind::Sdg}, {"t", GateKind::T},     {"tdg", GateKind::Tdg}, {"rz", GateKind::ZPhase},
        {"rx", GateKind::XPhase}};
    std::optional<GateKind> kind;
    for (const auto& [n, k] : table) {
      if (g.text == n) kind = k;
    }
    if (!kind) {
      if (g.text == "qreg") throw ParseError("only one qreg is supported", g.line, g.col);
      throw ParseError("unknown gate '" + g.text + "'", g.line, g.col);
    }
    int m = 0;
    const bool phased = *kind == GateKind::ZPhase || *kind == GateKind::XPhase;
    if (phased) {
      if (!accept("(")) throw ParseError("gate '" + g.text + "' requires an angle argument", g.line, g.col);
      m = angle(g);
      expect(")");
    } else if (peek().kind == Token::Symbol && peek().text == "(") {
      throw ParseError("gate '" + g.text + "' takes no parameters", peek().line, peek().col);
    }
    std::vector<std::size_t> qs{operand()};
    while (accept(",")) qs.push_back(operand());
    expect(";");
    try {
      c.add(*kind, qs, m);
    } catch (const ConstructionError& e) {
      throw ParseError("gate '" + g.text + "': " + e.what(), g.line, g.col);
    }
  }

  std::vector<Token> t_;
  std::size_t p_ = 0;
  std::string reg_;
};

std::string angle_text(int m) {
  // m * pi/4 in lowest terms.
  if (m == 0) return "0";
  int num = m, den = 4;
  while (num % 2 == 0 && den > 1) {
    num /= 2;
    den /= 2;
  }
  std::string s = num == 1 ? "pi" : std::to_string(num) + "*pi";
  if (den > 1) s += "/" + std::to_string(den);
  return s;
}

}  // namespace

Circuit parse_qasm(std::string_view text) { return Parser(Lexer(text).run()).run(); }

std::string emit_qasm(const Circuit& c) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" << c.n_qubits << "];\n";
  for (const Gate& g : c.gates) {
    os << gate_name(g.kind);
    if (g.kind == GateKind::ZPhase || g.kind == GateKind::XPhase) os << "(" << angle_text(g.m) << ")";
    for (std::size_t i = 0; i < g.qubits.size(); ++i) os << (i ? "," : " ") << "q[" << g.qubits[i] << "]";
    os << ";\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Translation

namespace {

class Builder {
 public:
  Builder(std::size_t n, Diagram& d) : d_(d), last_(n), pending_(n, EdgeKind::Simple) {
    for (std::size_t q = 0; q < n; ++q) last_[q] = d_.add_input();
  }

  VertexId spider(std::size_t q, VertexKind k, int m) {
    const VertexId v = d_.add_vertex(k, Phase(m));
    d_.add_edge(last_[q], v, pending_[q]);
    pending_[q] = EdgeKind::Simple;
    last_[q] = v;
    return v;
  }

  VertexId free_spider(int m) { return d_.add_vertex(VertexKind::Z, Phase(m)); }

  // Phase gadget on the given targets with top phase m.
  void gadget(std::initializer_list<VertexId> targets, int m) {
    const VertexId base = d_.add_vertex(VertexKind::Z);
    for (VertexId t : targets) d_.add_edge(base, t, EdgeKind::Hadamard);
    const VertexId top = d_.add_vertex(VertexKind::Z, Phase(m));
    d_.add_edge(base, top, EdgeKind::Hadamard);
  }

  void hadamard(std::size_t q) { pending_[q] = toggled(pending_[q]); }

  void finish() {
    for (std::size_t q = 0; q < last_.size(); ++q) {
      const VertexId o = d_.add_output();
      d_.add_edge(last_[q], o, pending_[q]);
    }
  }

  Diagram& d_;

 private:
  std::vector<VertexId> last_;
  std::vector<EdgeKind> pending_;
};

}  // namespace

Diagram to_zx(const Circuit& c, CczMode mode) {
  Diagram d;
  Builder b(c.n_qubits, d);
  for (const Gate& g : c.gates) {
    const auto& q = g.qubits;
    switch (g.kind) {
      case GateKind::H: b.hadamard(q[0]); break;
      case GateKind::X: b.spider(q[0], VertexKind::X, 4); break;
      case GateKind::Z: b.spider(q[0], VertexKind::Z, 4); break;
      case GateKind::S: b.spider(q[0], VertexKind::Z, 2); break;
      case GateKind::Sdg: b.spider(q[0], VertexKind::Z, 6); break;
      case GateKind::T: b.spider(q[0], VertexKind::Z, 1); break;
      case GateKind::Tdg: b.spider(q[0], VertexKind::Z, 7); break;
      case GateKind::ZPhase: b.spider(q[0], VertexKind::Z, g.m); break;
      case GateKind::XPhase: b.spider(q[0], VertexKind::X, g.m); break;
      case GateKind::CNOT: {
        const VertexId ctl = b.spider(q[0], VertexKind::Z, 0);
        const VertexId tgt = b.spider(q[1], VertexKind::X, 0);
        d.add_edge(ctl, tgt, EdgeKind::Simple);
        d.scalar().mul_sqrt2_power(1);
        break;
      }
      case GateKind::CZ: {
        const VertexId u = b.spider(q[0], VertexKind::Z, 0);
        const VertexId v = b.spider(q[1], VertexKind::Z, 0);
        d.add_edge(u, v, EdgeKind::Hadamard);
        d.scalar().mul_sqrt2_power(1);
        break;
      }
      case GateKind::CCZ: {
        if (mode == CczMode::SevenT) {
          // 4 x y z = x + y + z - (x^y) - (x^z) - (y^z) + (x^y^z)
          const VertexId x = b.spider(q[0], VertexKind::Z, 1);
          const VertexId y = b.spider(q[1], VertexKind::Z, 1);
          const VertexId z = b.spider(q[2], VertexKind::Z, 1);
          b.gadget({x, y}, 7);
          b.gadget({x, z}, 7);
          b.gadget({y, z}, 7);
          b.gadget({x, y, z}, 1);
          d.scalar().mul_sqrt2_power(5);
        } else {
          // Toffoli-style layout: an ancilla-like spider w carries x3 through
          // a Hadamard edge and the three gadgets act on (w, x1, x2).
          const VertexId x1 = b.spider(q[0], VertexKind::Z, 0);
          const VertexId x2 = b.spider(q[1], VertexKind::Z, 0);
          const VertexId x3 = b.spider(q[2], VertexKind::Z, 6);
          const VertexId w = b.free_spider(7);
          d.add_edge(w, x3, EdgeKind::Hadamard);
          b.gadget({w, x1}, 7);
          b.gadget({w, x2}, 7);
          b.gadget({w, x1, x2}, 1);
          Scalar f(0, 4, 0, 0, 0);
          f.mul_phase(1);
          d.scalar() *= f;
        }
        break;
      }
    }
  }
  b.finish();
  return d;
}

std::size_t t_count(const Circuit& c, CczMode mode) {
  std::size_t t = 0;
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::T:
      case GateKind::Tdg: ++t; break;
      case GateKind::ZPhase:
      case GateKind::XPhase: t += g.m % 2; break;
      case GateKind::CCZ: t += mode == CczMode::SevenT ? 7 : 4; break;
      default: break;
    }
  }
  return t;
}

}  // namespace zxsim
