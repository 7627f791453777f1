// Copyright 2026 The qassert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qassert/parser.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <sstream>

#include "qassert/errors.hpp"

namespace qassert {

namespace {

const std::map<std::string, GateKind>& keyword_table() {
  static const std::map<std::string, GateKind> table = {
      {"h", GateKind::H},        {"x", GateKind::X},
      {"y", GateKind::Y},        {"z", GateKind::Z},
      {"s", GateKind::S},        {"sdg", GateKind::Sdg},
      {"t", GateKind::T},        {"cx", GateKind::CX},
      {"cp", GateKind::CP},      {"swap", GateKind::Swap},
      {"reset", GateKind::Reset}};
  return table;
}

struct Token {
  enum class Kind { Ident, Integer, Real, Punct, End };
  Kind kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    skip_space_and_comments();
    current_.line = line_;
    current_.col = col_;
    if (pos_ >= src_.size()) {
      current_ = {Token::Kind::End, "", line_, col_};
      return;
    }
    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string text;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_')) {
        text += src_[pos_];
        bump();
      }
      current_ = {Token::Kind::Ident, text, current_.line, current_.col};
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::string text;
      bool real = false;
      while (pos_ < src_.size() &&
             (std::isdigit(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '.' || src_[pos_] == 'e' || src_[pos_] == 'E' ||
              ((src_[pos_] == '+' || src_[pos_] == '-') && !text.empty() &&
               (text.back() == 'e' || text.back() == 'E')))) {
        if (!std::isdigit(static_cast<unsigned char>(src_[pos_]))) real = true;
        text += src_[pos_];
        bump();
      }
      current_ = {real ? Token::Kind::Real : Token::Kind::Integer, text,
                  current_.line, current_.col};
      return;
    }
    current_ = {Token::Kind::Punct, std::string(1, c), line_, col_};
    bump();
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token current_{Token::Kind::End, "", 1, 1};
};

[[noreturn]] void syntax_error(const Token& at, const std::string& expected) {
  std::ostringstream os;
  os << "at " << at.line << ":" << at.col << ", expected " << expected
     << ", found ";
  if (at.kind == Token::Kind::End) {
    os << "end of input";
  } else {
    os << "'" << at.text << "'";
  }
  throw Error(ErrorCode::SyntaxError, os.str());
}

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  SubroutineSpec parse() {
    expect_ident("def");
    spec_.name = expect(Token::Kind::Ident, "subroutine name").text;
    expect_punct("(");
    expect_ident("qubit");
    expect_punct("[");
    spec_.n_qubits = expect_integer("register size");
    if (spec_.n_qubits < 1) {
      throw Error(ErrorCode::InvalidArgument, "register size must be >= 1");
    }
    expect_punct("]");
    spec_.register_name = expect(Token::Kind::Ident, "register name").text;
    while (lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == ",") {
      lex_.take();
      expect_ident("angle");
      spec_.param_names.push_back(
          expect(Token::Kind::Ident, "parameter name").text);
    }
    expect_punct(")");
    expect_punct("{");
    while (!(lex_.peek().kind == Token::Kind::Punct &&
             lex_.peek().text == "}")) {
      if (lex_.peek().kind == Token::Kind::End) {
        syntax_error(lex_.peek(), "'}' or gate statement");
      }
      parse_statement();
    }
    lex_.take();  // '}'
    spec_.param_arity = static_cast<int>(spec_.param_names.size());
    spec_.has_template = true;
    finalize_builder();
    return spec_;
  }

 private:
  void parse_statement() {
    const Token kw = expect(Token::Kind::Ident, "gate keyword");
    const auto it = keyword_table().find(kw.text);
    if (it == keyword_table().end()) {
      throw Error(ErrorCode::UnknownGate, "'" + kw.text + "' at " +
                                              std::to_string(kw.line) + ":" +
                                              std::to_string(kw.col));
    }
    TemplateGate gate;
    gate.kind = it->second;
    if (gate_kind_takes_angle(gate.kind)) {
      expect_punct("(");
      gate.angle = parse_angle();
      expect_punct(")");
    }
    gate.qubits.push_back(parse_operand());
    for (int i = 1; i < gate_kind_arity(gate.kind); ++i) {
      expect_punct(",");
      gate.qubits.push_back(parse_operand());
    }
    expect_punct(";");
    spec_.body.push_back(std::move(gate));
  }

  int parse_operand() {
    const Token reg = expect(Token::Kind::Ident, "register name");
    if (reg.text != spec_.register_name) {
      syntax_error(reg, "register '" + spec_.register_name + "'");
    }
    expect_punct("[");
    const int index = expect_integer("qubit index");
    expect_punct("]");
    if (index < 0 || index >= spec_.n_qubits) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "qubit index " + std::to_string(index) +
                      " outside register of size " +
                      std::to_string(spec_.n_qubits));
    }
    return index;
  }

  // [+|-]? ( number [* pi [/ number]] | pi [/ number] | param_name )
  AngleExpr parse_angle() {
    AngleExpr expr;
    double sign = 1.0;
    if (lex_.peek().kind == Token::Kind::Punct &&
        (lex_.peek().text == "-" || lex_.peek().text == "+")) {
      if (lex_.take().text == "-") sign = -1.0;
    }
    const Token t = lex_.take();
    if (t.kind == Token::Kind::Ident) {
      if (t.text == "pi") {
        expr.value = sign * M_PI * maybe_divisor();
        return expr;
      }
      for (std::size_t i = 0; i < spec_.param_names.size(); ++i) {
        if (spec_.param_names[i] == t.text) {
          if (sign < 0) {
            syntax_error(t, "unsigned parameter reference");
          }
          expr.is_param = true;
          expr.param_index = static_cast<int>(i);
          return expr;
        }
      }
      syntax_error(t, "angle literal or declared parameter");
    }
    if (t.kind != Token::Kind::Integer && t.kind != Token::Kind::Real) {
      syntax_error(t, "angle expression");
    }
    double value = std::stod(t.text);
    if (lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == "*") {
      lex_.take();
      expect_ident("pi");
      value *= M_PI * maybe_divisor();
    }
    expr.value = sign * value;
    return expr;
  }

  double maybe_divisor() {
    if (lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == "/") {
      lex_.take();
      const Token d = lex_.take();
      if (d.kind != Token::Kind::Integer && d.kind != Token::Kind::Real) {
        syntax_error(d, "divisor");
      }
      return 1.0 / std::stod(d.text);
    }
    return 1.0;
  }

  Token expect(Token::Kind kind, const std::string& what) {
    if (lex_.peek().kind != kind) syntax_error(lex_.peek(), what);
    return lex_.take();
  }

  void expect_ident(const std::string& word) {
    const Token t = lex_.peek();
    if (t.kind != Token::Kind::Ident || t.text != word) {
      syntax_error(t, "'" + word + "'");
    }
    lex_.take();
  }

  void expect_punct(const std::string& p) {
    const Token t = lex_.peek();
    if (t.kind != Token::Kind::Punct || t.text != p) {
      syntax_error(t, "'" + p + "'");
    }
    lex_.take();
  }

  int expect_integer(const std::string& what) {
    const Token t = expect(Token::Kind::Integer, what);
    return std::stoi(t.text);
  }

  void finalize_builder() {
    const auto body = spec_.body;
    const int n_qubits = spec_.n_qubits;
    const std::string name = spec_.name;
    spec_.builder = [body, n_qubits, name](const ParamVector& theta) {
      Circuit c(n_qubits, name);
      for (const TemplateGate& tg : body) {
        const double angle =
            tg.angle.is_param
                ? param_real(theta.at(static_cast<std::size_t>(
                      tg.angle.param_index)))
                : tg.angle.value;
        switch (tg.kind) {
          case GateKind::CX:
            c.append(Gate::cx(tg.qubits[0], tg.qubits[1]));
            break;
          case GateKind::CP:
            c.append(Gate::cp(angle, tg.qubits[0], tg.qubits[1]));
            break;
          case GateKind::Swap:
            c.append(Gate::swap(tg.qubits[0], tg.qubits[1]));
            break;
          default:
            c.append(Gate{tg.kind, {tg.qubits[0]}, {}});
            break;
        }
      }
      return c;
    };
  }

  Lexer lex_;
  SubroutineSpec spec_;
};

std::string format_angle(double value) {
  // prefer exact rational multiples of pi, else a decimal literal
  for (int den = 1; den <= 64; ++den) {
    for (int num = -16; num <= 16; ++num) {
      if (num == 0) continue;
      if (std::abs(value - num * M_PI / den) < 1e-14) {
        std::ostringstream os;
        if (num == 1) {
          os << "pi";
        } else if (num == -1) {
          os << "-pi";
        } else {
          os << num << "*pi";
        }
        if (den != 1) os << "/" << den;
        return os.str();
      }
    }
  }
  std::ostringstream os;
  os.precision(17);
  os << value;
  return os.str();
}

}  // namespace

double param_real(const Param& p) {
  if (std::holds_alternative<double>(p)) return std::get<double>(p);
  return static_cast<double>(std::get<std::int64_t>(p));
}

std::int64_t param_int(const Param& p) {
  if (std::holds_alternative<std::int64_t>(p)) return std::get<std::int64_t>(p);
  const double v = std::get<double>(p);
  const auto r = static_cast<std::int64_t>(std::llround(v));
  if (std::abs(v - static_cast<double>(r)) > 1e-12) {
    throw Error(ErrorCode::InvalidArgument,
                "expected an integer parameter, got " + std::to_string(v));
  }
  return r;
}

Circuit bind(const SubroutineSpec& spec, const ParamVector& theta) {
  if (static_cast<int>(theta.size()) != spec.param_arity) {
    throw Error(ErrorCode::ArityMismatch,
                "subroutine '" + spec.name + "' takes " +
                    std::to_string(spec.param_arity) + " parameter(s), got " +
                    std::to_string(theta.size()));
  }
  if (!spec.builder) {
    throw Error(ErrorCode::InvalidArgument, "subroutine spec has no builder");
  }
  return spec.builder(theta);
}

SubroutineSpec subroutine_of_circuit(Circuit circuit) {
  SubroutineSpec spec;
  spec.name = circuit.name().empty() ? "circuit" : circuit.name();
  spec.n_qubits = circuit.n_qubits();
  spec.param_arity = 0;
  spec.builder = [circuit](const ParamVector&) { return circuit; };
  return spec;
}

SubroutineSpec parse_subroutine(std::string_view source) {
  return Parser(source).parse();
}

std::string serialize_subroutine(const SubroutineSpec& spec) {
  if (!spec.has_template) {
    throw Error(ErrorCode::InvalidArgument,
                "spec was not parsed from source and has no text form");
  }
  std::ostringstream os;
  os << "def " << spec.name << "(qubit[" << spec.n_qubits << "] "
     << spec.register_name;
  for (const auto& p : spec.param_names) os << ", angle " << p;
  os << ") {\n";
  for (const TemplateGate& g : spec.body) {
    os << "  " << gate_kind_name(g.kind);
    if (gate_kind_takes_angle(g.kind)) {
      os << "(";
      if (g.angle.is_param) {
        os << spec.param_names[static_cast<std::size_t>(g.angle.param_index)];
      } else {
        os << format_angle(g.angle.value);
      }
      os << ")";
    }
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
      os << (i == 0 ? " " : ", ") << spec.register_name << "[" << g.qubits[i]
         << "]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string serialize_circuit(const Circuit& circuit) {
  SubroutineSpec spec;
  spec.has_template = true;
  spec.name = circuit.name().empty() ? "circuit" : circuit.name();
  spec.n_qubits = circuit.n_qubits();
  spec.register_name = "q";
  for (const Gate& g : circuit.gates()) {
    if (g.kind == GateKind::Unitary) {
      throw Error(ErrorCode::InvalidArgument,
                  "matrix-defined gates have no text form");
    }
    TemplateGate tg;
    tg.kind = g.kind;
    tg.qubits = g.targets;
    tg.angle.value = g.angle;
    spec.body.push_back(std::move(tg));
  }
  return serialize_subroutine(spec);
}

}  // namespace qassert
