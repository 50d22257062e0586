#include "twistor4/surface_expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>

#include <json.hpp>

#include "twistor4/errors.hpp"

namespace twistor4 {

namespace {

struct FunctionName {
  std::string_view name;
  Function func;
};

constexpr FunctionName kFunctions[] = {
    {"sin", Function::Sin},   {"cos", Function::Cos},   {"tan", Function::Tan},
    {"exp", Function::Exp},   {"log", Function::Log},   {"sqrt", Function::Sqrt},
    {"sinh", Function::Sinh}, {"cosh", Function::Cosh}, {"atan", Function::Atan},
};

std::optional<Function> lookup_function(std::string_view name) {
  for (const auto& f : kFunctions) {
    if (f.name == name) return f.func;
  }
  return std::nullopt;
}

std::string_view function_name(Function func) {
  for (const auto& f : kFunctions) {
    if (f.func == func) return f.name;
  }
  return "?";
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Expr make(ExprNode node) { return Expr(std::make_shared<const ExprNode>(std::move(node))); }

Expr make_leaf(NodeKind kind) {
  ExprNode n;
  n.kind = kind;
  return make(std::move(n));
}

Expr make_binary(NodeKind kind, Expr a, Expr b) {
  ExprNode n;
  n.kind = kind;
  n.args = {std::move(a), std::move(b)};
  return make(std::move(n));
}

bool has_variables(const Expr& e) {
  const auto& n = e.root();
  if (n.kind == NodeKind::VarU || n.kind == NodeKind::VarV) return true;
  for (const auto& a : n.args) {
    if (has_variables(a)) return true;
  }
  return false;
}

// Recursive descent over one comma-separated list of expressions.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<Expr> parse_list() {
    std::vector<Expr> out;
    out.push_back(parse_expr());
    skip_space();
    while (peek() == ',') {
      ++pos_;
      out.push_back(parse_expr());
      skip_space();
    }
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_ + 1); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') return lhs;
      ++pos_;
      lhs = make_binary(c == '+' ? NodeKind::Add : NodeKind::Sub, lhs, parse_term());
    }
  }

  Expr parse_term() {
    Expr lhs = parse_unary();
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '*' && c != '/') return lhs;
      ++pos_;
      lhs = make_binary(c == '*' ? NodeKind::Mul : NodeKind::Div, lhs, parse_unary());
    }
  }

  Expr parse_unary() {
    skip_space();
    if (peek() == '-') {
      ++pos_;
      ExprNode n;
      n.kind = NodeKind::Neg;
      n.args = {parse_unary()};
      return make(std::move(n));
    }
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_primary();
    skip_space();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    const std::size_t exponent_pos = pos_;
    Expr exponent = parse_unary();  // recursion makes ^ right-associative
    if (has_variables(exponent)) {
      pos_ = exponent_pos;
      fail("exponent must be constant");
    }
    ExprNode n;
    n.kind = NodeKind::Pow;
    n.number = eval_jet2(exponent, 0, 0).val;
    n.args = {std::move(base)};
    return make(std::move(n));
  }

  Expr parse_primary() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Expr e = parse_expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  Expr parse_number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    };
    digits();
    if (peek() == '.') {
      ++pos_;
      digits();
    }
    if (peek() == 'e' || peek() == 'E') {
      std::size_t save = pos_++;
      if (peek() == '+' || peek() == '-') ++pos_;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        digits();
      } else {
        pos_ = save;
      }
    }
    const std::string token(text_.substr(start, pos_ - start));
    if (token == ".") {
      pos_ = start;
      fail("malformed number");
    }
    ExprNode n;
    n.kind = NodeKind::Literal;
    n.number = std::stod(token);
    return make(std::move(n));
  }

  Expr parse_identifier() {
    const std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    if (name == "u") return make_leaf(NodeKind::VarU);
    if (name == "v") return make_leaf(NodeKind::VarV);
    if (name == "pi" || name == "e") {
      ExprNode n;
      n.kind = NodeKind::Constant;
      n.name = name;
      n.number = name == "pi" ? std::numbers::pi : std::numbers::e;
      return make(std::move(n));
    }
    const auto func = lookup_function(name);
    if (!func) throw UnknownIdentifier(name);
    expect('(');
    std::vector<Expr> args{parse_expr()};
    skip_space();
    while (peek() == ',') {
      ++pos_;
      args.push_back(parse_expr());
      skip_space();
    }
    expect(')');
    if (args.size() != 1) {
      throw ArityError(name + " takes 1 argument, got " + std::to_string(args.size()));
    }
    ExprNode n;
    n.kind = NodeKind::Func;
    n.func = *func;
    n.args = std::move(args);
    return make(std::move(n));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

double ipow(double x, long n) {
  if (n < 0) return 1.0 / ipow(x, -n);
  double r = 1.0;
  for (long i = 0; i < n; ++i) r *= x;
  return r;
}

Jet2 eval_pow(const Jet2& x, double p, const Expr& node) {
  if (p == std::floor(p) && std::abs(p) < 1e9) {
    const long n = static_cast<long>(p);
    if (n == 0) return Jet2::constant(1.0);
    if (n < 0 && x.val == 0.0) throw DomainError("negative power of zero", node.to_string());
    const double f1 = static_cast<double>(n) * ipow(x.val, n - 1);
    const double f2 = n == 1 ? 0.0 : static_cast<double>(n) * static_cast<double>(n - 1) * ipow(x.val, n - 2);
    return x.compose(ipow(x.val, n), f1, f2);
  }
  if (!(x.val > 0)) throw DomainError("non-integer power of non-positive base", node.to_string());
  const double f0 = std::pow(x.val, p);
  return x.compose(f0, p * f0 / x.val, p * (p - 1) * f0 / (x.val * x.val));
}

Jet2 eval_function(Function f, const Jet2& x, const Expr& node) {
  const double a = x.val;
  switch (f) {
    case Function::Sin:
      return x.compose(std::sin(a), std::cos(a), -std::sin(a));
    case Function::Cos:
      return x.compose(std::cos(a), -std::sin(a), -std::cos(a));
    case Function::Tan: {
      if (std::abs(std::cos(a)) < 1e-12) throw DomainError("tan at a pole", node.to_string());
      const double t = std::tan(a);
      return x.compose(t, 1 + t * t, 2 * t * (1 + t * t));
    }
    case Function::Exp: {
      const double e = std::exp(a);
      return x.compose(e, e, e);
    }
    case Function::Log:
      if (!(a > 0)) throw DomainError("log of non-positive value", node.to_string());
      return x.compose(std::log(a), 1 / a, -1 / (a * a));
    case Function::Sqrt: {
      if (!(a > 0)) throw DomainError("sqrt of non-positive value", node.to_string());
      const double s = std::sqrt(a);
      return x.compose(s, 0.5 / s, -0.25 / (s * a));
    }
    case Function::Sinh:
      return x.compose(std::sinh(a), std::cosh(a), std::sinh(a));
    case Function::Cosh:
      return x.compose(std::cosh(a), std::sinh(a), std::cosh(a));
    case Function::Atan: {
      const double d = 1 + a * a;
      return x.compose(std::atan(a), 1 / d, -2 * a / (d * d));
    }
  }
  return {};
}

Jet2 eval(const Expr& e, double u, double v) {
  const ExprNode& n = e.root();
  switch (n.kind) {
    case NodeKind::VarU:
      return Jet2::var_u(u);
    case NodeKind::VarV:
      return Jet2::var_v(v);
    case NodeKind::Literal:
    case NodeKind::Constant:
      return Jet2::constant(n.number);
    case NodeKind::Add:
      return eval(n.args[0], u, v) + eval(n.args[1], u, v);
    case NodeKind::Sub:
      return eval(n.args[0], u, v) - eval(n.args[1], u, v);
    case NodeKind::Mul:
      return eval(n.args[0], u, v) * eval(n.args[1], u, v);
    case NodeKind::Div: {
      const Jet2 den = eval(n.args[1], u, v);
      if (den.val == 0.0) throw DomainError("division by zero", e.to_string());
      return eval(n.args[0], u, v) / den;
    }
    case NodeKind::Pow:
      return eval_pow(eval(n.args[0], u, v), n.number, e);
    case NodeKind::Neg:
      return -eval(n.args[0], u, v);
    case NodeKind::Func:
      return eval_function(n.func, eval(n.args[0], u, v), e);
  }
  return {};
}

}  // namespace

std::string Expr::to_string() const {
  const ExprNode& n = root();
  auto bin = [&](const char* op) {
    return "(" + n.args[0].to_string() + " " + op + " " + n.args[1].to_string() + ")";
  };
  switch (n.kind) {
    case NodeKind::VarU:
      return "u";
    case NodeKind::VarV:
      return "v";
    case NodeKind::Literal:
      return format_number(n.number);
    case NodeKind::Constant:
      return n.name;
    case NodeKind::Add:
      return bin("+");
    case NodeKind::Sub:
      return bin("-");
    case NodeKind::Mul:
      return bin("*");
    case NodeKind::Div:
      return bin("/");
    case NodeKind::Pow: {
      const std::string ex = n.number < 0 ? "(-" + format_number(-n.number) + ")" : format_number(n.number);
      return "(" + n.args[0].to_string() + "^" + ex + ")";
    }
    case NodeKind::Neg:
      return "(-" + n.args[0].to_string() + ")";
    case NodeKind::Func:
      return std::string(function_name(n.func)) + "(" + n.args[0].to_string() + ")";
  }
  return "?";
}

bool Expr::operator==(const Expr& other) const {
  if (empty() || other.empty()) return empty() == other.empty();
  const ExprNode& a = root();
  const ExprNode& b = other.root();
  if (a.kind != b.kind || a.args.size() != b.args.size()) return false;
  if (a.kind == NodeKind::Literal || a.kind == NodeKind::Pow) {
    if (a.number != b.number) return false;
  }
  if (a.kind == NodeKind::Constant && a.name != b.name) return false;
  if (a.kind == NodeKind::Func && a.func != b.func) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!(a.args[i] == b.args[i])) return false;
  }
  return true;
}

Expr Expr::parse(std::string_view text) {
  auto list = Parser(text).parse_list();
  if (list.size() != 1) throw ArityError("expected a single expression");
  return list.front();
}

double Domain::diameter() const { return std::hypot(u1 - u0, v1 - v0); }

std::string SurfaceDef::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i) out += ", ";
    out += components[i].to_string();
  }
  return out;
}

SurfaceDef parse_surface(std::string_view text, std::string name, Domain domain) {
  auto list = Parser(text).parse_list();
  if (list.size() != 4) {
    throw ArityError("a surface needs 4 components, got " + std::to_string(list.size()));
  }
  SurfaceDef s;
  s.name = std::move(name);
  s.domain = domain;
  // Recover each component's source text by splitting on top-level commas.
  std::size_t depth = 0, start = 0, k = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char c = i < text.size() ? text[i] : ',';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      std::string piece(text.substr(start, i - start));
      const auto b = piece.find_first_not_of(" \t\n");
      const auto e = piece.find_last_not_of(" \t\n");
      s.sources[k++] = b == std::string::npos ? "" : piece.substr(b, e - b + 1);
      start = i + 1;
    }
  }
  for (std::size_t i = 0; i < 4; ++i) s.components[i] = list[i];
  return s;
}

SurfaceDef parse_surface_json(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!j.is_object()) throw SyntaxError("surface JSON must be an object", 1);
  std::string text;
  for (int i = 1; i <= 4; ++i) {
    const std::string key = "f" + std::to_string(i);
    if (!j.contains(key) || !j[key].is_string()) throw ArityError("missing component " + key);
    if (i > 1) text += ", ";
    text += j[key].get<std::string>();
  }
  Domain d;
  if (j.contains("domain")) {
    const auto& dj = j["domain"];
    if (!dj.is_array() || dj.size() != 4) throw ArityError("domain must be [u0, u1, v0, v1]");
    d = {dj[0].get<double>(), dj[1].get<double>(), dj[2].get<double>(), dj[3].get<double>()};
  }
  return parse_surface(text, j.value("name", std::string("expr")), d);
}

std::string surface_to_json(const SurfaceDef& s) {
  nlohmann::json j;
  j["name"] = s.name;
  for (int i = 0; i < 4; ++i) {
    j["f" + std::to_string(i + 1)] = s.sources[i].empty() ? s.components[i].to_string() : s.sources[i];
  }
  j["domain"] = {s.domain.u0, s.domain.u1, s.domain.v0, s.domain.v1};
  return j.dump();
}

Jet2 eval_jet2(const Expr& e, double u, double v) { return eval(e, u, v); }

std::array<Jet2, 4> eval_surface_jet(const SurfaceDef& s, double u, double v) {
  return {eval(s.components[0], u, v), eval(s.components[1], u, v), eval(s.components[2], u, v),
          eval(s.components[3], u, v)};
}

}  // namespace twistor4
