#pragma once

#include <array>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "twistor4/jet.hpp"

namespace twistor4 {

enum class NodeKind { VarU, VarV, Literal, Constant, Add, Sub, Mul, Div, Pow, Neg, Func };

enum class Function { Sin, Cos, Tan, Exp, Log, Sqrt, Sinh, Cosh, Atan };

struct ExprNode;

/// Immutable expression tree over (u, v). Copies share structure.
class Expr {
 public:
  Expr() = default;
  explicit Expr(std::shared_ptr<const ExprNode> root) : root_(std::move(root)) {}

  const ExprNode& root() const { return *root_; }
  bool empty() const noexcept { return root_ == nullptr; }

  /// Fully parenthesized text that parses back to the same tree.
  std::string to_string() const;

  bool operator==(const Expr& other) const;

  static Expr parse(std::string_view text);

 private:
  std::shared_ptr<const ExprNode> root_;
};

struct ExprNode {
  NodeKind kind = NodeKind::Literal;
  double number = 0;       // Literal value, Constant value, or Pow exponent
  std::string name;        // Constant name
  Function func = Function::Sin;
  std::vector<Expr> args;  // Add/Sub/Mul/Div: 2, Pow/Neg/Func: 1
};

struct Domain {
  double u0 = -1, u1 = 1, v0 = -1, v1 = 1;

  bool contains(double u, double v) const { return u >= u0 && u <= u1 && v >= v0 && v <= v1; }
  double diameter() const;
};

struct SurfaceDef {
  std::string name;
  std::array<Expr, 4> components;
  std::array<std::string, 4> sources;
  Domain domain;

  /// Comma-separated component text as accepted by parse_surface.
  std::string to_string() const;
};

/// Parses "f1, f2, f3, f4". Throws SyntaxError (1-based offset), ArityError,
/// UnknownIdentifier.
SurfaceDef parse_surface(std::string_view text, std::string name = "expr", Domain domain = {});

/// Parses {"name", "f1".."f4", "domain": [u0, u1, v0, v1]}.
SurfaceDef parse_surface_json(std::string_view json_text);
std::string surface_to_json(const SurfaceDef& s);

/// Exact 2-jet at (u, v). Throws DomainError naming the offending subexpression.
Jet2 eval_jet2(const Expr& e, double u, double v);

std::array<Jet2, 4> eval_surface_jet(const SurfaceDef& s, double u, double v);

}  // namespace twistor4
