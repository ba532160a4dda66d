#pragma once

// Dimension bookkeeping over the two base units the macro models need:
// money ($) and time (s). Stocks carry $, flows carry $/s.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ecodyn::dims {

struct Dimension {
  int money = 0;
  int time = 0;

  friend constexpr bool operator==(Dimension, Dimension) = default;

  friend constexpr Dimension operator*(Dimension a, Dimension b) {
    return {a.money + b.money, a.time + b.time};
  }
  friend constexpr Dimension operator/(Dimension a, Dimension b) {
    return {a.money - b.money, a.time - b.time};
  }

  /// "$", "$·s^-1", "s", "1", ...
  std::string to_string() const;
};

inline constexpr Dimension kDimensionless{0, 0};
inline constexpr Dimension kMoney{1, 0};
inline constexpr Dimension kTime{0, 1};
inline constexpr Dimension kFlow{1, -1};

enum class Op { leaf, add, sub, mul, div, integrate_dt, differentiate_dt };

/// Expression tree whose leaves are named quantities with a dimension.
/// Binary ops hold two children, the time operators hold one.
struct DimExpr {
  Op op = Op::leaf;
  std::string name;
  Dimension dim;
  std::vector<DimExpr> children;

  static DimExpr leaf(std::string name, Dimension dim);
};

DimExpr operator+(DimExpr a, DimExpr b);
DimExpr operator-(DimExpr a, DimExpr b);
DimExpr operator*(DimExpr a, DimExpr b);
DimExpr operator/(DimExpr a, DimExpr b);
DimExpr integrate_dt(DimExpr e);
DimExpr differentiate_dt(DimExpr e);

std::string to_string(const DimExpr& e);

struct ConsistencyReport {
  bool consistent = false;
  Dimension lhs_dim;
  Dimension rhs_dim;
  /// Path to the first heterogeneous add/sub node, e.g. "rhs.add", or
  /// "relation" when both sides are homogeneous but differ.
  std::optional<std::string> first_violation;
  std::string detail;
};

/// Dimension of a tree. Heterogeneous add/sub nodes take the dimension of
/// their left operand; use check_relation to detect them.
/// Throws StructuralError on malformed trees.
Dimension infer(const DimExpr& e);

ConsistencyReport check_relation(const DimExpr& lhs, const DimExpr& rhs);

// Text front end used by the CLI.

/// Parses "$", "$/s", "1", "s", "$*s^-2", "$·s^-1".
Dimension parse_dimension(std::string_view text);

/// Parses "K:$, Y:$/s, nu:1" into a symbol table.
std::unordered_map<std::string, Dimension> parse_dimension_table(std::string_view text);

struct Relation {
  DimExpr lhs;
  DimExpr rhs;
};

/// Parses "lhs = rhs" with identifiers, numeric literals (dimensionless),
/// + - * /, parentheses, int(e) for integration over time and d(e) for the
/// time derivative. Unknown identifiers are a ValidationError naming them.
Relation parse_relation(std::string_view text,
                        const std::unordered_map<std::string, Dimension>& symbols);

}  // namespace ecodyn::dims
