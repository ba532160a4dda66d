#include "ecodyn/dims.hpp"

#include "ecodyn/error.hpp"

namespace ecodyn::dims {

namespace {

std::string power(const char* unit, int exp) {
  std::string out = unit;
  if (exp != 1) out += "^" + std::to_string(exp);
  return out;
}

const char* op_name(Op op) {
  switch (op) {
    case Op::leaf: return "leaf";
    case Op::add: return "add";
    case Op::sub: return "sub";
    case Op::mul: return "mul";
    case Op::div: return "div";
    case Op::integrate_dt: return "int";
    case Op::differentiate_dt: return "d";
  }
  return "?";
}

std::size_t arity(Op op) {
  switch (op) {
    case Op::leaf: return 0;
    case Op::integrate_dt:
    case Op::differentiate_dt: return 1;
    default: return 2;
  }
}

void check_shape(const DimExpr& e, const std::string& path) {
  if (e.children.size() != arity(e.op)) {
    throw StructuralError("malformed expression at " + path + ": '" + op_name(e.op) +
                          "' expects " + std::to_string(arity(e.op)) + " operand(s), got " +
                          std::to_string(e.children.size()));
  }
  if (e.op == Op::leaf && e.name.empty()) {
    throw StructuralError("malformed expression at " + path + ": unnamed leaf");
  }
}

struct Walk {
  std::optional<std::string> violation;
  std::string detail;

  Dimension visit(const DimExpr& e, const std::string& path) {
    check_shape(e, path);
    switch (e.op) {
      case Op::leaf:
        return e.dim;
      case Op::integrate_dt:
        return visit(e.children[0], path + ".int") * kTime;
      case Op::differentiate_dt:
        return visit(e.children[0], path + ".d") / kTime;
      case Op::mul:
        return visit(e.children[0], path + ".mul[0]") * visit(e.children[1], path + ".mul[1]");
      case Op::div:
        return visit(e.children[0], path + ".div[0]") / visit(e.children[1], path + ".div[1]");
      case Op::add:
      case Op::sub: {
        const std::string here = path + "." + op_name(e.op);
        const Dimension a = visit(e.children[0], here + "[0]");
        const Dimension b = visit(e.children[1], here + "[1]");
        if (a != b && !violation) {
          violation = here;
          detail = "'" + to_string(e) + "' mixes " + a.to_string() + " and " + b.to_string();
        }
        return a;
      }
    }
    return e.dim;
  }
};

int precedence(Op op) {
  switch (op) {
    case Op::add:
    case Op::sub: return 1;
    case Op::mul:
    case Op::div: return 2;
    default: return 3;
  }
}

std::string render(const DimExpr& e, int parent_prec, bool right_operand) {
  switch (e.op) {
    case Op::leaf:
      return e.name;
    case Op::integrate_dt:
      return "int(" + render(e.children[0], 0, false) + ")";
    case Op::differentiate_dt:
      return "d(" + render(e.children[0], 0, false) + ")";
    default: {
      const int prec = precedence(e.op);
      const char* sym = e.op == Op::add ? " + " : e.op == Op::sub ? " - "
                      : e.op == Op::mul ? "*" : "/";
      std::string s = render(e.children[0], prec, false) + sym + render(e.children[1], prec, true);
      const bool wrap = prec < parent_prec || (right_operand && prec == parent_prec &&
                                               (e.op == Op::sub || e.op == Op::div ||
                                                parent_prec == 1 || parent_prec == 2));
      return wrap ? "(" + s + ")" : s;
    }
  }
}

DimExpr binary(Op op, DimExpr a, DimExpr b) {
  DimExpr e;
  e.op = op;
  e.children.reserve(2);
  e.children.push_back(std::move(a));
  e.children.push_back(std::move(b));
  return e;
}

DimExpr unary(Op op, DimExpr a) {
  DimExpr e;
  e.op = op;
  e.children.push_back(std::move(a));
  return e;
}

}  // namespace

std::string Dimension::to_string() const {
  if (money == 0 && time == 0) return "1";
  std::string out;
  if (money != 0) out = power("$", money);
  if (time != 0) {
    if (!out.empty()) out += "·";
    out += power("s", time);
  }
  return out;
}

DimExpr DimExpr::leaf(std::string name, Dimension dim) {
  DimExpr e;
  e.name = std::move(name);
  e.dim = dim;
  return e;
}

DimExpr operator+(DimExpr a, DimExpr b) { return binary(Op::add, std::move(a), std::move(b)); }
DimExpr operator-(DimExpr a, DimExpr b) { return binary(Op::sub, std::move(a), std::move(b)); }
DimExpr operator*(DimExpr a, DimExpr b) { return binary(Op::mul, std::move(a), std::move(b)); }
DimExpr operator/(DimExpr a, DimExpr b) { return binary(Op::div, std::move(a), std::move(b)); }
DimExpr integrate_dt(DimExpr e) { return unary(Op::integrate_dt, std::move(e)); }
DimExpr differentiate_dt(DimExpr e) { return unary(Op::differentiate_dt, std::move(e)); }

std::string to_string(const DimExpr& e) { return render(e, 0, false); }

Dimension infer(const DimExpr& e) {
  Walk w;
  return w.visit(e, "expr");
}

ConsistencyReport check_relation(const DimExpr& lhs, const DimExpr& rhs) {
  ConsistencyReport report;
  Walk left;
  report.lhs_dim = left.visit(lhs, "lhs");
  Walk right;
  report.rhs_dim = right.visit(rhs, "rhs");

  if (left.violation) {
    report.first_violation = left.violation;
    report.detail = left.detail;
  } else if (right.violation) {
    report.first_violation = right.violation;
    report.detail = right.detail;
  } else if (report.lhs_dim != report.rhs_dim) {
    report.first_violation = "relation";
    report.detail = "lhs is " + report.lhs_dim.to_string() + ", rhs is " +
                    report.rhs_dim.to_string();
  }
  report.consistent = !report.first_violation.has_value();
  return report;
}

}  // namespace ecodyn::dims
