#include "structlogic/dualrail.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace structlogic::dualrail {

DualRail encode(Bit b) { return DualRail(b, ~b); }

Bit decode(const DualRail& d) { return d.alpha(); }

DualRail dr_not(const DualRail& a) {
  // Structural twist: the rails exchange places. The constructor's
  // well-formedness check holds because the input pair was well-formed.
  return DualRail(a.beta(), a.alpha());
}

DualRail dr_and(const DualRail& a, const DualRail& b) {
  return DualRail(a.alpha() & b.alpha(), a.beta() | b.beta());
}

DualRail dr_or(const DualRail& a, const DualRail& b) {
  return DualRail(a.alpha() | b.alpha(), a.beta() & b.beta());
}

ExprPtr BoolExpr::var(std::string name) {
  if (name.empty()) throw Error("variable name must be non-empty");
  return ExprPtr(new BoolExpr(ExprKind::variable, std::move(name), bit0, nullptr, nullptr));
}

ExprPtr BoolExpr::constant(Bit value) {
  return ExprPtr(new BoolExpr(ExprKind::constant, {}, value, nullptr, nullptr));
}

ExprPtr BoolExpr::make_not(ExprPtr child) {
  return ExprPtr(new BoolExpr(ExprKind::op_not, {}, bit0, std::move(child), nullptr));
}

ExprPtr BoolExpr::binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs) {
  return ExprPtr(new BoolExpr(kind, {}, bit0, std::move(lhs), std::move(rhs)));
}

ExprPtr BoolExpr::make_and(ExprPtr l, ExprPtr r) { return binary(ExprKind::op_and, std::move(l), std::move(r)); }
ExprPtr BoolExpr::make_or(ExprPtr l, ExprPtr r) { return binary(ExprKind::op_or, std::move(l), std::move(r)); }
ExprPtr BoolExpr::make_nand(ExprPtr l, ExprPtr r) { return binary(ExprKind::op_nand, std::move(l), std::move(r)); }
ExprPtr BoolExpr::make_xor(ExprPtr l, ExprPtr r) { return binary(ExprKind::op_xor, std::move(l), std::move(r)); }
ExprPtr BoolExpr::make_xnor(ExprPtr l, ExprPtr r) { return binary(ExprKind::op_xnor, std::move(l), std::move(r)); }

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case ExprKind::variable:
      return a->name() == b->name();
    case ExprKind::constant:
      return a->value() == b->value();
    case ExprKind::op_not:
      return expr_equal(a->lhs(), b->lhs());
    default:
      return expr_equal(a->lhs(), b->lhs()) && expr_equal(a->rhs(), b->rhs());
  }
}

std::vector<std::string> variables(const ExprPtr& e) {
  std::set<std::string> names;
  std::function<void(const ExprPtr&)> walk = [&](const ExprPtr& n) {
    if (!n) return;
    if (n->kind() == ExprKind::variable) names.insert(n->name());
    walk(n->lhs());
    walk(n->rhs());
  };
  walk(e);
  return {names.begin(), names.end()};
}

Bit eval_bool(const ExprPtr& e, const Env& env) {
  switch (e->kind()) {
    case ExprKind::variable: {
      auto it = env.find(e->name());
      if (it == env.end()) throw UnboundVariable(e->name());
      return it->second;
    }
    case ExprKind::constant:
      return e->value();
    case ExprKind::op_not:
      return ~eval_bool(e->lhs(), env);
    case ExprKind::op_and:
      return eval_bool(e->lhs(), env) & eval_bool(e->rhs(), env);
    case ExprKind::op_or:
      return eval_bool(e->lhs(), env) | eval_bool(e->rhs(), env);
    case ExprKind::op_nand:
      return ~(eval_bool(e->lhs(), env) & eval_bool(e->rhs(), env));
    case ExprKind::op_xor:
      return eval_bool(e->lhs(), env) ^ eval_bool(e->rhs(), env);
    case ExprKind::op_xnor:
      return ~(eval_bool(e->lhs(), env) ^ eval_bool(e->rhs(), env));
  }
  throw Error("unreachable expression kind");
}

TruthTable truth_table(const ExprPtr& e) {
  return truth_table(e, variables(e));
}

TruthTable truth_table(const ExprPtr& e, const std::vector<std::string>& vars) {
  for (const auto& v : variables(e))
    if (std::find(vars.begin(), vars.end(), v) == vars.end())
      throw UnboundVariable(v);
  TruthTable t;
  t.variables = vars;
  std::sort(t.variables.begin(), t.variables.end());
  if (t.variables.size() > 20)
    throw CapacityExceeded("truth table limited to 20 variables, got " +
                           std::to_string(t.variables.size()));
  const std::size_t n = t.variables.size();
  const std::size_t total = std::size_t{1} << n;
  t.rows.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    Env env;
    std::vector<Bit> assignment(n);
    for (std::size_t i = 0; i < n; ++i) {
      // First variable is the most significant bit.
      const bool v = (code >> (n - 1 - i)) & 1u;
      assignment[i] = Bit(v);
      env[t.variables[i]] = Bit(v);
    }
    t.rows.emplace_back(std::move(assignment), eval_bool(e, env));
  }
  return t;
}

std::string to_text(const TruthTable& t) {
  std::ostringstream out;
  for (const auto& v : t.variables) out << v << " ";
  out << "| out\n";
  for (const auto& [assignment, result] : t.rows) {
    for (Bit b : assignment) out << b.as_int() << " ";
    out << "| " << result.as_int() << "\n";
  }
  return out.str();
}

}  // namespace structlogic::dualrail
