#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "structlogic/errors.hpp"

namespace structlogic::dualrail {

// A single binary digit. Wraps bool so domain signatures stay explicit.
class Bit {
public:
  constexpr Bit() = default;
  constexpr explicit Bit(bool value) : value_(value) {}

  static Bit from_int(int v) {
    if (v != 0 && v != 1) throw Error("bit must be 0 or 1");
    return Bit(v == 1);
  }

  constexpr bool as_bool() const { return value_; }
  constexpr int as_int() const { return value_ ? 1 : 0; }

  friend constexpr bool operator==(Bit a, Bit b) = default;
  friend constexpr Bit operator&(Bit a, Bit b) { return Bit(a.value_ && b.value_); }
  friend constexpr Bit operator|(Bit a, Bit b) { return Bit(a.value_ || b.value_); }
  friend constexpr Bit operator^(Bit a, Bit b) { return Bit(a.value_ != b.value_); }
  constexpr Bit operator~() const { return Bit(!value_); }

private:
  bool value_ = false;
};

inline constexpr Bit bit0{false};
inline constexpr Bit bit1{true};

// The inverse signal pair (alpha, beta) with beta = NOT alpha. Pairs with
// alpha == beta are rejected at construction.
class DualRail {
public:
  DualRail(Bit alpha, Bit beta) : alpha_(alpha), beta_(beta) {
    if (alpha == beta)
      throw InvalidPair("malformed dual-rail pair: alpha equals beta");
  }

  Bit alpha() const { return alpha_; }
  Bit beta() const { return beta_; }

  friend bool operator==(const DualRail& a, const DualRail& b) {
    return a.alpha_ == b.alpha_ && b.beta_ == a.beta_;
  }

private:
  Bit alpha_;
  Bit beta_;
};

DualRail encode(Bit b);
Bit decode(const DualRail& d);

// Rail swap only; no boolean negation is computed.
DualRail dr_not(const DualRail& a);
DualRail dr_and(const DualRail& a, const DualRail& b);
DualRail dr_or(const DualRail& a, const DualRail& b);

// ---------------------------------------------------------------------------
// Boolean expression trees. NAND/XOR/XNOR are frontend conveniences and are
// lowered to NOT/AND/OR before compilation.

enum class ExprKind {
  variable,
  constant,
  op_not,
  op_and,
  op_or,
  op_nand,
  op_xor,
  op_xnor,
};

class BoolExpr;
using ExprPtr = std::shared_ptr<const BoolExpr>;

class BoolExpr {
public:
  static ExprPtr var(std::string name);
  static ExprPtr constant(Bit value);
  static ExprPtr make_not(ExprPtr child);
  static ExprPtr make_and(ExprPtr lhs, ExprPtr rhs);
  static ExprPtr make_or(ExprPtr lhs, ExprPtr rhs);
  static ExprPtr make_nand(ExprPtr lhs, ExprPtr rhs);
  static ExprPtr make_xor(ExprPtr lhs, ExprPtr rhs);
  static ExprPtr make_xnor(ExprPtr lhs, ExprPtr rhs);
  static ExprPtr binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs);

  ExprKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  Bit value() const { return value_; }
  const ExprPtr& lhs() const { return lhs_; }
  const ExprPtr& rhs() const { return rhs_; }

private:
  BoolExpr(ExprKind kind, std::string name, Bit value, ExprPtr lhs, ExprPtr rhs)
      : kind_(kind), name_(std::move(name)), value_(value),
        lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}

  ExprKind kind_;
  std::string name_;  // variable only
  Bit value_;         // constant only
  ExprPtr lhs_;       // unary child / left operand
  ExprPtr rhs_;       // right operand
};

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

// Distinct variable names, sorted lexicographically.
std::vector<std::string> variables(const ExprPtr& e);

using Env = std::map<std::string, Bit>;

Bit eval_bool(const ExprPtr& e, const Env& env);

struct TruthTable {
  std::vector<std::string> variables;                  // sorted
  std::vector<std::pair<std::vector<Bit>, Bit>> rows;  // binary counting order

  friend bool operator==(const TruthTable& a, const TruthTable& b) = default;
};

// Rows are ordered by the assignment read as a binary number with the first
// (lexicographically smallest) variable as the most significant bit.
// Guarded to <= 20 variables.
TruthTable truth_table(const ExprPtr& e);

// Same, over an explicit variable set (a superset of the expression's own);
// used to align several tables onto shared columns.
TruthTable truth_table(const ExprPtr& e, const std::vector<std::string>& vars);

std::string to_text(const TruthTable& t);

}  // namespace structlogic::dualrail
