#pragma once

#include <random>
#include <string>
#include <vector>

#include "structlogic/dualrail.hpp"

namespace test_util {

using structlogic::dualrail::Bit;
using structlogic::dualrail::BoolExpr;
using structlogic::dualrail::ExprPtr;

// Random expression over the full operator set; leaves are drawn from
// `vars` with an occasional constant.
inline ExprPtr random_expr(std::mt19937& rng, int depth,
                           const std::vector<std::string>& vars) {
  std::uniform_int_distribution<int> leaf_pick(0, 9);
  if (depth <= 0) {
    const int k = leaf_pick(rng);
    if (k == 0) return BoolExpr::constant(Bit(rng() & 1));
    std::uniform_int_distribution<std::size_t> v(0, vars.size() - 1);
    return BoolExpr::var(vars[v(rng)]);
  }
  std::uniform_int_distribution<int> op_pick(0, 5);
  switch (op_pick(rng)) {
    case 0:
      return BoolExpr::make_not(random_expr(rng, depth - 1, vars));
    case 1:
      return BoolExpr::make_and(random_expr(rng, depth - 1, vars),
                                random_expr(rng, depth - 1, vars));
    case 2:
      return BoolExpr::make_or(random_expr(rng, depth - 1, vars),
                               random_expr(rng, depth - 1, vars));
    case 3:
      return BoolExpr::make_nand(random_expr(rng, depth - 1, vars),
                                 random_expr(rng, depth - 1, vars));
    case 4:
      return BoolExpr::make_xor(random_expr(rng, depth - 1, vars),
                                random_expr(rng, depth - 1, vars));
    default:
      return BoolExpr::make_xnor(random_expr(rng, depth - 1, vars),
                                 random_expr(rng, depth - 1, vars));
  }
}

inline std::vector<std::string> var_pool(int n) {
  std::vector<std::string> vars;
  for (int i = 0; i < n; ++i) vars.push_back(std::string(1, char('A' + i)));
  return vars;
}

// All assignments of `vars` in binary counting order, first variable as the
// most significant bit.
inline std::vector<structlogic::dualrail::Env> all_envs(
    const std::vector<std::string>& vars) {
  std::vector<structlogic::dualrail::Env> envs;
  const std::size_t total = std::size_t{1} << vars.size();
  for (std::size_t code = 0; code < total; ++code) {
    structlogic::dualrail::Env env;
    for (std::size_t i = 0; i < vars.size(); ++i)
      env[vars[i]] = Bit((code >> (vars.size() - 1 - i)) & 1u);
    envs.push_back(std::move(env));
  }
  return envs;
}

}  // namespace test_util
