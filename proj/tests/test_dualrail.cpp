#include <doctest.h>

#include <cstdio>

#include "structlogic/dualrail.hpp"
#include "structlogic/frontend.hpp"

using namespace structlogic;
using namespace structlogic::dualrail;

TEST_CASE("encode produces the inverse signal pair") {
  CHECK(encode(bit1) == DualRail(bit1, bit0));
  CHECK(encode(bit0) == DualRail(bit0, bit1));
  for (bool x : {false, true}) CHECK(encode(Bit(x)).alpha() == Bit(x));
}

TEST_CASE("decode reads the alpha rail") {
  CHECK(decode(DualRail(bit1, bit0)) == bit1);
  CHECK(decode(DualRail(bit0, bit1)) == bit0);
}

TEST_CASE("malformed pairs are rejected at construction") {
  CHECK_THROWS_AS(DualRail(bit1, bit1), InvalidPair);
  CHECK_THROWS_AS(DualRail(bit0, bit0), InvalidPair);
}

TEST_CASE("dr_not is a rail swap and an involution") {
  CHECK(dr_not(DualRail(bit1, bit0)) == DualRail(bit0, bit1));
  CHECK(dr_not(DualRail(bit0, bit1)) == DualRail(bit1, bit0));
  for (bool x : {false, true}) {
    const DualRail d = encode(Bit(x));
    CHECK(dr_not(dr_not(d)) == d);
  }
}

TEST_CASE("dual-rail operations agree with plain boolean algebra") {
  // Exhaustive over all four input combinations.
  for (bool x : {false, true}) {
    for (bool y : {false, true}) {
      const DualRail a = encode(Bit(x));
      const DualRail b = encode(Bit(y));
      CHECK(decode(dr_and(a, b)) == Bit(x && y));
      CHECK(decode(dr_or(a, b)) == Bit(x || y));
      CHECK(dr_or(a, b) == dr_not(dr_and(dr_not(a), dr_not(b))));
    }
    CHECK(decode(dr_not(encode(Bit(x)))) == ~Bit(x));
  }
}

TEST_CASE("dr_and examples") {
  CHECK(dr_and(DualRail(bit1, bit0), DualRail(bit1, bit0)) == DualRail(bit1, bit0));
  CHECK(dr_and(DualRail(bit1, bit0), DualRail(bit0, bit1)) == DualRail(bit0, bit1));
}

TEST_CASE("dr_or examples") {
  CHECK(dr_or(DualRail(bit0, bit1), DualRail(bit0, bit1)) == DualRail(bit0, bit1));
  CHECK(dr_or(DualRail(bit1, bit0), DualRail(bit0, bit1)) == DualRail(bit1, bit0));
}

TEST_CASE("well-formed pairs always have complementary rails") {
  for (bool x : {false, true}) {
    const DualRail d = encode(Bit(x));
    CHECK((d.alpha() ^ d.beta()) == bit1);
  }
}

TEST_CASE("De Morgan on rails") {
  for (bool x : {false, true}) {
    for (bool y : {false, true}) {
      const DualRail a = encode(Bit(x));
      const DualRail b = encode(Bit(y));
      CHECK(dr_and(a, b).beta() == dr_or(dr_not(a), dr_not(b)).alpha());
    }
  }
}

TEST_CASE("eval_bool on the NAND/OR composition") {
  const auto e = frontend::parse("(A NAND B) AND (A OR B)");
  CHECK(eval_bool(e, {{"A", bit1}, {"B", bit0}}) == bit1);
  CHECK(eval_bool(e, {{"A", bit1}, {"B", bit1}}) == bit0);
}

TEST_CASE("eval_bool tautology and errors") {
  const auto e = frontend::parse("A OR NOT A");
  for (bool x : {false, true})
    CHECK(eval_bool(e, {{"A", Bit(x)}}) == bit1);
  CHECK_THROWS_AS(eval_bool(frontend::parse("A AND B"), {{"A", bit1}}),
                  UnboundVariable);
}

TEST_CASE("truth table of XOR") {
  const auto t = truth_table(frontend::parse("A XOR B"));
  REQUIRE(t.rows.size() == 4);
  CHECK(t.variables == std::vector<std::string>{"A", "B"});
  CHECK(t.rows[0].second == bit0);  // 00
  CHECK(t.rows[1].second == bit1);  // 01
  CHECK(t.rows[2].second == bit1);  // 10
  CHECK(t.rows[3].second == bit0);  // 11
}

TEST_CASE("truth table of a constant has a single row") {
  const auto t = truth_table(BoolExpr::constant(bit1));
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0].second == bit1);
}

TEST_CASE("the NAND/OR composition equals XOR") {
  CHECK(truth_table(frontend::parse("(A NAND B) AND (A OR B)")) ==
        truth_table(frontend::parse("A XOR B")));
}

TEST_CASE("truth table capacity guard") {
  ExprPtr e = BoolExpr::var("V00");
  for (int i = 1; i < 21; ++i) {
    char name[8];
    std::snprintf(name, sizeof name, "V%02d", i);
    e = BoolExpr::make_or(e, BoolExpr::var(name));
  }
  CHECK_THROWS_AS(truth_table(e), CapacityExceeded);
}
