#include <doctest.h>

#include <random>
#include <sstream>

#include "structlogic/frontend.hpp"
#include "structlogic/graphsim.hpp"
#include "test_util.hpp"

using namespace structlogic;
using namespace structlogic::graphsim;
using dualrail::Bit;
using dualrail::bit0;
using dualrail::bit1;
using netlist::ConnectivityGraph;
using netlist::EdgeOrigin;

namespace {

ConnectivityGraph tiny(std::vector<netlist::PinId> vs,
                       std::vector<netlist::GraphEdge> es) {
  return {std::move(vs), std::move(es)};
}

netlist::Netlist fixture() {
  return netlist::load_netlist_file(FIXTURES_DIR "/xor.netlist");
}

std::vector<netlist::PinId> split(const std::string& s) {
  std::istringstream in(s);
  std::vector<netlist::PinId> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// The four vertex sequences published for the XOR circuit.
const char* kPathK1_10 = "K2 J2 H2 E2 E1 H1 J1 I2 G2 D2 D3 G3 I1 K1";
const char* kPathK1_01 = "K2 J2 H2 E2 E3 F2 F1 H1 J1 I2 G2 D2 D1 C2 C3 G3 I1 K1";
const char* kPathK3_00 = "K2 J2 H2 E2 E3 F2 F3 H3 J3 K3";
const char* kPathK3_11 = "K2 J2 H2 E2 E1 H1 J1 I2 G2 D2 D1 C2 C1 G1 I3 K3";

}  // namespace

TEST_CASE("dfs_path on elementary graphs") {
  const auto undirected = tiny({"u", "v"}, {{"u", "v", false, EdgeOrigin::fixed}});
  const auto r = dfs_path(undirected, "u", "v");
  CHECK(r.reachable);
  CHECK(r.path == std::vector<netlist::PinId>{"u", "v"});

  const auto directed = tiny({"u", "v"}, {{"u", "v", true, EdgeOrigin::fixed}});
  CHECK(dfs_path(directed, "u", "v").reachable);
  CHECK_FALSE(dfs_path(directed, "v", "u").reachable);

  CHECK_THROWS_AS(dfs_path(undirected, "u", "zz"), VertexNotFound);
}

TEST_CASE("dfs_path visits neighbors in lexicographic order") {
  const auto diamond = tiny({"a", "b", "c", "d"},
                            {{"a", "c", false, EdgeOrigin::fixed},
                             {"a", "b", false, EdgeOrigin::fixed},
                             {"b", "d", false, EdgeOrigin::fixed},
                             {"c", "d", false, EdgeOrigin::fixed}});
  const auto r = dfs_path(diamond, "a", "d");
  CHECK(r.path == std::vector<netlist::PinId>{"a", "b", "d"});
}

TEST_CASE("fixture reproduces the published DFS paths verbatim") {
  const auto n = fixture();
  auto probe = [&](Bit a, Bit b, const char* goal) {
    const auto g = netlist::instantiate(n, {{"A", a}, {"B", b}});
    return dfs_path(g, "K2", goal);
  };
  CHECK(probe(bit1, bit0, "K1").path == split(kPathK1_10));
  CHECK(probe(bit0, bit1, "K1").path == split(kPathK1_01));
  CHECK(probe(bit0, bit0, "K3").path == split(kPathK3_00));
  CHECK(probe(bit1, bit1, "K3").path == split(kPathK3_11));
  CHECK_FALSE(probe(bit0, bit0, "K1").reachable);
  CHECK_FALSE(probe(bit1, bit1, "K1").reachable);
  CHECK_FALSE(probe(bit1, bit0, "K3").reachable);
  CHECK_FALSE(probe(bit0, bit1, "K3").reachable);
}

TEST_CASE("published paths validate as legal paths in the fixture") {
  const auto n = fixture();
  auto check_path = [&](Bit a, Bit b, const char* text) {
    const auto g = netlist::instantiate(n, {{"A", a}, {"B", b}});
    CHECK(validate_path(g, split(text)));
  };
  check_path(bit1, bit0, kPathK1_10);
  check_path(bit0, bit1, kPathK1_01);
  check_path(bit0, bit0, kPathK3_00);
  check_path(bit1, bit1, kPathK3_11);
}

TEST_CASE("validate_path rejects broken sequences") {
  const auto g = tiny({"u", "v", "w"},
                      {{"u", "v", false, EdgeOrigin::fixed},
                       {"v", "w", true, EdgeOrigin::fixed}});
  CHECK(validate_path(g, {"u", "v", "w"}));
  CHECK_FALSE(validate_path(g, {"w", "v"}));      // against a one-way edge
  CHECK_FALSE(validate_path(g, {"u", "w"}));      // no edge
  CHECK_FALSE(validate_path(g, {"u", "v", "u"})); // vertex repeats
  CHECK_FALSE(validate_path(g, {}));
}

TEST_CASE("every dfs_path result passes the validator") {
  const auto n = fixture();
  for (const auto& env : test_util::all_envs({"A", "B"})) {
    const auto g = netlist::instantiate(n, env);
    for (const auto& goal : {"K1", "K3", "G3", "H1", "C2"}) {
      const auto r = dfs_path(g, "K2", goal);
      if (r.reachable) CHECK(validate_path(g, r.path));
    }
  }
}

TEST_CASE("simulate reads the fixture as XOR") {
  const auto n = fixture();
  for (const auto& env : test_util::all_envs({"A", "B"}))
    CHECK(simulate(n, env) == (env.at("A") ^ env.at("B")));
}

TEST_CASE("simulate diagnoses shorts and opens") {
  netlist::NetlistBuilder shorted;
  for (const auto& p : {"o.a", "o.g", "o.b"}) shorted.add_pin(p);
  shorted.add_port({netlist::PortRole::output, {}, "o.a", "o.g", "o.b"});
  shorted.add_wire("o.g", "o.a");
  shorted.add_wire("o.g", "o.b");
  CHECK_THROWS_AS(simulate(shorted.take(), {}), BothRailsReachable);

  netlist::NetlistBuilder open;
  for (const auto& p : {"o.a", "o.g", "o.b"}) open.add_pin(p);
  open.add_port({netlist::PortRole::output, {}, "o.a", "o.g", "o.b"});
  CHECK_THROWS_AS(simulate(open.take(), {}), NeitherRailReachable);
}

TEST_CASE("reachability_table orders rows and renders X") {
  const auto n = fixture();
  CHECK(reachability_table(n, {}).rows.empty());
  const auto t = reachability_table(n, {{"K2", "K1"}, {"K2", "K3"}});
  REQUIRE(t.rows.size() == 8);
  // Probe-major, assignments counting up with A as the high bit.
  CHECK(t.rows[0].goal == "K1");
  CHECK(t.rows[0].assignment == std::vector<Bit>{bit0, bit0});
  CHECK(t.rows[3].assignment == std::vector<Bit>{bit1, bit1});
  CHECK(t.rows[4].goal == "K3");
  const auto text = to_text(t);
  CHECK(text.find("K2 -> K1 | 0 | 0 | X") != std::string::npos);
  CHECK(text.find("K2 -> K3 | 1 | 1 | " + std::string(kPathK3_11)) != std::string::npos);
}

TEST_CASE("fixture sneak report lists the five junctions") {
  const auto copper = netlist::full_copper(fixture());
  const auto report = detect_sneak(copper);
  REQUIRE(report.junctions.size() == 5);
  const std::vector<std::pair<std::string, std::string>> expected{
      {"C3", "G3"}, {"D3", "G3"}, {"E1", "H1"}, {"I1", "K3"}, {"J1", "K3"}};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(report.junctions[i].from == expected[i].first);
    CHECK(report.junctions[i].to == expected[i].second);
    CHECK(report.junctions[i].witness.front() == expected[i].first);
    CHECK(report.junctions[i].witness.back() == expected[i].second);
  }
}

TEST_CASE("sneak witnesses are electrical-only") {
  const auto n = fixture();
  const auto copper = netlist::full_copper(n);
  const auto report = detect_sneak(copper);
  for (const auto& j : report.junctions) {
    // Each consecutive hop crosses some wire of the netlist (direction and
    // switch state ignored)...
    for (std::size_t i = 0; i + 1 < j.witness.size(); ++i) {
      bool adjacent = false;
      for (const auto& e : copper.edges) {
        adjacent |= (e.a == j.witness[i] && e.b == j.witness[i + 1]);
        adjacent |= (e.b == j.witness[i] && e.a == j.witness[i + 1]);
      }
      CHECK(adjacent);
    }
    // ...but the quiescent skeleton cannot realize the witness.
    ConnectivityGraph skeleton{copper.vertices, {}};
    for (const auto& e : copper.edges)
      if (e.origin == EdgeOrigin::fixed) skeleton.edges.push_back(e);
    CHECK_FALSE(validate_path(skeleton, j.witness));
  }
}

TEST_CASE("graphs without directed edges have no sneak junctions") {
  const auto g = tiny({"u", "v", "w"},
                      {{"u", "v", false, EdgeOrigin::fixed},
                       {"v", "w", false, EdgeOrigin::switch_}});
  CHECK(detect_sneak(g).junctions.empty());
}

TEST_CASE("an isolated one-way switch is a junction candidate") {
  const auto g = tiny({"u", "v"}, {{"u", "v", true, EdgeOrigin::switch_}});
  const auto report = detect_sneak(g);
  REQUIRE(report.junctions.size() == 1);
  CHECK(report.junctions[0].from == "u");
  CHECK(report.junctions[0].to == "v");
}

TEST_CASE("a one-way switch backed by fixed copper is silent") {
  const auto g = tiny({"u", "v"},
                      {{"u", "v", true, EdgeOrigin::switch_},
                       {"u", "v", false, EdgeOrigin::fixed}});
  CHECK(detect_sneak(g).junctions.empty());
}

TEST_CASE("dfs output is identical across repeated runs") {
  const auto n = fixture();
  const auto t1 = to_text(reachability_table(n, {{"K2", "K1"}, {"K2", "K3"}}));
  const auto t2 = to_text(reachability_table(n, {{"K2", "K1"}, {"K2", "K3"}}));
  CHECK(t1 == t2);
}
