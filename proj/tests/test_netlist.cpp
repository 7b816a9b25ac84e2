#include <doctest.h>

#include <algorithm>
#include <map>

#include "structlogic/frontend.hpp"
#include "structlogic/graphsim.hpp"
#include "structlogic/netlist.hpp"
#include "test_util.hpp"

using namespace structlogic;
using namespace structlogic::netlist;
using dualrail::Bit;
using dualrail::bit0;
using dualrail::bit1;

namespace {

// A bare output port to hang gadgets on.
NetlistBuilder output_only_builder(Port& out) {
  NetlistBuilder b;
  out = {PortRole::output, {}, "out.a", "out.g", "out.b"};
  b.add_pin(out.alpha);
  b.add_pin(out.ground);
  b.add_pin(out.beta);
  b.add_port(out);
  return b;
}

bool ground_reaches(const Netlist& n, const dualrail::Env& env, const PinId& pin) {
  const auto g = instantiate(n, env);
  return graphsim::dfs_path(g, n.output_port().ground, pin).reachable;
}

}  // namespace

TEST_CASE("not_gadget emits exactly three fixed wires") {
  NetlistBuilder b;
  Port in{PortRole::input, "X", "in.a", "in.g", "in.b"};
  Port out{PortRole::output, {}, "out.a", "out.g", "out.b"};
  for (const auto& p : {in.alpha, in.ground, in.beta, out.alpha, out.ground, out.beta})
    b.add_pin(p);
  not_gadget(b, in, out);
  const auto& wires = b.peek().wires;
  REQUIRE(wires.size() == 3);
  for (const auto& w : wires) CHECK(w.kind == WireKind::fixed);
  // Rails exchange, ground stays central.
  CHECK(wires[0] == Wire{"in.a", "out.b", WireDirection::bidirectional, WireKind::fixed, {}, {}});
  CHECK(wires[1] == Wire{"in.b", "out.a", WireDirection::bidirectional, WireKind::fixed, {}, {}});
  CHECK(wires[2] == Wire{"in.g", "out.g", WireDirection::bidirectional, WireKind::fixed, {}, {}});
}

TEST_CASE("and_gadget reproduces the AND truth table") {
  Port out;
  auto b = output_only_builder(out);
  and_gadget(b, "A", "B", out);
  const Netlist n = b.take();
  // A=0, B=1: ground connects only to beta.
  CHECK_FALSE(ground_reaches(n, {{"A", bit0}, {"B", bit1}}, out.alpha));
  CHECK(ground_reaches(n, {{"A", bit0}, {"B", bit1}}, out.beta));
  // A=1, B=1: ground connects only to alpha.
  CHECK(ground_reaches(n, {{"A", bit1}, {"B", bit1}}, out.alpha));
  CHECK_FALSE(ground_reaches(n, {{"A", bit1}, {"B", bit1}}, out.beta));
  for (const auto& env : test_util::all_envs({"A", "B"})) {
    const Bit expect = env.at("A") & env.at("B");
    CHECK(graphsim::simulate(n, env) == expect);
  }
}

TEST_CASE("or_gadget reproduces the OR truth table") {
  Port out;
  auto b = output_only_builder(out);
  or_gadget(b, "A", "B", out);
  const Netlist n = b.take();
  CHECK_FALSE(ground_reaches(n, {{"A", bit0}, {"B", bit0}}, out.alpha));
  CHECK(ground_reaches(n, {{"A", bit0}, {"B", bit0}}, out.beta));
  CHECK(ground_reaches(n, {{"A", bit1}, {"B", bit0}}, out.alpha));
  for (const auto& env : test_util::all_envs({"A", "B"})) {
    const Bit expect = env.at("A") | env.at("B");
    CHECK(graphsim::simulate(n, env) == expect);
  }
}

TEST_CASE("gadget duality: polarity and rail swap maps AND onto OR") {
  Port out;
  auto ba = output_only_builder(out);
  and_gadget(ba, "A", "B", out);
  const auto and_wires = ba.peek().wires;

  Port out2;
  auto bo = output_only_builder(out2);
  or_gadget(bo, "A", "B", out2);
  const auto or_wires = bo.peek().wires;

  // Flip every closed_when and exchange the rails; the transformed AND
  // fragment must equal the OR fragment as a set of wires, up to renaming
  // of the scratch pins.
  auto transform = [&](Wire w) {
    if (w.kind == WireKind::switch_) w.closed_when = ~w.closed_when;
    auto swap_rail = [&](PinId& p) {
      if (p == out.alpha) p = out.beta;
      else if (p == out.beta) p = out.alpha;
    };
    swap_rail(w.from);
    swap_rail(w.to);
    return w;
  };
  std::vector<Wire> mapped;
  for (const auto& w : and_wires) mapped.push_back(transform(w));
  // Scratch pins: AND allocates n0 (series) then n1,n2 (parallel); OR
  // allocates n0,n1 (parallel) then n2 (series).
  std::map<PinId, PinId> rename{{"n0", "n2"}, {"n1", "n0"}, {"n2", "n1"}};
  for (auto& w : mapped) {
    if (rename.count(w.from)) w.from = rename[w.from];
    if (rename.count(w.to)) w.to = rename[w.to];
  }
  auto key = [](const Wire& w) {
    return w.from + "|" + w.to + "|" + w.var + "|" +
           std::to_string(w.closed_when.as_int()) + "|" +
           std::to_string(static_cast<int>(w.kind)) +
           std::to_string(static_cast<int>(w.direction));
  };
  std::vector<std::string> a_keys, o_keys;
  for (const auto& w : mapped) a_keys.push_back(key(w));
  for (const auto& w : or_wires) o_keys.push_back(key(w));
  std::sort(a_keys.begin(), a_keys.end());
  std::sort(o_keys.begin(), o_keys.end());
  CHECK(a_keys == o_keys);
}

TEST_CASE("instantiate includes switches per the assignment") {
  const auto n = frontend::compile_netlist(frontend::parse("NOT A"));
  const auto g0 = instantiate(n, {{"A", bit0}});
  const auto g1 = instantiate(n, {{"A", bit1}});
  // Flipping one input exchanges exactly the two port switches.
  CHECK(g0.edges.size() == g1.edges.size());
  std::vector<GraphEdge> only0, only1;
  auto same = [](const GraphEdge& a, const GraphEdge& b) {
    return a.a == b.a && a.b == b.b && a.one_way == b.one_way;
  };
  for (const auto& e : g0.edges) {
    bool found = false;
    for (const auto& f : g1.edges) found |= same(e, f);
    if (!found) only0.push_back(e);
  }
  for (const auto& e : g1.edges) {
    bool found = false;
    for (const auto& f : g0.edges) found |= same(e, f);
    if (!found) only1.push_back(e);
  }
  CHECK(only0.size() == 1);
  CHECK(only1.size() == 1);
}

TEST_CASE("instantiate requires a total assignment") {
  const auto n = frontend::compile_netlist(frontend::parse("A AND B"));
  CHECK_THROWS_AS(instantiate(n, {{"A", bit1}}), UnboundVariable);
}

TEST_CASE("closing an additional switch never removes reachability") {
  const auto n = load_netlist_file(FIXTURES_DIR "/xor.netlist");
  for (const auto& env : test_util::all_envs({"A", "B"})) {
    const auto base = instantiate(n, env);
    // Force every switch closed on top of the same assignment.
    Netlist closed = n;
    for (auto& w : closed.wires)
      if (w.kind == WireKind::switch_) w.kind = WireKind::fixed;
    const auto more = instantiate(closed, env);
    for (const auto& v : base.vertices) {
      const auto r = graphsim::dfs_path(base, "K2", v);
      if (r.reachable) CHECK(graphsim::dfs_path(more, "K2", v).reachable);
    }
  }
}

TEST_CASE("netlist text format round trip") {
  const auto e = frontend::lower(frontend::parse("(A NAND B) AND (A OR B)"));
  const auto n = frontend::compile_netlist(e);
  const auto text = write_netlist(n);
  const auto again = read_netlist(text);
  CHECK(write_netlist(again) == text);
  CHECK(again.pins == n.pins);
  CHECK(again.wires == n.wires);
}

TEST_CASE("netlist format rejects malformed input") {
  CHECK_THROWS_AS(read_netlist("pin a\npin a\n"), FormatError);
  CHECK_THROWS_AS(read_netlist("wire a b\n"), FormatError);  // undeclared
  CHECK_THROWS_AS(read_netlist("pin a\npin b\nswitch a b var=X\n"), FormatError);
  CHECK_THROWS_AS(read_netlist("pin a\npin b\nwire a b\nwire a b\n"), FormatError);
  CHECK_THROWS_AS(
      read_netlist("pin a\npin b\npin c\npin d\npin e\npin f\n"
                   "port output a b c\nport output d e f\n"),
      FormatError);
  CHECK_THROWS_AS(read_netlist("pin a\npin b\nbogus a b\n"), FormatError);
}

TEST_CASE("fixture file loads with the published shape") {
  const auto n = load_netlist_file(FIXTURES_DIR "/xor.netlist");
  CHECK(n.pins.size() == 33);
  CHECK(n.ports.size() == 3);
  CHECK(n.switch_variables() == std::vector<std::string>{"A", "B"});
  const auto& out = n.output_port();
  CHECK(out.alpha == "K1");
  CHECK(out.ground == "K2");
  CHECK(out.beta == "K3");
}
