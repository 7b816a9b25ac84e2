#pragma once

#include <string>
#include <vector>

#include "structlogic/netlist.hpp"

namespace structlogic::graphsim {

using dualrail::Bit;
using dualrail::Env;
using netlist::ConnectivityGraph;
using netlist::Netlist;
using netlist::PinId;

struct PathReport {
  PinId start;
  PinId goal;
  bool reachable = false;
  std::vector<PinId> path;  // empty when unreachable
};

// Depth-first search respecting edge directions, neighbors visited in
// ascending lexicographic order of PinId. Returns the first simple path
// found; deterministic across runs and platforms.
PathReport dfs_path(const ConnectivityGraph& g, const PinId& start,
                    const PinId& goal);

// Checks that consecutive vertices share an edge traversable in that
// direction and that no vertex repeats.
bool validate_path(const ConnectivityGraph& g, const std::vector<PinId>& path);

// Instantiate then probe: ground reaching alpha reads 1, ground reaching
// beta reads 0. Both rails lit is a short, neither an open circuit.
Bit simulate(const Netlist& n, const Env& env);

struct ReachRow {
  PinId start;
  PinId goal;
  std::vector<Bit> assignment;  // over the netlist's sorted variables
  PathReport report;
};

struct ReachTable {
  std::vector<std::string> variables;
  std::vector<ReachRow> rows;  // probe-major, assignments in counting order
};

ReachTable reachability_table(const Netlist& n,
                              const std::vector<std::pair<PinId, PinId>>& probes);

// Pipe-separated rendering, one row per line: probe | bits... | path-or-X.
std::string to_text(const ReachTable& t);

struct SneakJunction {
  PinId from;
  PinId to;
  std::vector<PinId> witness;  // electrical-only path from `from` to `to`
};

struct SneakReport {
  std::vector<SneakJunction> junctions;  // sorted by (from, to)
};

// Y-junction analysis over the full copper graph. Structural semantics is
// the quiescent skeleton: fixed wires only, directions respected. Electrical
// semantics ignores both switch state and direction. Two classes of junction
// are reported:
//   * a one-way switch whose closure feeds a vertex the resting circuit
//     keeps isolated from its tail (reported as tail -> head), and
//   * a head of a one-way fixed wire whose copper can reach a merge point
//     (a vertex with two or more incoming one-way fixed wires) that the
//     skeleton keeps unreachable from it.
// Each junction carries a witness path valid electrically but not
// structurally.
SneakReport detect_sneak(const ConnectivityGraph& copper);

std::string to_text(const SneakReport& r);

}  // namespace structlogic::graphsim
