#include "structlogic/graphsim.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace structlogic::graphsim {

namespace {

enum class Mode {
  instantiated,  // all edges, directions respected
  skeleton,      // fixed edges only, directions respected
  electrical,    // all edges, undirected
};

using Adjacency = std::map<PinId, std::vector<PinId>>;

Adjacency build_adjacency(const ConnectivityGraph& g, Mode mode) {
  Adjacency adj;
  for (const auto& v : g.vertices) adj[v];
  for (const auto& e : g.edges) {
    if (mode == Mode::skeleton && e.origin != netlist::EdgeOrigin::fixed)
      continue;
    adj[e.a].push_back(e.b);
    if (!e.one_way || mode == Mode::electrical) adj[e.b].push_back(e.a);
  }
  for (auto& [v, nbrs] : adj) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  return adj;
}

// First simple path under lexicographic neighbor order, or empty.
std::vector<PinId> dfs_search(const Adjacency& adj, const PinId& start,
                              const PinId& goal) {
  if (start == goal) return {start};
  std::set<PinId> visited{start};
  struct Frame {
    PinId vertex;
    std::size_t next = 0;
  };
  std::vector<Frame> stack{{start}};
  while (!stack.empty()) {
    Frame& top = stack.back();
    const auto& nbrs = adj.at(top.vertex);
    bool advanced = false;
    while (top.next < nbrs.size()) {
      const PinId& cand = nbrs[top.next++];
      if (visited.count(cand)) continue;
      visited.insert(cand);
      if (cand == goal) {
        std::vector<PinId> path;
        path.reserve(stack.size() + 1);
        for (const auto& f : stack) path.push_back(f.vertex);
        path.push_back(cand);
        return path;
      }
      stack.push_back({cand});
      advanced = true;
      break;
    }
    if (!advanced && top.next >= adj.at(stack.back().vertex).size())
      stack.pop_back();
  }
  return {};
}

bool reachable(const Adjacency& adj, const PinId& start, const PinId& goal) {
  if (start == goal) return true;
  std::set<PinId> seen{start};
  std::deque<PinId> queue{start};
  while (!queue.empty()) {
    PinId v = queue.front();
    queue.pop_front();
    for (const auto& w : adj.at(v)) {
      if (seen.count(w)) continue;
      if (w == goal) return true;
      seen.insert(w);
      queue.push_back(w);
    }
  }
  return false;
}

// Shortest electrical path, lexicographic tie-break via sorted adjacency.
std::vector<PinId> bfs_path(const Adjacency& adj, const PinId& start,
                            const PinId& goal) {
  std::map<PinId, PinId> parent;
  std::set<PinId> seen{start};
  std::deque<PinId> queue{start};
  while (!queue.empty()) {
    PinId v = queue.front();
    queue.pop_front();
    for (const auto& w : adj.at(v)) {
      if (seen.count(w)) continue;
      seen.insert(w);
      parent[w] = v;
      if (w == goal) {
        std::vector<PinId> path{goal};
        PinId cur = goal;
        while (cur != start) {
          cur = parent.at(cur);
          path.push_back(cur);
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(w);
    }
  }
  return {};
}

}  // namespace

PathReport dfs_path(const ConnectivityGraph& g, const PinId& start,
                    const PinId& goal) {
  if (!g.has_vertex(start)) throw VertexNotFound(start);
  if (!g.has_vertex(goal)) throw VertexNotFound(goal);
  auto adj = build_adjacency(g, Mode::instantiated);
  PathReport r{start, goal, false, {}};
  r.path = dfs_search(adj, start, goal);
  r.reachable = !r.path.empty();
  return r;
}

bool validate_path(const ConnectivityGraph& g, const std::vector<PinId>& path) {
  if (path.empty()) return false;
  std::set<PinId> seen;
  for (const auto& v : path) {
    if (!g.has_vertex(v)) return false;
    if (!seen.insert(v).second) return false;
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    bool ok = false;
    for (const auto& e : g.edges) {
      if (e.a == path[i] && e.b == path[i + 1]) ok = true;
      if (!e.one_way && e.b == path[i] && e.a == path[i + 1]) ok = true;
      if (ok) break;
    }
    if (!ok) return false;
  }
  return true;
}

Bit simulate(const Netlist& n, const Env& env) {
  const auto& out = n.output_port();
  auto g = netlist::instantiate(n, env);
  auto adj = build_adjacency(g, Mode::instantiated);
  const bool hits_alpha = reachable(adj, out.ground, out.alpha);
  const bool hits_beta = reachable(adj, out.ground, out.beta);
  if (hits_alpha && hits_beta)
    throw BothRailsReachable("short: ground reaches both output rails");
  if (!hits_alpha && !hits_beta)
    throw NeitherRailReachable("open: ground reaches neither output rail");
  return Bit(hits_alpha);
}

ReachTable reachability_table(
    const Netlist& n, const std::vector<std::pair<PinId, PinId>>& probes) {
  ReachTable t;
  t.variables = n.switch_variables();
  const std::size_t nv = t.variables.size();
  const std::size_t total = std::size_t{1} << nv;
  for (const auto& [start, goal] : probes) {
    for (std::size_t code = 0; code < total; ++code) {
      Env env;
      std::vector<Bit> assignment(nv);
      for (std::size_t i = 0; i < nv; ++i) {
        const bool v = (code >> (nv - 1 - i)) & 1u;
        assignment[i] = Bit(v);
        env[t.variables[i]] = Bit(v);
      }
      auto g = netlist::instantiate(n, env);
      t.rows.push_back({start, goal, assignment, dfs_path(g, start, goal)});
    }
  }
  return t;
}

std::string to_text(const ReachTable& t) {
  std::ostringstream out;
  out << "probe";
  for (const auto& v : t.variables) out << " | " << v;
  out << " | result\n";
  for (const auto& row : t.rows) {
    out << row.start << " -> " << row.goal;
    for (Bit b : row.assignment) out << " | " << b.as_int();
    out << " | ";
    if (!row.report.reachable) {
      out << "X";
    } else {
      for (std::size_t i = 0; i < row.report.path.size(); ++i) {
        if (i) out << " ";
        out << row.report.path[i];
      }
    }
    out << "\n";
  }
  return out.str();
}

SneakReport detect_sneak(const ConnectivityGraph& copper) {
  auto skeleton = build_adjacency(copper, Mode::skeleton);
  auto electrical = build_adjacency(copper, Mode::electrical);

  SneakReport report;
  auto add = [&](const PinId& from, const PinId& to,
                 std::vector<PinId> witness) {
    for (const auto& j : report.junctions)
      if (j.from == from && j.to == to) return;
    report.junctions.push_back({from, to, std::move(witness)});
  };

  // One-way switches: closing the contact feeds `to` from `from`, a flow the
  // resting circuit forbids.
  for (const auto& e : copper.edges) {
    if (e.origin != netlist::EdgeOrigin::switch_ || !e.one_way) continue;
    if (!reachable(skeleton, e.a, e.b)) add(e.a, e.b, {e.a, e.b});
  }

  // Merge points of the fixed directed mains: heads of other one-way fixed
  // wires whose copper reaches the merge even though the skeleton keeps them
  // apart.
  std::map<PinId, int> incoming;
  std::set<PinId> heads;
  for (const auto& e : copper.edges) {
    if (e.origin != netlist::EdgeOrigin::fixed || !e.one_way) continue;
    ++incoming[e.b];
    heads.insert(e.b);
  }
  for (const auto& [merge, count] : incoming) {
    if (count < 2) continue;
    for (const auto& head : heads) {
      if (head == merge) continue;
      if (reachable(skeleton, head, merge)) continue;
      auto witness = bfs_path(electrical, head, merge);
      if (witness.empty()) continue;
      add(head, merge, std::move(witness));
    }
  }

  std::sort(report.junctions.begin(), report.junctions.end(),
            [](const SneakJunction& a, const SneakJunction& b) {
              return std::tie(a.from, a.to) < std::tie(b.from, b.to);
            });
  return report;
}

std::string to_text(const SneakReport& r) {
  std::ostringstream out;
  for (const auto& j : r.junctions) {
    out << j.from << " -> " << j.to << " :";
    for (const auto& v : j.witness) out << " " << v;
    out << "\n";
  }
  return out.str();
}

}  // namespace structlogic::graphsim
