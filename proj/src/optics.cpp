#include "structlogic/optics.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

namespace structlogic::optics {

const char* cell_token(Cell c) {
  switch (c) {
    case Cell::null_cell: return "0";
    case Cell::black: return "i";
    case Cell::mirror_fwd: return "1";
    case Cell::mirror_rev: return "-1";
    case Cell::half_fwd: return "2";
    case Cell::half_rev: return "-2";
  }
  return "?";
}

Cell cell_from_token(const std::string& token) {
  if (token == "0") return Cell::null_cell;
  if (token == "i") return Cell::black;
  if (token == "1") return Cell::mirror_fwd;
  if (token == "-1") return Cell::mirror_rev;
  if (token == "2") return Cell::half_fwd;
  if (token == "-2") return Cell::half_rev;
  throw FormatError("unknown cell token: " + token);
}

const char* heading_name(Heading h) {
  switch (h) {
    case Heading::north: return "N";
    case Heading::east: return "E";
    case Heading::south: return "S";
    case Heading::west: return "W";
  }
  return "?";
}

namespace {

// "\" mirror: E<->S, W<->N.
Heading reflect_fwd(Heading h) {
  switch (h) {
    case Heading::east: return Heading::south;
    case Heading::south: return Heading::east;
    case Heading::west: return Heading::north;
    case Heading::north: return Heading::west;
  }
  return h;
}

// "/" mirror: E<->N, W<->S.
Heading reflect_rev(Heading h) {
  switch (h) {
    case Heading::east: return Heading::north;
    case Heading::north: return Heading::east;
    case Heading::west: return Heading::south;
    case Heading::south: return Heading::west;
  }
  return h;
}

}  // namespace

std::vector<Heading> step(Cell cell, Heading heading) {
  switch (cell) {
    case Cell::null_cell: return {heading};
    case Cell::black: return {};
    case Cell::mirror_fwd: return {reflect_fwd(heading)};
    case Cell::mirror_rev: return {reflect_rev(heading)};
    case Cell::half_fwd: return {heading, reflect_fwd(heading)};
    case Cell::half_rev: return {heading, reflect_rev(heading)};
  }
  return {};
}

const char* side_name(Side s) {
  switch (s) {
    case Side::north: return "north";
    case Side::east: return "east";
    case Side::south: return "south";
    case Side::west: return "west";
  }
  return "?";
}

Side side_from_name(const std::string& name) {
  if (name == "north") return Side::north;
  if (name == "east") return Side::east;
  if (name == "south") return Side::south;
  if (name == "west") return Side::west;
  throw FormatError("unknown side: " + name);
}

bool OpticalGrid::channel_valid(Channel ch) const {
  const int limit =
      (ch.side == Side::north || ch.side == Side::south) ? cols : rows;
  return ch.index >= 0 && ch.index < limit;
}

OpticalGrid make_grid(int rows, int cols, Cell fill) {
  if (rows < 1 || cols < 1) throw Error("grid dimensions must be >= 1");
  OpticalGrid g;
  g.rows = rows;
  g.cols = cols;
  g.cells.assign(static_cast<std::size_t>(rows) * cols, fill);
  return g;
}

bool TraceResult::exited_at(Channel ch) const {
  return std::binary_search(exits.begin(), exits.end(), ch);
}

namespace {

struct Delta {
  int dr, dc;
};

Delta delta_of(Heading h) {
  switch (h) {
    case Heading::north: return {-1, 0};
    case Heading::east: return {0, 1};
    case Heading::south: return {1, 0};
    case Heading::west: return {0, -1};
  }
  return {0, 0};
}

// The boundary channel a ray crosses when leaving cell (r,c) with heading h.
Channel exit_channel(const OpticalGrid& g, int r, int c, Heading h) {
  switch (h) {
    case Heading::north: return {Side::north, c};
    case Heading::south: return {Side::south, c};
    case Heading::east: return {Side::east, r};
    case Heading::west: return {Side::west, r};
  }
  return {Side::north, 0};
}

// The state entered when a ray is injected at a boundary channel.
RayStep entry_state(const OpticalGrid& g, Channel ch) {
  switch (ch.side) {
    case Side::north: return {0, ch.index, Heading::south};
    case Side::south: return {g.rows - 1, ch.index, Heading::north};
    case Side::west: return {ch.index, 0, Heading::east};
    case Side::east: return {ch.index, g.cols - 1, Heading::west};
  }
  return {0, 0, Heading::south};
}

}  // namespace

TraceResult trace(const OpticalGrid& g, Channel entry, long budget) {
  if (!g.channel_valid(entry)) throw Error("entry channel out of range");
  if (budget <= 0) budget = 16L * g.rows * g.cols;

  std::map<Channel, Channel> coupler;
  for (const auto& [a, b] : g.couplers) {
    coupler[a] = b;
    coupler[b] = a;
  }

  const int state_count = g.rows * g.cols * 4;
  auto key = [&](const RayStep& s) {
    return (s.row * g.cols + s.col) * 4 + static_cast<int>(s.heading);
  };
  std::vector<char> visited(static_cast<std::size_t>(state_count), 0);
  std::vector<int> parent(static_cast<std::size_t>(state_count), -2);
  auto unkey = [&](int k) {
    return RayStep{k / 4 / g.cols, (k / 4) % g.cols,
                   static_cast<Heading>(k % 4)};
  };

  TraceResult result;
  std::set<Channel> exits;

  auto build_path = [&](int terminal_key) {
    std::vector<RayStep> steps;
    for (int k = terminal_key; k >= 0; k = parent[static_cast<std::size_t>(k)])
      steps.push_back(unkey(k));
    std::reverse(steps.begin(), steps.end());
    return steps;
  };

  std::deque<int> queue;
  auto push_state = [&](RayStep s, int from_key) {
    const int k = key(s);
    if (visited[static_cast<std::size_t>(k)]) return;
    visited[static_cast<std::size_t>(k)] = 1;
    parent[static_cast<std::size_t>(k)] = from_key;
    queue.push_back(k);
  };

  push_state(entry_state(g, entry), -1);

  long expansions = 0;
  while (!queue.empty()) {
    if (expansions >= budget) {
      result.truncated = true;
      break;
    }
    ++expansions;
    const int k = queue.front();
    queue.pop_front();
    const RayStep s = unkey(k);
    const auto outs = step(g.at(s.row, s.col), s.heading);
    if (outs.empty()) {
      ++result.absorbed;
      RayPath p;
      p.steps = build_path(k);
      p.absorbed = true;
      result.paths.push_back(std::move(p));
      continue;
    }
    for (Heading h : outs) {
      const Delta d = delta_of(h);
      const int nr = s.row + d.dr;
      const int nc = s.col + d.dc;
      if (nr >= 0 && nr < g.rows && nc >= 0 && nc < g.cols) {
        push_state({nr, nc, h}, k);
        continue;
      }
      const Channel ch = exit_channel(g, s.row, s.col, h);
      auto it = coupler.find(ch);
      if (it != coupler.end()) {
        push_state(entry_state(g, it->second), k);
        continue;
      }
      exits.insert(ch);
      RayPath p;
      p.steps = build_path(k);
      p.exit = ch;
      result.paths.push_back(std::move(p));
    }
  }

  result.exits.assign(exits.begin(), exits.end());
  return result;
}

OpticalGrid apply_inputs(const OpticalGrid& g, const Env& env) {
  OpticalGrid sealed = g;
  for (const auto& port : g.ports) {
    if (port.role != PortRole::input) continue;
    auto it = env.find(port.var);
    if (it == env.end()) throw UnboundVariable(port.var);
    const Channel partner =
        it->second.as_bool() ? port.alpha_channel() : port.beta_channel();
    sealed.couplers.emplace_back(port.ground_channel(), partner);
  }
  return sealed;
}

Bit read_port(const OpticalGrid& g, const OpticalPort& out, long budget) {
  if (out.role != PortRole::output) throw Error("read_port requires an output port");
  const auto result = trace(g, out.ground_channel(), budget);
  const bool alpha = result.exited_at(out.alpha_channel());
  const bool beta = result.exited_at(out.beta_channel());
  if (alpha && beta)
    throw AmbiguousOutput("both output rails lit");
  if (!alpha && !beta)
    throw DarkOutput("neither output rail lit");
  return Bit(alpha);
}

GateName gate_from_name(const std::string& name) {
  std::string up;
  for (char c : name) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (up == "AND") return GateName::AND;
  if (up == "OR") return GateName::OR;
  if (up == "CROS") return GateName::CROS;
  if (up == "CNOT") return GateName::CNOT;
  if (up == "INVS") return GateName::INVS;
  if (up == "COPY") return GateName::COPY;
  if (up == "BLAK") return GateName::BLAK;
  throw Error("unknown gate: " + name);
}

const char* gate_name(GateName g) {
  switch (g) {
    case GateName::AND: return "AND";
    case GateName::OR: return "OR";
    case GateName::CROS: return "CROS";
    case GateName::CNOT: return "CNOT";
    case GateName::INVS: return "INVS";
    case GateName::COPY: return "COPY";
    case GateName::BLAK: return "BLAK";
  }
  return "?";
}

namespace {

OpticalGrid grid_from(const char* const tokens[9]) {
  OpticalGrid g = make_grid(3, 3);
  for (int i = 0; i < 9; ++i)
    g.cells[static_cast<std::size_t>(i)] = cell_from_token(tokens[i]);
  return g;
}

// Two-logic crossing gates: x enters west, y enters north; results leave
// east and south.
void add_cross_ports(OpticalGrid& g) {
  g.ports.push_back({PortRole::input, "x", Side::west, 0, 1, 2});
  g.ports.push_back({PortRole::input, "y", Side::north, 0, 1, 2});
  g.ports.push_back({PortRole::output, {}, Side::east, 0, 1, 2});
  g.ports.push_back({PortRole::output, {}, Side::south, 0, 1, 2});
}

}  // namespace

OpticalGrid gate_grid(GateName name) {
  switch (name) {
    case GateName::AND: {
      // Derived by exhaustive search over 3x3 cell matrices; accepted solely
      // by verify_gate against the AND contract (see tools/find_gates). No
      // mirror-only layout exists, so half mirrors route the probe with
      // strays confined to unread boundary channels.
      static const char* cells[9] = {"1", "0", "0", "-1", "-1", "2", "0", "2", "1"};
      OpticalGrid g = grid_from(cells);
      g.ports.push_back({PortRole::input, "A", Side::north, 0, 1, 2});
      g.ports.push_back({PortRole::input, "B", Side::south, 0, 1, 2});
      g.ports.push_back({PortRole::output, {}, Side::east, 0, 1, 2});
      return g;
    }
    case GateName::OR: {
      static const char* cells[9] = {"1", "2", "0", "-1", "2", "0", "0", "-1", "-1"};
      OpticalGrid g = grid_from(cells);
      g.ports.push_back({PortRole::input, "A", Side::north, 0, 1, 2});
      g.ports.push_back({PortRole::input, "B", Side::south, 0, 1, 2});
      g.ports.push_back({PortRole::output, {}, Side::east, 0, 1, 2});
      return g;
    }
    case GateName::CROS: {
      // Identity matrix of forward mirrors: each logic reflects once, the
      // vertical logic leaving east and the horizontal one south.
      static const char* cells[9] = {"1", "0", "0", "0", "1", "0", "0", "0", "1"};
      OpticalGrid g = grid_from(cells);
      add_cross_ports(g);
      return g;
    }
    case GateName::CNOT: {
      // Exchange matrix: the crossing of CROS with the rails swapped.
      static const char* cells[9] = {"0", "0", "1", "0", "1", "0", "1", "0", "0"};
      OpticalGrid g = grid_from(cells);
      add_cross_ports(g);
      return g;
    }
    case GateName::INVS: {
      OpticalGrid g = make_grid(3, 3);
      add_cross_ports(g);
      return g;
    }
    case GateName::COPY: {
      static const char* cells[9] = {"2", "0", "0", "0", "2", "0", "0", "0", "2"};
      OpticalGrid g = grid_from(cells);
      g.ports.push_back({PortRole::input, "x", Side::west, 0, 1, 2});
      g.ports.push_back({PortRole::output, {}, Side::east, 0, 1, 2});
      g.ports.push_back({PortRole::output, {}, Side::south, 0, 1, 2});
      return g;
    }
    case GateName::BLAK: {
      return make_grid(3, 3, Cell::black);
    }
  }
  throw Error("unknown gate");
}

OpticalGrid compose_h(const OpticalGrid& left, const OpticalGrid& right) {
  if (left.rows != right.rows)
    throw DimensionMismatch("compose_h requires equal row counts: " +
                            std::to_string(left.rows) + " vs " +
                            std::to_string(right.rows));
  OpticalGrid g = make_grid(left.rows, left.cols + right.cols);
  for (int r = 0; r < g.rows; ++r) {
    for (int c = 0; c < left.cols; ++c) g.set(r, c, left.at(r, c));
    for (int c = 0; c < right.cols; ++c) g.set(r, left.cols + c, right.at(r, c));
  }
  // Seam channels become interior propagation; the ports on them vanish.
  for (const auto& p : left.ports) {
    if (p.side == Side::east) continue;
    g.ports.push_back(p);
  }
  for (auto p : right.ports) {
    if (p.side == Side::west) continue;
    if (p.side == Side::north || p.side == Side::south) {
      p.alpha += left.cols;
      p.ground += left.cols;
      p.beta += left.cols;
    }
    g.ports.push_back(p);
  }
  return g;
}

OpticalGrid compose_v(const OpticalGrid& top, const OpticalGrid& bottom) {
  if (top.cols != bottom.cols)
    throw DimensionMismatch("compose_v requires equal column counts: " +
                            std::to_string(top.cols) + " vs " +
                            std::to_string(bottom.cols));
  OpticalGrid g = make_grid(top.rows + bottom.rows, top.cols);
  for (int r = 0; r < top.rows; ++r)
    for (int c = 0; c < g.cols; ++c) g.set(r, c, top.at(r, c));
  for (int r = 0; r < bottom.rows; ++r)
    for (int c = 0; c < g.cols; ++c) g.set(top.rows + r, c, bottom.at(r, c));
  for (const auto& p : top.ports) {
    if (p.side == Side::south) continue;
    g.ports.push_back(p);
  }
  for (auto p : bottom.ports) {
    if (p.side == Side::north) continue;
    if (p.side == Side::east || p.side == Side::west) {
      p.alpha += top.rows;
      p.ground += top.rows;
      p.beta += top.rows;
    }
    g.ports.push_back(p);
  }
  return g;
}

VerifyReport verify_gate(const OpticalGrid& g,
                         const std::vector<dualrail::TruthTable>& expected,
                         long budget) {
  if (expected.empty()) throw Error("verify_gate needs at least one table");
  std::vector<const OpticalPort*> outputs;
  std::set<std::string> grid_vars;
  for (const auto& p : g.ports) {
    if (p.role == PortRole::output) outputs.push_back(&p);
    else grid_vars.insert(p.var);
  }
  if (outputs.size() != expected.size())
    throw Error("expected " + std::to_string(outputs.size()) +
                " tables, got " + std::to_string(expected.size()));
  const auto& vars = expected.front().variables;
  for (const auto& t : expected)
    if (t.variables != vars) throw Error("tables disagree on variables");
  if (std::set<std::string>(vars.begin(), vars.end()) != grid_vars)
    throw Error("table variables do not match grid input ports");

  VerifyReport report;
  report.all_passed = true;
  for (std::size_t row = 0; row < expected.front().rows.size(); ++row) {
    VerifyRow vr;
    for (std::size_t i = 0; i < vars.size(); ++i)
      vr.env[vars[i]] = expected.front().rows[row].first[i];
    const OpticalGrid sealed = apply_inputs(g, vr.env);
    vr.pass = true;
    for (std::size_t o = 0; o < outputs.size(); ++o) {
      vr.expected.push_back(expected[o].rows[row].second);
      try {
        vr.got.push_back(read_port(sealed, *outputs[o], budget));
      } catch (const AmbiguousOutput&) {
        vr.got.push_back(std::nullopt);
        vr.note += "output " + std::to_string(o) + ": ambiguous; ";
      } catch (const DarkOutput&) {
        vr.got.push_back(std::nullopt);
        vr.note += "output " + std::to_string(o) + ": dark; ";
      }
      if (!vr.got.back() || *vr.got.back() != vr.expected.back()) vr.pass = false;
    }
    if (!vr.pass) report.all_passed = false;
    report.rows.push_back(std::move(vr));
  }
  return report;
}

std::string to_text(const VerifyReport& r) {
  std::ostringstream out;
  for (const auto& row : r.rows) {
    for (const auto& [var, bit] : row.env) out << var << "=" << bit.as_int() << " ";
    out << "expected";
    for (Bit b : row.expected) out << " " << b.as_int();
    out << " got";
    for (const auto& b : row.got) {
      if (b) out << " " << b->as_int();
      else out << " -";
    }
    out << (row.pass ? "  PASS" : "  FAIL");
    if (!row.note.empty()) out << "  (" << row.note << ")";
    out << "\n";
  }
  out << (r.all_passed ? "all rows pass\n" : "some rows fail\n");
  return out.str();
}

OpticalGrid read_grid(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [](int ln, const std::string& msg) -> void {
    throw FormatError("line " + std::to_string(ln) + ": " + msg);
  };

  std::optional<OpticalGrid> grid;
  int next_row = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) {
      if (tok[0] == '#') break;
      toks.push_back(tok);
    }
    if (toks.empty()) continue;
    if (toks[0] == "grid") {
      if (grid) fail(lineno, "duplicate grid header");
      if (toks.size() != 3) fail(lineno, "expected: grid <rows> <cols>");
      grid = make_grid(std::stoi(toks[1]), std::stoi(toks[2]));
    } else if (toks[0] == "port") {
      if (!grid) fail(lineno, "port before grid header");
      if (toks.size() >= 2 && toks[1] == "input") {
        if (toks.size() != 7)
          fail(lineno, "expected: port input <var> <side> <alpha> <ground> <beta>");
        OpticalPort p{PortRole::input, toks[2], side_from_name(toks[3]),
                      std::stoi(toks[4]), std::stoi(toks[5]), std::stoi(toks[6])};
        grid->ports.push_back(p);
      } else if (toks.size() >= 2 && toks[1] == "output") {
        if (toks.size() != 6)
          fail(lineno, "expected: port output <side> <alpha> <ground> <beta>");
        OpticalPort p{PortRole::output, {}, side_from_name(toks[2]),
                      std::stoi(toks[3]), std::stoi(toks[4]), std::stoi(toks[5])};
        grid->ports.push_back(p);
      } else {
        fail(lineno, "expected: port input|output ...");
      }
    } else {
      if (!grid) fail(lineno, "cell row before grid header");
      if (next_row >= grid->rows) fail(lineno, "too many cell rows");
      if (static_cast<int>(toks.size()) != grid->cols)
        fail(lineno, "expected " + std::to_string(grid->cols) + " cells");
      for (int c = 0; c < grid->cols; ++c)
        grid->set(next_row, c, cell_from_token(toks[static_cast<std::size_t>(c)]));
      ++next_row;
    }
  }
  if (!grid) throw FormatError("missing grid header");
  if (next_row != grid->rows) throw FormatError("missing cell rows");
  for (const auto& p : grid->ports) {
    if (!grid->channel_valid(p.alpha_channel()) ||
        !grid->channel_valid(p.ground_channel()) ||
        !grid->channel_valid(p.beta_channel()))
      throw FormatError("port channel out of range");
    const bool ground_between = (p.alpha < p.ground) == (p.ground < p.beta) &&
                                p.alpha != p.ground && p.ground != p.beta;
    if (!ground_between) throw FormatError("port ground must sit between the rails");
  }
  return *grid;
}

std::string write_grid(const OpticalGrid& g) {
  std::ostringstream out;
  out << "grid " << g.rows << " " << g.cols << "\n";
  for (int r = 0; r < g.rows; ++r) {
    for (int c = 0; c < g.cols; ++c) {
      if (c) out << " ";
      out << cell_token(g.at(r, c));
    }
    out << "\n";
  }
  for (const auto& p : g.ports) {
    if (p.role == PortRole::input)
      out << "port input " << p.var << " " << side_name(p.side) << " "
          << p.alpha << " " << p.ground << " " << p.beta << "\n";
    else
      out << "port output " << side_name(p.side) << " " << p.alpha << " "
          << p.ground << " " << p.beta << "\n";
  }
  return out.str();
}

OpticalGrid load_grid_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open grid file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_grid(buf.str());
}

}  // namespace structlogic::optics
