#include "structlogic/netlist.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace structlogic::netlist {

bool Netlist::has_pin(const PinId& p) const {
  return std::find(pins.begin(), pins.end(), p) != pins.end();
}

const Port& Netlist::output_port() const {
  for (const auto& p : ports)
    if (p.role == PortRole::output) return p;
  throw Error("netlist has no output port");
}

std::vector<std::string> Netlist::switch_variables() const {
  std::set<std::string> vars;
  for (const auto& w : wires)
    if (w.kind == WireKind::switch_) vars.insert(w.var);
  return {vars.begin(), vars.end()};
}

void NetlistBuilder::add_pin(const PinId& p) {
  if (p.empty()) throw FormatError("pin name must be non-empty");
  if (declared_.count(p)) throw FormatError("duplicate pin: " + p);
  declared_[p] = true;
  n_.pins.push_back(p);
}

void NetlistBuilder::require_pin(const PinId& p) const {
  if (!declared_.count(p)) throw FormatError("undeclared pin: " + p);
}

void NetlistBuilder::add_wire(const PinId& a, const PinId& b, WireDirection dir) {
  require_pin(a);
  require_pin(b);
  if (a == b) throw FormatError("wire endpoints must differ: " + a);
  Wire w{a, b, dir, WireKind::fixed, {}, {}};
  if (std::find(n_.wires.begin(), n_.wires.end(), w) != n_.wires.end())
    throw FormatError("duplicate wire: " + a + " " + b);
  n_.wires.push_back(std::move(w));
}

void NetlistBuilder::add_switch(const PinId& a, const PinId& b,
                                const std::string& var, Bit closed_when,
                                WireDirection dir) {
  require_pin(a);
  require_pin(b);
  if (a == b) throw FormatError("switch endpoints must differ: " + a);
  if (var.empty()) throw FormatError("switch variable must be non-empty");
  Wire w{a, b, dir, WireKind::switch_, var, closed_when};
  if (std::find(n_.wires.begin(), n_.wires.end(), w) != n_.wires.end())
    throw FormatError("duplicate switch: " + a + " " + b);
  n_.wires.push_back(std::move(w));
}

void NetlistBuilder::add_port(const Port& p) {
  require_pin(p.alpha);
  require_pin(p.ground);
  require_pin(p.beta);
  if (p.alpha == p.ground || p.ground == p.beta || p.alpha == p.beta)
    throw FormatError("port pins must be distinct");
  if (p.role == PortRole::output) {
    for (const auto& q : n_.ports)
      if (q.role == PortRole::output)
        throw FormatError("netlist already has an output port");
  }
  n_.ports.push_back(p);
}

Netlist NetlistBuilder::take() { return std::move(n_); }

void not_gadget(NetlistBuilder& b, const Port& in, const Port& out) {
  b.add_wire(in.alpha, out.beta);
  b.add_wire(in.beta, out.alpha);
  b.add_wire(in.ground, out.ground);
}

namespace {

// Series and parallel switch fragments between u and v. Parallel branches
// merge through fresh pins over one-way wires so flow cannot re-enter the
// other branch at the fan-in.
void series_pair(NetlistBuilder& b, const std::string& va, const std::string& vb,
                 Bit when, const PinId& u, const PinId& v,
                 const std::string& scratch, int& counter) {
  const PinId mid = scratch + std::to_string(counter++);
  b.add_pin(mid);
  b.add_switch(u, mid, va, when);
  b.add_switch(mid, v, vb, when);
}

void parallel_pair(NetlistBuilder& b, const std::string& va, const std::string& vb,
                   Bit when, const PinId& u, const PinId& v,
                   const std::string& scratch, int& counter) {
  const PinId t1 = scratch + std::to_string(counter++);
  const PinId t2 = scratch + std::to_string(counter++);
  b.add_pin(t1);
  b.add_pin(t2);
  b.add_switch(u, t1, va, when);
  b.add_wire(t1, v, WireDirection::one_way);
  b.add_switch(u, t2, vb, when);
  b.add_wire(t2, v, WireDirection::one_way);
}

}  // namespace

void and_gadget(NetlistBuilder& b, const std::string& a, const std::string& v,
                const Port& out, const std::string& scratch) {
  int counter = 0;
  series_pair(b, a, v, dualrail::bit1, out.ground, out.alpha, scratch, counter);
  parallel_pair(b, a, v, dualrail::bit0, out.ground, out.beta, scratch, counter);
}

void or_gadget(NetlistBuilder& b, const std::string& a, const std::string& v,
               const Port& out, const std::string& scratch) {
  int counter = 0;
  parallel_pair(b, a, v, dualrail::bit1, out.ground, out.alpha, scratch, counter);
  series_pair(b, a, v, dualrail::bit0, out.ground, out.beta, scratch, counter);
}

bool ConnectivityGraph::has_vertex(const PinId& v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

ConnectivityGraph instantiate(const Netlist& n, const dualrail::Env& env) {
  for (const auto& var : n.switch_variables())
    if (!env.count(var)) throw UnboundVariable(var);
  ConnectivityGraph g;
  g.vertices = n.pins;
  for (const auto& w : n.wires) {
    if (w.kind == WireKind::switch_ && env.at(w.var) != w.closed_when) continue;
    g.edges.push_back({w.from, w.to, w.direction == WireDirection::one_way,
                       w.kind == WireKind::fixed ? EdgeOrigin::fixed
                                                 : EdgeOrigin::switch_});
  }
  return g;
}

ConnectivityGraph full_copper(const Netlist& n) {
  ConnectivityGraph g;
  g.vertices = n.pins;
  for (const auto& w : n.wires)
    g.edges.push_back({w.from, w.to, w.direction == WireDirection::one_way,
                       w.kind == WireKind::fixed ? EdgeOrigin::fixed
                                                 : EdgeOrigin::switch_});
  return g;
}

// --------------------------------------------------------------------------
// Text format.

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') break;
    out.push_back(tok);
  }
  return out;
}

}  // namespace

Netlist read_netlist(const std::string& text) {
  NetlistBuilder b;
  struct PendingWire {
    std::vector<std::string> toks;
    int lineno;
  };
  std::vector<PendingWire> wires, ports;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [](int ln, const std::string& msg) -> void {
    throw FormatError("line " + std::to_string(ln) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "pin") {
      if (toks.size() != 2) fail(lineno, "expected: pin <name>");
      b.add_pin(toks[1]);
    } else if (toks[0] == "wire" || toks[0] == "switch" || toks[0] == "port") {
      wires.push_back({toks, lineno});
    } else {
      fail(lineno, "unknown declaration: " + toks[0]);
    }
  }

  // Pins are declared now; wires/switches/ports may appear in any order.
  for (const auto& [toks, ln] : wires) {
    if (toks[0] == "wire") {
      if (toks.size() < 3 || toks.size() > 4) fail(ln, "expected: wire <a> <b> [oneway]");
      WireDirection dir = WireDirection::bidirectional;
      if (toks.size() == 4) {
        if (toks[3] != "oneway") fail(ln, "unknown wire flag: " + toks[3]);
        dir = WireDirection::one_way;
      }
      b.add_wire(toks[1], toks[2], dir);
    } else if (toks[0] == "switch") {
      if (toks.size() < 5 || toks.size() > 6)
        fail(ln, "expected: switch <a> <b> var=<v> when=<0|1> [oneway]");
      if (toks[3].rfind("var=", 0) != 0) fail(ln, "expected var=<name>");
      if (toks[4].rfind("when=", 0) != 0) fail(ln, "expected when=<0|1>");
      const std::string var = toks[3].substr(4);
      const std::string when = toks[4].substr(5);
      if (when != "0" && when != "1") fail(ln, "when must be 0 or 1");
      WireDirection dir = WireDirection::bidirectional;
      if (toks.size() == 6) {
        if (toks[5] != "oneway") fail(ln, "unknown switch flag: " + toks[5]);
        dir = WireDirection::one_way;
      }
      b.add_switch(toks[1], toks[2], var, Bit(when == "1"), dir);
    } else {  // port
      if (toks.size() >= 2 && toks[1] == "input") {
        if (toks.size() != 6) fail(ln, "expected: port input <var> <alpha> <ground> <beta>");
        b.add_port({PortRole::input, toks[2], toks[3], toks[4], toks[5]});
      } else if (toks.size() >= 2 && toks[1] == "output") {
        if (toks.size() != 5) fail(ln, "expected: port output <alpha> <ground> <beta>");
        b.add_port({PortRole::output, {}, toks[2], toks[3], toks[4]});
      } else {
        fail(ln, "expected: port input|output ...");
      }
    }
  }

  Netlist n = b.take();
  for (const auto& p : n.ports) {
    if (p.role != PortRole::input) continue;
    bool driven = false;
    for (const auto& w : n.wires)
      driven |= (w.kind == WireKind::switch_ && w.var == p.var);
    if (!driven)
      throw FormatError("input variable has no switch wire: " + p.var);
  }
  return n;
}

std::string write_netlist(const Netlist& n) {
  std::ostringstream out;
  for (const auto& p : n.pins) out << "pin " << p << "\n";
  for (const auto& p : n.ports) {
    if (p.role == PortRole::input)
      out << "port input " << p.var << " " << p.alpha << " " << p.ground << " "
          << p.beta << "\n";
    else
      out << "port output " << p.alpha << " " << p.ground << " " << p.beta << "\n";
  }
  for (const auto& w : n.wires) {
    if (w.kind == WireKind::fixed) {
      out << "wire " << w.from << " " << w.to;
    } else {
      out << "switch " << w.from << " " << w.to << " var=" << w.var
          << " when=" << w.closed_when.as_int();
    }
    if (w.direction == WireDirection::one_way) out << " oneway";
    out << "\n";
  }
  return out.str();
}

Netlist load_netlist_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open netlist file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_netlist(buf.str());
}

}  // namespace structlogic::netlist
