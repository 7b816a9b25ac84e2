#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "structlogic/dualrail.hpp"
#include "structlogic/errors.hpp"

namespace structlogic::netlist {

using dualrail::Bit;

// Pins are identified by their text label, unique within a netlist.
using PinId = std::string;

enum class WireDirection { bidirectional, one_way };
enum class WireKind { fixed, switch_ };

// A wire is either a fixed connection or a switch closed by an input value.
// one_way wires pass only from `from` to `to`.
struct Wire {
  PinId from;
  PinId to;
  WireDirection direction = WireDirection::bidirectional;
  WireKind kind = WireKind::fixed;
  std::string var;            // switch wires only
  Bit closed_when;            // switch wires only

  friend bool operator==(const Wire& a, const Wire& b) = default;
};

enum class PortRole { input, output };

// Three pins: a central ground flanked by the true (alpha) and inverted
// (beta) rails. A bit is read as which rail connects to ground.
struct Port {
  PortRole role = PortRole::input;
  std::string var;  // input ports only
  PinId alpha;
  PinId ground;
  PinId beta;
};

struct Netlist {
  std::vector<PinId> pins;  // declaration order
  std::vector<Wire> wires;
  std::vector<Port> ports;

  bool has_pin(const PinId& p) const;
  const Port& output_port() const;
  // Distinct switch variables, sorted.
  std::vector<std::string> switch_variables() const;
};

// Mutating helpers with duplicate / undeclared-pin checks.
class NetlistBuilder {
public:
  void add_pin(const PinId& p);
  void add_wire(const PinId& a, const PinId& b,
                WireDirection dir = WireDirection::bidirectional);
  void add_switch(const PinId& a, const PinId& b, const std::string& var,
                  Bit closed_when,
                  WireDirection dir = WireDirection::bidirectional);
  void add_port(const Port& p);
  Netlist take();
  const Netlist& peek() const { return n_; }

private:
  void require_pin(const PinId& p) const;
  Netlist n_;
  std::map<PinId, bool> declared_;
};

// The structural NOT: rails exchange, ground stays central. Emits the three
// fixed wires into the builder.
void not_gadget(NetlistBuilder& b, const Port& in, const Port& out);

// Relay-style AND between the output port's ground and rails: the alpha path
// is the two true-switches in series, the beta path the two false-switches in
// parallel (one-way merge wires suppress back-flow at the fan-in).
// `scratch` prefixes the fresh internal pin names.
void and_gadget(NetlistBuilder& b, const std::string& a, const std::string& v,
                const Port& out, const std::string& scratch = "n");

// Dual of and_gadget: parallel true-switches, series false-switches.
void or_gadget(NetlistBuilder& b, const std::string& a, const std::string& v,
               const Port& out, const std::string& scratch = "n");

// ---------------------------------------------------------------------------
// Connectivity graphs (shared with graphsim).

enum class EdgeOrigin { fixed, switch_ };

struct GraphEdge {
  PinId a;
  PinId b;
  bool one_way = false;           // traversable a->b only
  EdgeOrigin origin = EdgeOrigin::fixed;
};

struct ConnectivityGraph {
  std::vector<PinId> vertices;
  std::vector<GraphEdge> edges;

  bool has_vertex(const PinId& v) const;
};

// Every fixed wire plus each switch wire whose variable matches its
// closed_when under env. Throws UnboundVariable for missing bindings.
ConnectivityGraph instantiate(const Netlist& n, const dualrail::Env& env);

// Every wire of the netlist, switches included; the physical copper.
// Edge origins are preserved so traversal modes can filter.
ConnectivityGraph full_copper(const Netlist& n);

// ---------------------------------------------------------------------------
// Text format. One declaration per line:
//   pin <name>
//   wire <a> <b> [oneway]
//   switch <a> <b> var=<v> when=<0|1> [oneway]
//   port input <var> <alpha> <ground> <beta>
//   port output <alpha> <ground> <beta>
// '#' starts a comment; order-insensitive except duplicate detection.

Netlist read_netlist(const std::string& text);
std::string write_netlist(const Netlist& n);

Netlist load_netlist_file(const std::string& path);

}  // namespace structlogic::netlist
