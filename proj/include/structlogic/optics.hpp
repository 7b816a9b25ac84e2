#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "structlogic/dualrail.hpp"
#include "structlogic/errors.hpp"

namespace structlogic::optics {

using dualrail::Bit;
using dualrail::Env;

// The six window-operator cells. Forward orientation is the "\" diagonal
// (left-to-right, top-down); reverse is "/".
enum class Cell : std::uint8_t {
  null_cell,   // 0: transmits
  black,       // i: absorbs
  mirror_fwd,  // 1: "\" double-sided mirror
  mirror_rev,  // -1: "/" double-sided mirror
  half_fwd,    // 2: "\" half mirror, transmits and reflects
  half_rev,    // -2: "/" half mirror
};

const char* cell_token(Cell c);
Cell cell_from_token(const std::string& token);

enum class Heading : std::uint8_t { north = 0, east = 1, south = 2, west = 3 };

const char* heading_name(Heading h);

// Outgoing headings for a ray traversing `cell` with the given heading.
// At most two results (half mirrors split); empty means absorbed.
std::vector<Heading> step(Cell cell, Heading heading);

enum class Side : std::uint8_t { north = 0, east = 1, south = 2, west = 3 };

const char* side_name(Side s);
Side side_from_name(const std::string& name);

// A boundary channel: north/south sides are indexed by column, east/west by
// row.
struct Channel {
  Side side;
  int index;

  friend auto operator<=>(const Channel&, const Channel&) = default;
};

enum class PortRole { input, output };

// Three distinct channels on one side, ground between alpha and beta.
struct OpticalPort {
  PortRole role = PortRole::input;
  std::string var;  // input ports only
  Side side = Side::north;
  int alpha = 0;
  int ground = 1;
  int beta = 2;

  Channel alpha_channel() const { return {side, alpha}; }
  Channel ground_channel() const { return {side, ground}; }
  Channel beta_channel() const { return {side, beta}; }
};

struct OpticalGrid {
  int rows = 0;
  int cols = 0;
  std::vector<Cell> cells;  // row-major
  std::vector<OpticalPort> ports;
  // Boundary couplers installed by apply_inputs: a ray exiting one channel
  // of a pair re-enters at the other.
  std::vector<std::pair<Channel, Channel>> couplers;

  Cell at(int r, int c) const { return cells[static_cast<std::size_t>(r) * cols + c]; }
  void set(int r, int c, Cell cell) { cells[static_cast<std::size_t>(r) * cols + c] = cell; }
  bool channel_valid(Channel ch) const;
};

OpticalGrid make_grid(int rows, int cols, Cell fill = Cell::null_cell);

struct RayStep {
  int row;
  int col;
  Heading heading;

  friend bool operator==(const RayStep&, const RayStep&) = default;
};

struct RayPath {
  std::vector<RayStep> steps;        // from the injected channel onward
  std::optional<Channel> exit;       // set when the ray left the grid
  bool absorbed = false;             // ended in a black body
};

struct TraceResult {
  std::vector<Channel> exits;  // sorted, deduplicated
  std::vector<RayPath> paths;  // discovery order
  int absorbed = 0;
  bool truncated = false;

  bool exited_at(Channel ch) const;
};

// Breadth-first ray propagation from a boundary channel. Each (cell,
// heading) state is visited at most once; budget caps state expansions with
// truncation reported in-band. budget <= 0 selects the default
// 16 * rows * cols.
TraceResult trace(const OpticalGrid& g, Channel entry, long budget = 0);

// Seals each input port with a coupler: ground<->alpha when the variable is
// 1, ground<->beta when 0.
OpticalGrid apply_inputs(const OpticalGrid& g, const Env& env);

// Injects at the output port's ground and reads which rail lights up.
Bit read_port(const OpticalGrid& g, const OpticalPort& out, long budget = 0);

enum class GateName { AND, OR, CROS, CNOT, INVS, COPY, BLAK };

GateName gate_from_name(const std::string& name);
const char* gate_name(GateName g);

// The seven 3x3 library gates. Cell layouts are fixed by exhaustive
// verification against each gate's semantic contract.
OpticalGrid gate_grid(GateName name);

OpticalGrid compose_h(const OpticalGrid& left, const OpticalGrid& right);
OpticalGrid compose_v(const OpticalGrid& top, const OpticalGrid& bottom);

struct VerifyRow {
  Env env;
  std::vector<std::optional<Bit>> got;  // one per output port
  std::vector<Bit> expected;
  bool pass = false;
  std::string note;  // Ambiguous / Dark diagnosis per failed read
};

struct VerifyReport {
  std::vector<VerifyRow> rows;
  bool all_passed = false;
};

// Runs apply_inputs + read_port for every assignment of the grid's input
// variables. `expected` holds one truth table per output port, all over the
// same variables.
VerifyReport verify_gate(const OpticalGrid& g,
                         const std::vector<dualrail::TruthTable>& expected,
                         long budget = 0);

std::string to_text(const VerifyReport& r);

// ---------------------------------------------------------------------------
// Text format:
//   grid <rows> <cols>
//   rows of whitespace-separated cell tokens: 0 i 1 -1 2 -2
//   port input <var> <side> <alpha> <ground> <beta>
//   port output <side> <alpha> <ground> <beta>
// '#' comments.

OpticalGrid read_grid(const std::string& text);
std::string write_grid(const OpticalGrid& g);
OpticalGrid load_grid_file(const std::string& path);

}  // namespace structlogic::optics
