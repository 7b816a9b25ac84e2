#include "structlogic/frontend.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace structlogic::frontend {

using dualrail::Bit;
using dualrail::BoolExpr;
using dualrail::ExprKind;

// --------------------------------------------------------------------------
// Lexer / parser.

namespace {

enum class TokKind { ident, literal, lparen, rparen, end,
                     kw_not, kw_and, kw_or, kw_nand, kw_xor, kw_xnor };

struct Token {
  TokKind kind;
  std::string text;
  std::size_t pos;
};

std::string upper(const std::string& s) {
  std::string u;
  u.reserve(s.size());
  for (char c : s) u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  return u;
}

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '(') {
      out.push_back({TokKind::lparen, "(", i++});
      continue;
    }
    if (c == ')') {
      out.push_back({TokKind::rparen, ")", i++});
      continue;
    }
    if (c == '0' || c == '1') {
      out.push_back({TokKind::literal, std::string(1, c), i++});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
        ++i;
      std::string word = src.substr(start, i - start);
      const std::string key = upper(word);
      TokKind kind = TokKind::ident;
      if (key == "NOT") kind = TokKind::kw_not;
      else if (key == "AND") kind = TokKind::kw_and;
      else if (key == "OR") kind = TokKind::kw_or;
      else if (key == "NAND") kind = TokKind::kw_nand;
      else if (key == "XOR") kind = TokKind::kw_xor;
      else if (key == "XNOR") kind = TokKind::kw_xnor;
      out.push_back({kind, std::move(word), start});
      continue;
    }
    throw ParseError(i, std::string("unexpected character '") + c + "'");
  }
  out.push_back({TokKind::end, "", src.size()});
  return out;
}

class Parser {
public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ExprPtr run() {
    ExprPtr e = parse_or();
    if (peek().kind != TokKind::end)
      throw ParseError(peek().pos, "unexpected trailing input");
    return e;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }

  ExprPtr parse_or() {
    ExprPtr lhs = parse_and();
    while (true) {
      const TokKind k = peek().kind;
      if (k != TokKind::kw_or && k != TokKind::kw_xor && k != TokKind::kw_xnor)
        return lhs;
      take();
      ExprPtr rhs = parse_and();
      if (k == TokKind::kw_or) lhs = BoolExpr::make_or(lhs, rhs);
      else if (k == TokKind::kw_xor) lhs = BoolExpr::make_xor(lhs, rhs);
      else lhs = BoolExpr::make_xnor(lhs, rhs);
    }
  }

  ExprPtr parse_and() {
    ExprPtr lhs = parse_unary();
    while (true) {
      const TokKind k = peek().kind;
      if (k != TokKind::kw_and && k != TokKind::kw_nand) return lhs;
      take();
      ExprPtr rhs = parse_unary();
      if (k == TokKind::kw_and) lhs = BoolExpr::make_and(lhs, rhs);
      else lhs = BoolExpr::make_nand(lhs, rhs);
    }
  }

  ExprPtr parse_unary() {
    if (peek().kind == TokKind::kw_not) {
      take();
      return BoolExpr::make_not(parse_unary());
    }
    return parse_atom();
  }

  ExprPtr parse_atom() {
    const Token t = take();
    switch (t.kind) {
      case TokKind::ident:
        return BoolExpr::var(t.text);
      case TokKind::literal:
        return BoolExpr::constant(Bit(t.text == "1"));
      case TokKind::lparen: {
        ExprPtr e = parse_or();
        if (peek().kind != TokKind::rparen)
          throw ParseError(peek().pos, "unbalanced parentheses: expected ')'");
        take();
        return e;
      }
      case TokKind::end:
        throw ParseError(t.pos, "dangling operator: expected operand");
      default:
        throw ParseError(t.pos, "expected operand, got '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

const char* op_name(ExprKind k) {
  switch (k) {
    case ExprKind::op_and: return "AND";
    case ExprKind::op_or: return "OR";
    case ExprKind::op_nand: return "NAND";
    case ExprKind::op_xor: return "XOR";
    case ExprKind::op_xnor: return "XNOR";
    default: return "?";
  }
}

}  // namespace

ExprPtr parse(const std::string& source) { return Parser(lex(source)).run(); }

std::string to_text(const ExprPtr& e) {
  switch (e->kind()) {
    case ExprKind::variable:
      return e->name();
    case ExprKind::constant:
      return e->value().as_bool() ? "1" : "0";
    case ExprKind::op_not:
      return "(NOT " + to_text(e->lhs()) + ")";
    default:
      return "(" + to_text(e->lhs()) + " " + op_name(e->kind()) + " " +
             to_text(e->rhs()) + ")";
  }
}

ExprPtr lower(const ExprPtr& e) {
  switch (e->kind()) {
    case ExprKind::variable:
    case ExprKind::constant:
      return e;
    case ExprKind::op_not:
      return BoolExpr::make_not(lower(e->lhs()));
    case ExprKind::op_and:
      return BoolExpr::make_and(lower(e->lhs()), lower(e->rhs()));
    case ExprKind::op_or:
      return BoolExpr::make_or(lower(e->lhs()), lower(e->rhs()));
    case ExprKind::op_nand:
      return BoolExpr::make_not(BoolExpr::make_and(lower(e->lhs()), lower(e->rhs())));
    case ExprKind::op_xor: {
      ExprPtr l = lower(e->lhs());
      ExprPtr r = lower(e->rhs());
      return BoolExpr::make_and(BoolExpr::make_not(BoolExpr::make_and(l, r)),
                                BoolExpr::make_or(l, r));
    }
    case ExprKind::op_xnor:
      return BoolExpr::make_not(
          lower(BoolExpr::make_xor(e->lhs(), e->rhs())));
  }
  throw Error("unreachable expression kind");
}

bool is_lowered(const ExprPtr& e) {
  switch (e->kind()) {
    case ExprKind::variable:
    case ExprKind::constant:
      return true;
    case ExprKind::op_not:
      return is_lowered(e->lhs());
    case ExprKind::op_and:
    case ExprKind::op_or:
      return is_lowered(e->lhs()) && is_lowered(e->rhs());
    default:
      return false;
  }
}

// --------------------------------------------------------------------------
// Netlist compilation.

namespace {

using netlist::NetlistBuilder;
using netlist::PinId;
using netlist::Port;
using netlist::PortRole;
using netlist::WireDirection;

class NetlistCompiler {
public:
  explicit NetlistCompiler(const ExprPtr& e) : expr_(e) {
    if (!is_lowered(e))
      throw CompileError("compile_netlist requires a lowered expression");
  }

  netlist::Netlist run() {
    for (const auto& v : dualrail::variables(expr_)) {
      Port p{PortRole::input, v, v + ".a", v + ".g", v + ".b"};
      b_.add_pin(p.alpha);
      b_.add_pin(p.ground);
      b_.add_pin(p.beta);
      b_.add_port(p);
      b_.add_switch(p.ground, p.alpha, v, dualrail::bit1);
      b_.add_switch(p.ground, p.beta, v, dualrail::bit0);
      inputs_[v] = p;
    }
    Port out{PortRole::output, {}, "out.a", "out.g", "out.b"};
    b_.add_pin(out.alpha);
    b_.add_pin(out.ground);
    b_.add_pin(out.beta);
    b_.add_port(out);
    realize_into(expr_, out);
    return b_.take();
  }

private:
  PinId fresh_pin() {
    PinId p = "n" + std::to_string(pin_counter_++);
    b_.add_pin(p);
    return p;
  }

  Port fresh_port() {
    const std::string stem = "p" + std::to_string(port_counter_++);
    Port p{PortRole::input, {}, stem + ".a", stem + ".g", stem + ".b"};
    // Internal 3-pin junctions, not declared as ports of the netlist.
    b_.add_pin(p.alpha);
    b_.add_pin(p.ground);
    b_.add_pin(p.beta);
    return p;
  }

  // Wires the expression's value onto a 3-pin port.
  void realize_into(const ExprPtr& e, const Port& target) {
    switch (e->kind()) {
      case ExprKind::variable: {
        const Port& in = inputs_.at(e->name());
        b_.add_wire(in.alpha, target.alpha);
        b_.add_wire(in.ground, target.ground);
        b_.add_wire(in.beta, target.beta);
        return;
      }
      case ExprKind::constant:
        b_.add_wire(target.ground,
                    e->value().as_bool() ? target.alpha : target.beta);
        return;
      case ExprKind::op_not: {
        Port inner = fresh_port();
        realize_into(e->lhs(), inner);
        netlist::not_gadget(b_, inner, target);
        return;
      }
      case ExprKind::op_and:
      case ExprKind::op_or:
        emit_network(e, true, target.ground, target.alpha);
        emit_network(e, false, target.ground, target.beta);
        return;
      default:
        throw CompileError("non-lowered operator in compile_netlist");
    }
  }

  // Switch network between u and v conducting iff e evaluates to `polarity`.
  void emit_network(const ExprPtr& e, bool polarity, const PinId& u,
                    const PinId& v) {
    switch (e->kind()) {
      case ExprKind::variable:
        b_.add_switch(u, v, e->name(), Bit(polarity));
        return;
      case ExprKind::constant:
        if (e->value().as_bool() == polarity) b_.add_wire(u, v);
        return;
      case ExprKind::op_not:
        emit_network(e->lhs(), !polarity, u, v);
        return;
      case ExprKind::op_and:
      case ExprKind::op_or: {
        const bool series = (e->kind() == ExprKind::op_and) == polarity;
        if (series) {
          PinId mid = fresh_pin();
          emit_network(e->lhs(), polarity, u, mid);
          emit_network(e->rhs(), polarity, mid, v);
        } else {
          // One-way merge wires keep flow from re-entering the other branch.
          PinId t1 = fresh_pin();
          emit_network(e->lhs(), polarity, u, t1);
          b_.add_wire(t1, v, WireDirection::one_way);
          PinId t2 = fresh_pin();
          emit_network(e->rhs(), polarity, u, t2);
          b_.add_wire(t2, v, WireDirection::one_way);
        }
        return;
      }
      default:
        throw CompileError("non-lowered operator in compile_netlist");
    }
  }

  ExprPtr expr_;
  NetlistBuilder b_;
  std::map<std::string, Port> inputs_;
  int pin_counter_ = 0;
  int port_counter_ = 0;
};

}  // namespace

netlist::Netlist compile_netlist(const ExprPtr& e) {
  return NetlistCompiler(e).run();
}

// --------------------------------------------------------------------------
// Optical compilation. The probe walks the expression as a series/parallel
// contact network: variable contacts bounce through sealed input ports on
// the north boundary, parallel branches split over half mirrors and merge
// with black-body ghost traps. Horizontal runs own their row, vertical runs
// own their column, so the only shared cells are perpendicular crossings.

namespace {

using optics::Cell;
using optics::OpticalGrid;
using optics::OpticalPort;
using optics::Side;

class GridCompiler {
public:
  explicit GridCompiler(const ExprPtr& e) : expr_(e) {
    if (!is_lowered(e))
      throw CompileError("compile_grid requires a lowered expression");
    const auto vars = dualrail::variables(e);
    if (vars.size() > 8)
      throw CapacityExceeded("compile_grid limited to 8 variables, got " +
                             std::to_string(vars.size()));
  }

  OpticalGrid run() {
    // Probe split: the ray injected at the output ground fans into the
    // positive and negative networks.
    place(1, 1, Cell::half_rev);
    place(1, 0, Cell::mirror_rev);

    const int plus_lane = alloc_row();
    place(plus_lane, 1, Cell::mirror_fwd);
    auto plus_exit = realize(expr_, true, {plus_lane, 1});

    const int minus_lane = alloc_row();
    place(minus_lane, 0, Cell::mirror_fwd);
    auto minus_exit = realize(expr_, false, {minus_lane, 0});

    if (plus_exit) {
      const int c = alloc_col();
      place(plus_exit->lane, c, Cell::mirror_rev);
      place(0, c, Cell::mirror_rev);
    }
    if (minus_exit) {
      const int c = alloc_col();
      place(minus_exit->lane, c, Cell::mirror_rev);
      place(2, c, Cell::mirror_rev);
    }

    OpticalGrid g = optics::make_grid(next_row_, next_col_);
    for (const auto& [rc, cell] : cells_) g.set(rc.first, rc.second, cell);
    g.ports = ports_;
    g.ports.push_back({optics::PortRole::output, {}, Side::east, 0, 1, 2});
    return g;
  }

private:
  struct Anchor {
    int lane;  // ray heading east on this row
    int col;   // last column consumed
  };

  int alloc_row() { return next_row_++; }
  int alloc_col() { return next_col_++; }

  void place(int r, int c, Cell cell) {
    auto [it, inserted] = cells_.emplace(std::make_pair(r, c), cell);
    if (!inserted)
      throw CompileError("optical layout collision at " + std::to_string(r) +
                         "," + std::to_string(c));
    next_row_ = std::max(next_row_, r + 1);
    next_col_ = std::max(next_col_, c + 1);
  }

  // Realizes a network conducting iff e == polarity. Returns the exit
  // anchor, or nullopt when the branch is statically dead.
  std::optional<Anchor> realize(const ExprPtr& e, bool polarity, Anchor in) {
    switch (e->kind()) {
      case ExprKind::variable:
        return contact(e->name(), polarity, in);
      case ExprKind::constant:
        if (e->value().as_bool() == polarity) return in;
        place(in.lane, alloc_col(), Cell::black);
        return std::nullopt;
      case ExprKind::op_not:
        return realize(e->lhs(), !polarity, in);
      case ExprKind::op_and:
      case ExprKind::op_or: {
        const bool series = (e->kind() == ExprKind::op_and) == polarity;
        if (series) {
          auto mid = realize(e->lhs(), polarity, in);
          if (!mid) return std::nullopt;
          return realize(e->rhs(), polarity, *mid);
        }
        return parallel(e->lhs(), e->rhs(), polarity, in);
      }
      default:
        throw CompileError("non-lowered operator in compile_grid");
    }
  }

  // One port visit: the ray climbs to the port's ground, the coupler returns
  // it on the rail matching the input; the wanted rail continues on a fresh
  // lane, the other rail dies in a black body.
  Anchor contact(const std::string& var, bool polarity, Anchor in) {
    const int a = next_col_;
    next_col_ += 3;
    ports_.push_back({optics::PortRole::input, var, Side::north, a, a + 1, a + 2});
    place(in.lane, a + 1, Cell::mirror_rev);  // E -> N, up to the port
    const int die_row = alloc_row();
    const int out_lane = alloc_row();
    const int take_col = polarity ? a : a + 2;
    const int die_col = polarity ? a + 2 : a;
    place(die_row, die_col, Cell::black);
    place(out_lane, take_col, Cell::mirror_fwd);  // S -> E, onward
    return {out_lane, take_col};
  }

  std::optional<Anchor> parallel(const ExprPtr& l, const ExprPtr& r,
                                 bool polarity, Anchor in) {
    const int split_col = alloc_col();
    place(in.lane, split_col, Cell::half_fwd);  // E -> {E, S}
    const int lower_lane = alloc_row();
    place(lower_lane, split_col, Cell::mirror_fwd);  // S -> E
    auto exit1 = realize(l, polarity, {in.lane, split_col});
    auto exit2 = realize(r, polarity, {lower_lane, split_col});
    if (!exit1 && !exit2) return std::nullopt;
    if (!exit1) return exit2;
    if (!exit2) return exit1;
    const int merge_lane = alloc_row();
    const int trap_row = alloc_row();
    const int c1 = alloc_col();
    const int c2 = alloc_col();
    place(exit1->lane, c1, Cell::mirror_fwd);  // E -> S
    place(merge_lane, c1, Cell::mirror_fwd);   // S -> E
    place(exit2->lane, c2, Cell::mirror_fwd);  // E -> S
    place(merge_lane, c2, Cell::half_fwd);     // joins; ghosts continue south
    place(trap_row, c2, Cell::black);          // and are absorbed here
    return Anchor{merge_lane, c2};
  }

  ExprPtr expr_;
  std::map<std::pair<int, int>, Cell> cells_;
  std::vector<OpticalPort> ports_;
  int next_row_ = 3;  // rows 0..2 are the output rails and probe lane
  int next_col_ = 2;  // cols 0..1 are the probe split descents
};

}  // namespace

optics::OpticalGrid compile_grid(const ExprPtr& e) {
  // A single primitive gate over plain variables is the library grid itself.
  if ((e->kind() == ExprKind::op_and || e->kind() == ExprKind::op_or) &&
      e->lhs()->kind() == ExprKind::variable &&
      e->rhs()->kind() == ExprKind::variable) {
    OpticalGrid g = optics::gate_grid(e->kind() == ExprKind::op_and
                                          ? optics::GateName::AND
                                          : optics::GateName::OR);
    for (auto& p : g.ports) {
      if (p.role != optics::PortRole::input) continue;
      p.var = (p.var == "A") ? e->lhs()->name() : e->rhs()->name();
    }
    return g;
  }
  return GridCompiler(e).run();
}

}  // namespace structlogic::frontend
