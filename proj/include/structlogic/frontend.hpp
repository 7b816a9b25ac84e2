#pragma once

#include <string>

#include "structlogic/dualrail.hpp"
#include "structlogic/netlist.hpp"
#include "structlogic/optics.hpp"

namespace structlogic::frontend {

using dualrail::ExprPtr;

// Expression language: identifiers [A-Za-z][A-Za-z0-9_]*, literals 0/1,
// case-insensitive operators NOT AND OR NAND XOR XNOR, parentheses.
// Precedence: NOT > AND = NAND > OR = XOR = XNOR, binaries left-associative.
ExprPtr parse(const std::string& source);

// Canonical fully parenthesized rendering; parse(to_text(e)) == e.
std::string to_text(const ExprPtr& e);

// Rewrites NAND/XOR/XNOR into NOT/AND/OR, preserving semantics:
//   NAND(x,y) -> NOT(AND(x,y))
//   XOR(x,y)  -> AND(NAND(x,y), OR(x,y))
//   XNOR(x,y) -> NOT(XOR(x,y))
ExprPtr lower(const ExprPtr& e);

bool is_lowered(const ExprPtr& e);

// Lowers a boolean expression to a 3-pin switch netlist: one input port per
// distinct variable, one output port, gates realized from the twist and the
// series/parallel switch gadgets. Deterministic pin naming.
netlist::Netlist compile_netlist(const ExprPtr& e);

// Lowers to an optical grid whose output port behaves as truth_table(e).
// Limited to 8 variables.
optics::OpticalGrid compile_grid(const ExprPtr& e);

}  // namespace structlogic::frontend
