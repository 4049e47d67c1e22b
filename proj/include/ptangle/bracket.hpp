#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ptangle/cyclotomic.hpp"
#include "ptangle/diagram.hpp"

namespace ptangle {

// Crossing limit for state sums: 24, or PTANGLE_MAX_CROSSINGS when set (at most 28).
int crossing_limit();

// Bit j set means crossing j takes the A-smoothing.
using State = std::uint64_t;

// Circles left after smoothing a closed diagram by `s`, free loops included.
int loop_count(const TangleDiagram& d, State s);

// Kauffman bracket at A = exp(i*pi/4), summed over monocyclic states only.
ZPhi bracket(const TangleDiagram& d);
// Same sum as a ring element, before monomial normalization.
CycInt bracket_cyc(const TangleDiagram& d);
// Reference version: every one of the 2^c states, loops counted from scratch.
CycInt bracket_exhaustive(const TangleDiagram& d);

struct SkeinReport {
  bool pass;
  CycInt lhs;
  CycInt rhs;
};
SkeinReport skein_check(const TangleDiagram& d, int crossing);

// For a 0-hole diagram: coefficient of each crossingless boundary matching once closed
// loops are evaluated (to zero). A matching lists the partner of each outer slot, 0-based.
using Matching = std::vector<int>;
std::map<Matching, CycInt> boundary_expansion(const TangleDiagram& d);

}  // namespace ptangle
