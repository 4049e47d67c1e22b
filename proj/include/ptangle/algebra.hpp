#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ptangle/expr.hpp"
#include "ptangle/invariant.hpp"

namespace ptangle {

// Spherical invariants are 2x2 PMatrix values.

// head * eta(parts): the invariant of head with its holes filled by the parts.
PMatrix compose_fill(const PMatrix& head, const std::vector<PMatrix>& parts);
// Invariant of outer o inner: the product of the two matrices.
PMatrix compose(const PMatrix& outer, const PMatrix& inner);

// Outer connect sums on 2 x 2^k matrices; columns ordered by (i, j) in dictionary order.
PMatrix hsum(const PMatrix& a, const PMatrix& b);
PMatrix vsum(const PMatrix& a, const PMatrix& b);

enum class SphereBallKind { OuterH, OuterV, InnerH, InnerV };
// Invariant of a ball tangle summed with a spherical tangle; either operand order gives
// the same matrix.
PMatrix sphere_ball_sum(const PMatrix& ball, const PMatrix& sphere, SphereBallKind kind);

enum class MatrixOp { Star, Minus, R1, R2, R };
PMatrix elementary_op(const PMatrix& s, MatrixOp op);

// Mirror image and quarter-turn rotation for any number of holes.
PMatrix mirror_matrix(const PMatrix& m);
PMatrix rotate_matrix(const PMatrix& m);

std::int64_t det(const PMatrix& s);

struct Mod4Report {
  std::int64_t det;
  int mod4;
  bool obstructed;  // det = 2 or 3 mod 4: not the invariant of any spherical tangle
  bool square;
};
Mod4Report det_mod4_class(const PMatrix& s);

struct KrebesReport {
  bool pass;
  std::int64_t gcd_product;
};
// Passes iff the product of gcd(p_i, q_i) divides the magnitude; gcd(0,0) = 0 divides only 0.
KrebesReport krebes_check(const std::vector<std::pair<std::int64_t, std::int64_t>>& tangles,
                          std::int64_t magnitude);

// Invariant of the four-twist-box spherical tangle with p1..p4 half twists.
PMatrix j_formula(std::int64_t p1, std::int64_t p2, std::int64_t p3, std::int64_t p4);

// Invariant of an expression computed from the composition formulas alone, with no
// diagram or bracket involved.
PMatrix evaluate(const Expr& e);

}  // namespace ptangle
