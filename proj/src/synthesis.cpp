#include "ptangle/synthesis.hpp"

#include <string>

#include "ptangle/errors.hpp"
#include "ptangle/invariant.hpp"

namespace ptangle {

namespace {

// [r;0] for r >= 1.
ExprPtr column_base(std::int64_t r) {
  if (r == 1) return ex::inf();
  return ex::binary(ExprKind::HSum, ex::vtwist(r), ex::inf());
}

ExprPtr mirrored(const ExprPtr& e) {
  if (e->kind == ExprKind::Mirror) return e->args[0];
  if (e->kind == ExprKind::HTwist) return ex::htwist(-e->twists);
  if (e->kind == ExprKind::VTwist) return ex::vtwist(-e->twists);
  return ex::unary(ExprKind::Mirror, e);
}

// 0 < a, 0 < b.
ExprPtr positive(std::int64_t b, std::int64_t a) {
  if (a == 1) return ex::htwist(b);
  if (b == 1) return ex::vtwist(a);
  if (b < a)  // [b;a] = [a;b]^(R*)
    return mirrored(ex::unary(ExprKind::Rot, positive(a, b)));
  const std::int64_t quotient = b / a, rest = b % a;
  // [b;a] = [quotient;1] +h [rest;a]
  ExprPtr tail = rest == 0 ? ex::unary(ExprKind::Rot, column_base(a)) : positive(rest, a);
  return ex::binary(ExprKind::HSum, ex::htwist(quotient), tail);
}

}  // namespace

ExprPtr synthesize(std::int64_t p, std::int64_t q) {
  if (p > kSynthesisLimit || p < -kSynthesisLimit || q > kSynthesisLimit || q < -kSynthesisLimit)
    throw GuardExceeded("synthesize: |p| and |q| must be at most " + std::to_string(kSynthesisLimit));
  if (p < 0) {  // [p;q] = [-p;-q]
    p = -p;
    q = -q;
  }
  if (p == 0 && q < 0) q = -q;
  if (p == 0 && q == 0) return ex::binary(ExprKind::HSum, ex::inf(), ex::inf());
  if (q == 0) return column_base(p);
  if (p == 0) return q == 1 ? ex::zero() : ex::unary(ExprKind::Rot, column_base(q));
  if (q < 0) return mirrored(positive(p, -q));
  return positive(p, q);
}

bool verify_recipe(const Expr& recipe, std::int64_t p, std::int64_t q) {
  TangleDiagram d = elaborate(recipe);
  if (d.hole_count() != 0 || d.outer_points() != 4) return false;
  return compute_F(d) == PMatrix::ball(p, q);
}

}  // namespace ptangle
