#pragma once

// Random expression and template generators shared by the unit and acceptance suites.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "ptangle/diagram.hpp"
#include "ptangle/expr.hpp"

namespace ptangle::testing {

inline std::uint64_t& seed() {
  static std::uint64_t s = 20261016;
  return s;
}

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline long nonzero_twist(Rng& rng, long budget) {
  long m = std::max(1L, std::min(budget, 5L));
  long v = uniform(rng, 1, m);
  return coin(rng) ? v : -v;
}

// Every generator spends at most `budget` crossings.
ExprPtr random_tangle(Rng& rng, int holes, long budget, int depth);

inline ExprPtr random_ball(Rng& rng, long budget, int depth) {
  if (depth <= 0 || budget <= 0 || coin(rng, 0.15)) {
    switch (budget <= 0 ? uniform(rng, 0, 1) : uniform(rng, 0, 7)) {
      case 0: return ex::inf();
      case 1: return ex::zero();
      case 2:
      case 3:
      case 4: return ex::htwist(nonzero_twist(rng, budget));
      default: return ex::vtwist(nonzero_twist(rng, budget));
    }
  }
  long left = uniform(rng, 0, budget);
  switch (uniform(rng, 0, 6)) {
    case 0: return ex::binary(ExprKind::HSum, random_ball(rng, left, depth - 1), random_ball(rng, budget - left, depth - 1));
    case 1: return ex::binary(ExprKind::VSum, random_ball(rng, left, depth - 1), random_ball(rng, budget - left, depth - 1));
    case 2: return ex::unary(ExprKind::Mirror, random_ball(rng, budget, depth - 1));
    case 3: return ex::unary(ExprKind::Rot, random_ball(rng, budget, depth - 1));
    case 4: return ex::unary(coin(rng) ? ExprKind::HFlip : ExprKind::VFlip, random_ball(rng, budget, depth - 1));
    default: return ex::fill(random_tangle(rng, 1, left, depth - 1), {random_ball(rng, budget - left, depth - 1)});
  }
}

inline ExprPtr random_sphere(Rng& rng, long budget, int depth) {
  if (depth <= 0 || budget <= 0 || coin(rng, 0.1)) return ex::identity();
  long left = uniform(rng, 0, budget);
  auto ball = [&] { return random_ball(rng, left, depth - 1); };
  auto sphere = [&](long b) { return random_sphere(rng, b, depth - 1); };
  switch (uniform(rng, 0, 9)) {
    case 0:
    case 1: {
      ExprKind k = coin(rng) ? ExprKind::HSum : ExprKind::VSum;
      ExprPtr b = ball(), s = sphere(budget - left);
      return coin(rng) ? ex::binary(k, b, s) : ex::binary(k, s, b);
    }
    case 2:
    case 3: {
      ExprKind k = coin(rng) ? ExprKind::IHSum : ExprKind::IVSum;
      ExprPtr b = ball(), s = sphere(budget - left);
      return coin(rng) ? ex::binary(k, b, s) : ex::binary(k, s, b);
    }
    case 4: return ex::compose(sphere(left), sphere(budget - left));
    case 5: return ex::unary(ExprKind::Mirror, sphere(budget));
    case 6: return ex::unary(ExprKind::Swap, sphere(budget));
    case 7: return ex::unary(coin(rng) ? ExprKind::R1 : ExprKind::R2, sphere(budget));
    case 8: return ex::unary(coin(rng) ? ExprKind::Rot : (coin(rng) ? ExprKind::HFlip : ExprKind::VFlip), sphere(budget));
    default: return ex::fill(sphere(left), {sphere(budget - left)});
  }
}

inline ExprPtr random_tangle(Rng& rng, int holes, long budget, int depth) {
  if (holes == 0) return random_ball(rng, budget, depth);
  if (holes == 1 && (depth <= 0 || coin(rng, 0.6))) return random_sphere(rng, budget, depth);
  if (depth <= 0) {
    ExprPtr t = random_sphere(rng, budget / 2, 1);
    for (int h = 1; h < holes; ++h) t = ex::binary(coin(rng) ? ExprKind::HSum : ExprKind::VSum, t, ex::identity());
    return t;
  }
  long left = uniform(rng, 0, budget);
  switch (uniform(rng, 0, 3)) {
    case 0: {
      int h1 = static_cast<int>(uniform(rng, 0, holes));
      ExprKind k = coin(rng) ? ExprKind::HSum : ExprKind::VSum;
      return ex::binary(k, random_tangle(rng, h1, left, depth - 1), random_tangle(rng, holes - h1, budget - left, depth - 1));
    }
    case 1: {
      // Head with k holes; fillers share the requested holes.
      int k = static_cast<int>(uniform(rng, 1, std::min(3, holes + 1)));
      ExprPtr head = random_tangle(rng, k, left, depth - 1);
      std::vector<int> share(k, 0);
      for (int h = 0; h < holes; ++h) ++share[uniform(rng, 0, k - 1)];
      std::vector<ExprPtr> parts;
      long rest = budget - left;
      for (int i = 0; i < k; ++i) {
        long b = i + 1 == k ? rest : uniform(rng, 0, rest);
        rest -= b;
        parts.push_back(random_tangle(rng, share[i], b, depth - 1));
      }
      return ex::fill(head, parts);
    }
    case 2: return ex::unary(coin(rng) ? ExprKind::Mirror : ExprKind::Rot, random_tangle(rng, holes, budget, depth - 1));
    default: return ex::unary(coin(rng) ? ExprKind::HFlip : ExprKind::VFlip, random_tangle(rng, holes, budget, depth - 1));
  }
}

// Crossing counts spread roughly uniformly over 0..budget.
inline ExprPtr random_expr(Rng& rng, int holes, long budget, int depth = 5) {
  long target = uniform(rng, 0, budget);
  ExprPtr best = random_tangle(rng, holes, budget, depth);
  for (int tries = 0; tries < 200 && expr_crossings(*best) < target; ++tries) {
    ExprPtr e = random_tangle(rng, holes, budget, depth);
    if (expr_crossings(*e) > expr_crossings(*best)) best = e;
  }
  return best;
}

// Rebuilds `e` with `wrap` applied to one uniformly chosen subexpression that is a tangle.
inline ExprPtr wrap_random_node(Rng& rng, const ExprPtr& e, const std::function<ExprPtr(ExprPtr)>& wrap) {
  std::vector<const Expr*> nodes;
  std::function<void(const ExprPtr&)> collect = [&](const ExprPtr& x) {
    if (expr_holes(*x) >= 0) nodes.push_back(x.get());
    for (const auto& a : x->args) collect(a);
  };
  collect(e);
  const Expr* target = nodes[uniform(rng, 0, static_cast<long>(nodes.size()) - 1)];
  std::function<ExprPtr(const ExprPtr&)> rebuild = [&](const ExprPtr& x) -> ExprPtr {
    if (x.get() == target) return wrap(x);
    if (x->args.empty()) return x;
    auto copy = std::make_shared<Expr>(*x);
    for (auto& a : copy->args) a = rebuild(a);
    return copy;
  };
  return rebuild(e);
}

// X -> X summed with a cancelling twist pair (a Reidemeister II move on two of X's arcs).
inline ExprPtr insert_r2(Rng& rng, const ExprPtr& e) {
  return wrap_random_node(rng, e, [&](ExprPtr x) {
    long s = coin(rng) ? 1 : -1;
    bool horizontal = coin(rng);
    ExprKind k = horizontal ? ExprKind::HSum : ExprKind::VSum;
    ExprPtr pair = horizontal ? ex::binary(k, ex::htwist(s), ex::htwist(-s))
                              : ex::binary(k, ex::vtwist(s), ex::vtwist(-s));
    return coin(rng) ? ex::binary(k, x, pair) : ex::binary(k, pair, x);
  });
}

// X -> X +v (kinked vertical strand): a Reidemeister I kink on X's lower arcs.
inline ExprPtr insert_r1(Rng& rng, const ExprPtr& e) {
  return wrap_random_node(rng, e, [&](ExprPtr x) {
    ExprPtr kink = ex::binary(ExprKind::HSum, ex::htwist(coin(rng) ? 1 : -1), ex::inf());
    return coin(rng) ? ex::binary(ExprKind::VSum, x, kink) : ex::binary(ExprKind::VSum, kink, x);
  });
}

// Planar frame around a 6-point hole: holes are [6, 4, 4, 4]; the three 4-point holes sit
// around the 6-point one and are joined in a ring. With `open`, two ring arcs are cut and
// routed to a 4-point outer boundary.
inline TangleDiagram delta_frame(bool open) {
  auto H = [](int k) { return Port::hole(1, k); };
  auto Q = [](int i, int k) { return Port::hole(i + 1, k); };
  std::vector<std::pair<Port, Port>> arcs = {
      {H(1), Q(1, SW)}, {H(2), Q(1, SE)}, {H(3), Q(2, NE)}, {H(4), Q(2, NW)},
      {H(5), Q(3, SE)}, {H(6), Q(3, NE)}, {Q(1, NE), Q(2, SE)}};
  if (open) {
    arcs.push_back({Q(3, NW), Port::outer(NW)});
    arcs.push_back({Q(1, NW), Port::outer(NE)});
    arcs.push_back({Q(2, SW), Port::outer(SE)});
    arcs.push_back({Q(3, SW), Port::outer(SW)});
  } else {
    arcs.push_back({Q(2, SW), Q(3, SW)});
    arcs.push_back({Q(3, NW), Q(1, NW)});
  }
  return TangleDiagram(open ? 4 : 0, {6, 4, 4, 4}, 0, arcs);
}

// A template with one 6-point hole: closed (link) or spherical (4 outer points plus one
// 4-point hole besides the 6-point one).
inline TangleDiagram random_delta_template(Rng& rng, bool spherical, long budget) {
  long b1 = uniform(rng, 0, budget), b2 = uniform(rng, 0, budget - b1), b3 = budget - b1 - b2;
  TangleDiagram first = elaborate(*random_expr(rng, spherical ? 1 : 0, b1, 4));
  return fill(delta_frame(spherical), {passthrough(6), first, elaborate(*random_expr(rng, 0, b2, 4)),
                                       elaborate(*random_expr(rng, 0, b3, 4))});
}

}  // namespace ptangle::testing
