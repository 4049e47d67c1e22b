#include "doctest.h"

#include <cmath>
#include <numeric>

#include "ptangle/algebra.hpp"
#include "ptangle/combinatorics.hpp"
#include "ptangle/expr.hpp"
#include "ptangle/invariant.hpp"
#include "support/generators.hpp"

using namespace ptangle;
using ptangle::testing::Rng;
using ptangle::testing::uniform;

namespace {
PMatrix invariant_of(const ExprPtr& e) { return compute_F(elaborate(*e)); }

PMatrix random_matrix(Rng& rng, int holes, long r = 6) {
  IntMatrix m(2, 1L << holes);
  for (long c = 0; c < m.cols(); ++c) m(0, c) = uniform(rng, -r, r), m(1, c) = uniform(rng, -r, r);
  return PMatrix(m);
}

PMatrix five_hole_head() {
  IntMatrix m(2, 32);
  m << 0, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, -1, 0, -1, 0, 0, 1, 0, 0, -1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
      0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0, 0, 1, 0, 0, 0, 0, -1, 1, 0, 0, -1, 0, -1, 0, 0;
  return PMatrix(m);
}

bool is_square(std::int64_t v) {
  if (v < 0) return false;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
  return r * r == v;
}
}  // namespace

TEST_CASE("five-hole worked example") {
  auto b = [](std::int64_t p) { return PMatrix::ball(p, 1); };
  auto out = compose_fill(five_hole_head(), {b(-4), b(-4), b(2), b(-4), PMatrix::rows({{1, 0}, {0, 1}})});
  CHECK(out == PMatrix::rows({{-32, 16}, {-16, -10}}));
  CHECK(det(out) == 576);
  CHECK(out == j_formula(-4, -4, 2, -4));
}

TEST_CASE("five-hole head reproduces the four-box formula") {
  Rng rng(ptangle::testing::seed());
  auto id = PMatrix::rows({{1, 0}, {0, 1}});
  for (int it = 0; it < 200; ++it) {
    std::int64_t p[4];
    for (auto& v : p) v = uniform(rng, -9, 9);
    auto via_head = compose_fill(five_hole_head(), {PMatrix::ball(p[0], 1), PMatrix::ball(p[1], 1),
                                                    PMatrix::ball(p[2], 1), PMatrix::ball(p[3], 1), id});
    CHECK(via_head == j_formula(p[0], p[1], p[2], p[3]));
    std::int64_t root = p[0] * p[3] - p[1] * p[2];
    CHECK(det(j_formula(p[0], p[1], p[2], p[3])) == root * root);
  }
  CHECK(j_formula(0, 0, 0, 0).is_zero());
}

TEST_CASE("identity filling") {
  Rng rng(ptangle::testing::seed() + 1);
  auto id = PMatrix::rows({{1, 0}, {0, 1}});
  for (int it = 0; it < 50; ++it) {
    auto x = random_matrix(rng, static_cast<int>(uniform(rng, 0, 2)));
    CHECK(compose_fill(id, {x}) == x);
  }
  CHECK_THROWS(compose_fill(id, {}));
}

TEST_CASE("ball sums") {
  CHECK(hsum(PMatrix::ball(1, 3), PMatrix::ball(1, 0)) == PMatrix::ball(3, 0));
  CHECK(hsum(PMatrix::ball(1, 1), PMatrix::ball(1, 1)) == PMatrix::ball(2, 1));
  Rng rng(ptangle::testing::seed() + 2);
  for (int it = 0; it < 200; ++it) {
    auto a = random_matrix(rng, 0), b = random_matrix(rng, 0), c = random_matrix(rng, 0);
    CHECK(vsum(a, PMatrix::ball(1, 0)) == a);
    CHECK(hsum(a, PMatrix::ball(0, 1)) == a);
    CHECK(hsum(a, b) == hsum(b, a));
    CHECK(vsum(a, b) == vsum(b, a));
    CHECK(hsum(hsum(a, b), c) == hsum(a, hsum(b, c)));
    std::int64_t p = a(0, 0), q = a(1, 0), r = b(0, 0), s = b(1, 0);
    CHECK(hsum(a, b) == PMatrix::ball(p * s + q * r, q * s));
    CHECK(vsum(a, b) == PMatrix::ball(p * r, q * r + p * s));
  }
}

TEST_CASE("sphere-ball sums") {
  auto b = PMatrix::rows({{1, 0}, {1, 1}});
  CHECK(sphere_ball_sum(PMatrix::ball(1, 0), b, SphereBallKind::OuterH) == PMatrix::rows({{1, 1}, {0, 0}}));
  Rng rng(ptangle::testing::seed() + 3);
  for (int it = 0; it < 200; ++it) {
    auto ball = random_matrix(rng, 0), s = random_matrix(rng, 1);
    std::int64_t p = ball(0, 0), q = ball(1, 0);
    std::int64_t d = det(s);
    CHECK(det(sphere_ball_sum(ball, s, SphereBallKind::OuterH)) == q * q * d);
    CHECK(det(sphere_ball_sum(ball, s, SphereBallKind::InnerH)) == q * q * d);
    CHECK(det(sphere_ball_sum(ball, s, SphereBallKind::OuterV)) == p * p * d);
    CHECK(det(sphere_ball_sum(ball, s, SphereBallKind::InnerV)) == p * p * d);
    CHECK(det(sphere_ball_sum(PMatrix::ball(0, 1), s, SphereBallKind::OuterH)) == d);
    std::int64_t al = s(0, 0), ga = s(0, 1), be = s(1, 0), de = s(1, 1);
    CHECK(sphere_ball_sum(ball, s, SphereBallKind::OuterH) ==
          PMatrix::rows({{p * be + q * al, p * de + q * ga}, {q * be, q * de}}));
  }
}

TEST_CASE("sphere-ball sums agree with diagrams in both operand orders") {
  Rng rng(ptangle::testing::seed() + 4);
  const std::pair<ExprKind, SphereBallKind> kinds[] = {{ExprKind::HSum, SphereBallKind::OuterH},
                                                       {ExprKind::VSum, SphereBallKind::OuterV},
                                                       {ExprKind::IHSum, SphereBallKind::InnerH},
                                                       {ExprKind::IVSum, SphereBallKind::InnerV}};
  for (int it = 0; it < 30; ++it) {
    auto b = ptangle::testing::random_expr(rng, 0, 5);
    auto s = ptangle::testing::random_expr(rng, 1, 5);
    for (auto [k, sk] : kinds) {
      auto expect = sphere_ball_sum(invariant_of(b), invariant_of(s), sk);
      CHECK(invariant_of(ex::binary(k, b, s)) == expect);
      CHECK(invariant_of(ex::binary(k, s, b)) == expect);
    }
  }
}

TEST_CASE("elementary operations on matrices") {
  auto s = PMatrix::rows({{2, 3}, {5, 7}});
  CHECK(elementary_op(s, MatrixOp::Star) == PMatrix::rows({{2, -3}, {-5, 7}}));
  CHECK(elementary_op(s, MatrixOp::Minus) == PMatrix::rows({{7, 3}, {5, 2}}));
  CHECK(elementary_op(s, MatrixOp::R1) == PMatrix::rows({{-3, 2}, {-7, 5}}));
  CHECK(elementary_op(s, MatrixOp::R2) == PMatrix::rows({{-5, -7}, {2, 3}}));
  CHECK(elementary_op(s, MatrixOp::R) == PMatrix::rows({{7, -5}, {-3, 2}}));
  Rng rng(ptangle::testing::seed() + 5);
  for (int it = 0; it < 200; ++it) {
    auto m = random_matrix(rng, 1);
    CHECK(elementary_op(elementary_op(m, MatrixOp::Minus), MatrixOp::Minus) == m);
    CHECK(elementary_op(m, MatrixOp::R) == elementary_op(elementary_op(m, MatrixOp::R1), MatrixOp::R2));
    CHECK(elementary_op(m, MatrixOp::R) == elementary_op(elementary_op(m, MatrixOp::R2), MatrixOp::R1));
    for (auto op : {MatrixOp::Star, MatrixOp::Minus, MatrixOp::R1, MatrixOp::R2, MatrixOp::R})
      CHECK(det(elementary_op(m, op)) == det(m));
    CHECK(mirror_matrix(m) == elementary_op(m, MatrixOp::Star));
    CHECK(rotate_matrix(m) == elementary_op(m, MatrixOp::R));
  }
}

TEST_CASE("mirror and rotation for several holes agree with diagrams") {
  Rng rng(ptangle::testing::seed() + 6);
  for (int it = 0; it < 30; ++it) {
    auto e = ptangle::testing::random_expr(rng, 2 + it % 2, 6);
    auto f = invariant_of(e);
    CHECK(invariant_of(ex::unary(ExprKind::Mirror, e)) == mirror_matrix(f));
    CHECK(invariant_of(ex::unary(ExprKind::Rot, e)) == rotate_matrix(f));
  }
}

TEST_CASE("mod-4 class") {
  auto r = det_mod4_class(PMatrix::rows({{1, 0}, {0, -1}}));
  CHECK(r.det == -1);
  CHECK(r.mod4 == 3);
  CHECK(r.obstructed);
  r = det_mod4_class(PMatrix::rows({{-32, 16}, {-16, -10}}));
  CHECK(r.det == 576);
  CHECK(r.mod4 == 0);
  CHECK(r.square);
  r = det_mod4_class(PMatrix::rows({{5, -8}, {8, -11}}));
  CHECK(r.det == 9);
  CHECK(r.mod4 == 1);
  CHECK_FALSE(r.obstructed);
  CHECK(det_mod4_class(PMatrix::rows({{2, 0}, {0, 1}})).obstructed);
  CHECK_FALSE(det_mod4_class(PMatrix::rows({{5, 0}, {0, 1}})).square);
}

TEST_CASE("divisibility check") {
  CHECK(krebes_check({{2, 4}}, 6).pass);
  CHECK(krebes_check({{2, 4}}, 6).gcd_product == 2);
  CHECK_FALSE(krebes_check({{3, 0}}, 4).pass);
  CHECK(krebes_check({{0, 0}}, 0).pass);
  CHECK_FALSE(krebes_check({{0, 0}}, 5).pass);
  CHECK(krebes_check({{1, 2}, {3, 0}}, 9).gcd_product == 3);
  CHECK(krebes_check({}, 7).pass);
  CHECK(krebes_check({{-4, 6}}, 2).pass);
  CHECK_THROWS(krebes_check({{1, 1}}, -2));
}

TEST_CASE("formula evaluation matches state sums") {
  Rng rng(ptangle::testing::seed() + 7);
  for (int it = 0; it < 120; ++it) {
    auto e = ptangle::testing::random_expr(rng, static_cast<int>(it % 4), 10);
    CHECK_MESSAGE(evaluate(*e) == invariant_of(e), print_expr(*e));
  }
}

TEST_CASE("composition is functorial on diagrams") {
  Rng rng(ptangle::testing::seed() + 8);
  for (int it = 0; it < 30; ++it) {
    auto s1 = ptangle::testing::random_expr(rng, 1, 5), s2 = ptangle::testing::random_expr(rng, 1, 5);
    CHECK(invariant_of(ex::compose(s2, s1)) == compose(invariant_of(s2), invariant_of(s1)));
  }
}

TEST_CASE("hole-count sums agree with diagrams") {
  Rng rng(ptangle::testing::seed() + 9);
  for (int it = 0; it < 30; ++it) {
    auto a = ptangle::testing::random_expr(rng, static_cast<int>(uniform(rng, 0, 2)), 4);
    auto b = ptangle::testing::random_expr(rng, static_cast<int>(uniform(rng, 0, 1)), 4);
    CHECK(invariant_of(ex::binary(ExprKind::HSum, a, b)) == hsum(invariant_of(a), invariant_of(b)));
    CHECK(invariant_of(ex::binary(ExprKind::VSum, a, b)) == vsum(invariant_of(a), invariant_of(b)));
  }
}

TEST_CASE("reducible expressions have square determinants") {
  Rng rng(ptangle::testing::seed() + 10);
  const SphereBallKind kinds[] = {SphereBallKind::OuterH, SphereBallKind::OuterV, SphereBallKind::InnerH,
                                  SphereBallKind::InnerV};
  for (int it = 0; it < 300; ++it) {
    bool around_j = it % 2 == 1;
    PMatrix core = around_j ? j_formula(uniform(rng, -5, 5), uniform(rng, -5, 5), uniform(rng, -5, 5), uniform(rng, -5, 5))
                            : PMatrix::rows({{1, 0}, {0, 1}});
    PMatrix s = core;
    for (int k = uniform(rng, 0, 3); k > 0; --k)
      s = elementary_op(s, ptangle::testing::coin(rng) ? MatrixOp::R1 : MatrixOp::R2);
    for (int step = uniform(rng, 1, 6); step > 0; --step)
      s = sphere_ball_sum(random_matrix(rng, 0, 4), s, kinds[uniform(rng, 0, 3)]);
    std::int64_t d = det(s), dj = det(core);
    if (dj == 0) {
      CHECK(d == 0);
    } else {
      CHECK(d % dj == 0);
      CHECK(is_square(d / dj));
    }
  }
  // The same through diagrams, starting from the identity.
  for (int it = 0; it < 20; ++it) {
    ExprPtr s = ex::identity();
    for (int step = uniform(rng, 1, 3); step > 0; --step) {
      const ExprKind ks[] = {ExprKind::HSum, ExprKind::VSum, ExprKind::IHSum, ExprKind::IVSum};
      auto b = ptangle::testing::random_expr(rng, 0, 3);
      auto k = ks[uniform(rng, 0, 3)];
      s = ptangle::testing::coin(rng) ? ex::binary(k, b, s) : ex::binary(k, s, b);
    }
    CHECK(is_square(det(invariant_of(s))));
  }
}

TEST_CASE("distinct matrices are separated by a standard probe") {
  Rng rng(ptangle::testing::seed() + 11);
  using Vec = ColumnVector<std::int64_t>;
  Vec e1(2), e2(2), x(2);
  e1 << 1, 0;
  e2 << 0, 1;
  x << 1, 1;
  const Vec basis[3] = {e1, e2, x};
  for (int it = 0; it < 200; ++it) {
    int n = static_cast<int>(uniform(rng, 1, 3));
    PMatrix a = random_matrix(rng, n, 2);
    PMatrix b = ptangle::testing::coin(rng, 0.2) ? a : random_matrix(rng, n, 2);
    bool separated = false;
    long probes = 1;
    for (int j = 0; j < n; ++j) probes *= 3;
    for (long code = 0; code < probes; ++code) {
      std::vector<Vec> parts;
      for (long c = code, j = 0; j < n; ++j, c /= 3) parts.push_back(basis[c % 3]);
      Vec probe = xi<std::int64_t>(parts);
      IntMatrix ia = a.matrix() * probe, ib = b.matrix() * probe;
      if (!(PMatrix(ia) == PMatrix(ib))) separated = true;
    }
    CHECK(separated == !(a == b));
  }
}
