#include "ptangle/algebra.hpp"

#include <cmath>
#include <numeric>

#include "ptangle/checked.hpp"
#include "ptangle/combinatorics.hpp"
#include "ptangle/errors.hpp"

namespace ptangle {

namespace {

using Dense = DenseMatrix<std::int64_t>;

std::int64_t add(std::int64_t a, std::int64_t b) { return checked_add(a, b); }
std::int64_t mul(std::int64_t a, std::int64_t b) { return checked_mul(a, b); }
std::int64_t neg(std::int64_t a) { return checked_neg(a); }

void require_spherical(const PMatrix& s) {
  if (s.cols() != 2) throw ValidationError("expected a 2x2 spherical matrix");
}

void require_ball(const PMatrix& b) {
  if (b.cols() != 1) throw ValidationError("expected a 2x1 ball tangle vector");
}

PMatrix sph(std::int64_t top_left, std::int64_t top_right, std::int64_t bottom_left, std::int64_t bottom_right) {
  return PMatrix::rows({{top_left, top_right}, {bottom_left, bottom_right}});
}

}  // namespace

PMatrix compose_fill(const PMatrix& head, const std::vector<PMatrix>& parts) {
  const int n = head.holes();
  if (static_cast<int>(parts.size()) != n)
    throw ValidationError("compose_fill: head has " + std::to_string(n) + " holes but " +
                          std::to_string(parts.size()) + " parts were given");
  if (n == 0) return head;
  std::vector<Dense> factors;
  for (const auto& p : parts) factors.emplace_back(p.matrix());
  Dense product = checked_product<std::int64_t>(head.matrix(), eta(factors));
  return PMatrix(product);
}

PMatrix compose(const PMatrix& outer, const PMatrix& inner) {
  require_spherical(outer);
  require_spherical(inner);
  return compose_fill(outer, {inner});
}

PMatrix hsum(const PMatrix& a, const PMatrix& b) {
  const Eigen::Index ca = a.cols(), cb = b.cols();
  if (a.holes() + b.holes() > kEtaSizeLimit) throw GuardExceeded("hsum: result too large");
  IntMatrix out(2, ca * cb);
  for (Eigen::Index i = 0; i < ca; ++i)
    for (Eigen::Index j = 0; j < cb; ++j) {
      out(0, i * cb + j) = add(mul(a(0, i), b(1, j)), mul(a(1, i), b(0, j)));
      out(1, i * cb + j) = mul(a(1, i), b(1, j));
    }
  return PMatrix(out);
}

PMatrix vsum(const PMatrix& a, const PMatrix& b) {
  const Eigen::Index ca = a.cols(), cb = b.cols();
  if (a.holes() + b.holes() > kEtaSizeLimit) throw GuardExceeded("vsum: result too large");
  IntMatrix out(2, ca * cb);
  for (Eigen::Index i = 0; i < ca; ++i)
    for (Eigen::Index j = 0; j < cb; ++j) {
      out(0, i * cb + j) = mul(a(0, i), b(0, j));
      out(1, i * cb + j) = add(mul(a(1, i), b(0, j)), mul(a(0, i), b(1, j)));
    }
  return PMatrix(out);
}

PMatrix sphere_ball_sum(const PMatrix& ball, const PMatrix& sphere, SphereBallKind kind) {
  require_ball(ball);
  require_spherical(sphere);
  const std::int64_t p = ball(0, 0), q = ball(1, 0);
  const std::int64_t al = sphere(0, 0), ga = sphere(0, 1), be = sphere(1, 0), de = sphere(1, 1);
  switch (kind) {
    case SphereBallKind::OuterH:
      return sph(add(mul(p, be), mul(q, al)), add(mul(p, de), mul(q, ga)), mul(q, be), mul(q, de));
    case SphereBallKind::OuterV:
      return sph(mul(p, al), mul(p, ga), add(mul(q, al), mul(p, be)), add(mul(q, ga), mul(p, de)));
    case SphereBallKind::InnerH:
      return sph(mul(q, al), add(mul(p, al), mul(q, ga)), mul(q, be), add(mul(p, be), mul(q, de)));
    case SphereBallKind::InnerV:
      return sph(add(mul(q, ga), mul(p, al)), mul(p, ga), add(mul(q, de), mul(p, be)), mul(p, de));
  }
  throw ValidationError("unknown sum kind");
}

PMatrix elementary_op(const PMatrix& s, MatrixOp op) {
  require_spherical(s);
  const std::int64_t al = s(0, 0), ga = s(0, 1), be = s(1, 0), de = s(1, 1);
  switch (op) {
    case MatrixOp::Star: return sph(al, neg(ga), neg(be), de);
    case MatrixOp::Minus: return sph(de, ga, be, al);
    case MatrixOp::R1: return sph(neg(ga), al, neg(de), be);
    case MatrixOp::R2: return sph(neg(be), neg(de), al, ga);
    case MatrixOp::R: return sph(de, neg(be), neg(ga), al);
  }
  throw ValidationError("unknown elementary operation");
}

PMatrix mirror_matrix(const PMatrix& m) {
  const std::vector<int> t = t_sequence(m.holes());
  IntMatrix out(2, m.cols());
  for (Eigen::Index k = 0; k < m.cols(); ++k) {
    const bool odd = t[k] & 1;
    out(0, k) = odd ? neg(m(0, k)) : m(0, k);
    out(1, k) = odd ? m(1, k) : neg(m(1, k));
  }
  return PMatrix(out);
}

PMatrix rotate_matrix(const PMatrix& m) {
  const std::vector<int> t = t_sequence(m.holes());
  const Eigen::Index c = m.cols();
  IntMatrix out(2, c);
  for (Eigen::Index k = 0; k < c; ++k) {
    const bool odd = t[k] & 1;
    const Eigen::Index flipped = c - 1 - k;  // every hole filler exchanged
    out(0, k) = odd ? neg(m(1, flipped)) : m(1, flipped);
    out(1, k) = odd ? m(0, flipped) : neg(m(0, flipped));
  }
  return PMatrix(out);
}

std::int64_t det(const PMatrix& s) {
  require_spherical(s);
  return checked_sub(mul(s(0, 0), s(1, 1)), mul(s(0, 1), s(1, 0)));
}

Mod4Report det_mod4_class(const PMatrix& s) {
  const std::int64_t d = det(s);
  const int cls = static_cast<int>(((d % 4) + 4) % 4);
  bool square = false;
  if (d >= 0) {
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(d)));
    while (r > 0 && r * r > d) --r;
    while ((r + 1) * (r + 1) <= d) ++r;
    square = r * r == d;
  }
  return {d, cls, cls == 2 || cls == 3, square};
}

KrebesReport krebes_check(const std::vector<std::pair<std::int64_t, std::int64_t>>& tangles,
                          std::int64_t magnitude) {
  if (magnitude < 0) throw ValidationError("bracket magnitude must be nonnegative");
  std::int64_t product = 1;
  for (const auto& [p, q] : tangles) product = mul(product, std::gcd(p, q));
  if (product == 0) return {magnitude == 0, 0};
  return {magnitude % product == 0, product};
}

PMatrix j_formula(std::int64_t p1, std::int64_t p2, std::int64_t p3, std::int64_t p4) {
  auto m3 = [](std::int64_t a, std::int64_t b, std::int64_t c) { return mul(mul(a, b), c); };
  const std::int64_t al = add(add(m3(p1, p2, p3), m3(p1, p2, p4)), add(m3(p1, p3, p4), m3(p2, p3, p4)));
  const std::int64_t ga = neg(add(add(mul(p1, p3), mul(p1, p4)), add(mul(p2, p3), mul(p2, p4))));
  const std::int64_t be = add(add(mul(p1, p2), mul(p1, p4)), add(mul(p3, p2), mul(p3, p4)));
  const std::int64_t de = neg(add(add(p1, p2), add(p3, p4)));
  return sph(al, ga, be, de);
}

PMatrix evaluate(const Expr& e) {
  auto arg = [&](std::size_t i) { return evaluate(*e.args[i]); };
  switch (e.kind) {
    case ExprKind::Identity: return PMatrix::rows({{1, 0}, {0, 1}});
    case ExprKind::Zero: return PMatrix::ball(0, 1);
    case ExprKind::Inf: return PMatrix::ball(1, 0);
    case ExprKind::HTwist: return PMatrix::ball(e.twists, 1);
    case ExprKind::VTwist: return PMatrix::ball(1, e.twists);
    case ExprKind::Fill: {
      std::vector<PMatrix> parts;
      for (std::size_t i = 1; i < e.args.size(); ++i) parts.push_back(arg(i));
      return compose_fill(arg(0), parts);
    }
    case ExprKind::Compose: return compose(arg(0), arg(1));
    case ExprKind::HSum: return hsum(arg(0), arg(1));
    case ExprKind::VSum: return vsum(arg(0), arg(1));
    case ExprKind::IHSum:
    case ExprKind::IVSum: {
      PMatrix a = arg(0), b = arg(1);
      const auto kind = e.kind == ExprKind::IHSum ? SphereBallKind::InnerH : SphereBallKind::InnerV;
      if (a.cols() == 1 && b.cols() == 2) return sphere_ball_sum(a, b, kind);
      if (a.cols() == 2 && b.cols() == 1) return sphere_ball_sum(b, a, kind);
      throw ValidationError("inner sum needs one ball and one spherical operand");
    }
    case ExprKind::Mirror: return mirror_matrix(arg(0));
    case ExprKind::Rot: return rotate_matrix(arg(0));
    case ExprKind::HFlip:
    case ExprKind::VFlip: return arg(0);
    case ExprKind::Swap: return elementary_op(arg(0), MatrixOp::Minus);
    case ExprKind::R1: return elementary_op(arg(0), MatrixOp::R1);
    case ExprKind::R2: return elementary_op(arg(0), MatrixOp::R2);
    case ExprKind::Circle:
    case ExprKind::Num:
    case ExprKind::Den: throw ValidationError("a closed link has no matrix invariant");
  }
  throw ValidationError("unknown expression kind");
}

}  // namespace ptangle
