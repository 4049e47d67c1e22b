#include "ptangle/invariant.hpp"

#include <sstream>
#include <vector>

#include "ptangle/bracket.hpp"
#include "ptangle/checked.hpp"
#include "ptangle/combinatorics.hpp"
#include "ptangle/errors.hpp"

namespace ptangle {

PMatrix canonicalize(const IntMatrix& raw) { return PMatrix(raw); }

PMatrix::PMatrix(const IntMatrix& raw) : m_(raw) {
  const Eigen::Index c = m_.cols();
  if (c < 1 || (c & (c - 1)) != 0) throw ValidationError("PMatrix needs 2^n columns");
  for (int r = 0; r < 2; ++r)
    for (Eigen::Index k = 0; k < c; ++k) {
      if (m_(r, k) == 0) continue;
      if (m_(r, k) < 0)
        for (int rr = 0; rr < 2; ++rr)
          for (Eigen::Index kk = 0; kk < c; ++kk) m_(rr, kk) = checked_neg(m_(rr, kk));
      return;
    }
}

PMatrix PMatrix::rows(std::initializer_list<std::initializer_list<std::int64_t>> r) {
  if (r.size() != 2) throw ValidationError("PMatrix needs exactly 2 rows");
  const auto& top = *r.begin();
  const auto& bottom = *(r.begin() + 1);
  if (top.size() != bottom.size()) throw ValidationError("PMatrix rows differ in length");
  IntMatrix m(2, static_cast<Eigen::Index>(top.size()));
  Eigen::Index k = 0;
  for (auto v : top) m(0, k++) = v;
  k = 0;
  for (auto v : bottom) m(1, k++) = v;
  return PMatrix(m);
}

int PMatrix::holes() const {
  int n = 0;
  while ((Eigen::Index(1) << n) < m_.cols()) ++n;
  return n;
}

std::string to_string(const PMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < 2; ++r) {
    os << (r ? ",[" : "[");
    for (Eigen::Index k = 0; k < m.cols(); ++k) os << (k ? "," : "") << m(r, k);
    os << "]";
  }
  os << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PMatrix& m) { return os << to_string(m); }

PMatrix compute_F(const TangleDiagram& d) {
  if (!d.four_point()) throw ValidationError("compute_F needs 4-point outer boundary and 4-point holes");
  const int n = d.hole_count();
  if (n > kMaxInvariantHoles)
    throw GuardExceeded("compute_F: " + std::to_string(n) + " holes; limit is " + std::to_string(kMaxInvariantHoles));
  const long cols = 1L << n;
  const std::vector<int> t = t_sequence(n);
  const TangleDiagram fillers[2] = {inf_tangle(), zero_tangle()};

  std::vector<ZPhi> entries(2 * cols);  // row-major
  for (long k = 1; k <= cols; ++k) {
    IndexTuple choice = unrank(k, Bounds(n, 2));
    std::vector<TangleDiagram> args;
    for (int j = 0; j < n; ++j) args.push_back(fillers[choice[j] - 1]);
    TangleDiagram ball = n ? fill(d, args) : d;
    // Row 1 carries (-i)^t = A^(-2t); row 2 an extra i = A^2.
    entries[k - 1] = zphi_mul_power(bracket(close(ball, Closure::Numerator)), -2L * t[k - 1]);
    entries[cols + k - 1] = zphi_mul_power(bracket(close(ball, Closure::Denominator)), -2L * t[k - 1] + 2);
  }

  int phase = 0;
  for (const ZPhi& z : entries)
    if (z.magnitude != 0) {
      phase = z.phase;
      break;
    }
  IntMatrix m(2, cols);
  for (int r = 0; r < 2; ++r)
    for (long k = 0; k < cols; ++k) {
      ZPhi z = zphi_mul_power(entries[r * cols + k], -phase);
      if (z.phase != 0)
        throw CoherenceError("closure brackets do not share a common phase (diagram not planar?)");
      m(r, k) = z.magnitude;
    }
  return PMatrix(m);
}

namespace {

bool congruent_mod4(std::int64_t a, std::int64_t b) { return ((a - b) % 4 + 4) % 4 == 0; }

}  // namespace

DeltaReport delta_report(const TangleDiagram& tmpl) {
  auto [d1, d2] = delta_pair(tmpl);
  DeltaReport r{};
  if (d1.is_closed()) {
    r.spherical = false;
    r.first_bracket = bracket(d1).abs();
    r.second_bracket = bracket(d2).abs();
    if (congruent_mod4(r.first_bracket, r.second_bracket))
      r.sign = 1;
    else if (congruent_mod4(r.first_bracket, -r.second_bracket))
      r.sign = -1;
    return r;
  }
  if (d1.hole_count() != 1 || !d1.four_point())
    throw ValidationError("delta template must be closed or spherical once the 6-point hole is filled");
  r.spherical = true;
  r.first = compute_F(d1);
  r.second = compute_F(d2);
  for (int eps : {1, -1}) {
    bool all = true;
    for (int row = 0; row < 2; ++row)
      for (Eigen::Index k = 0; k < 2; ++k) all = all && congruent_mod4(r.first(row, k), eps * r.second(row, k));
    if (all) {
      r.sign = eps;
      break;
    }
  }
  return r;
}

}  // namespace ptangle
