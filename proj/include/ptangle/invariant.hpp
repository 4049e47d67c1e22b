#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>

#include "ptangle/diagram.hpp"

namespace ptangle {

using IntMatrix = Eigen::Matrix<std::int64_t, 2, Eigen::Dynamic>;

inline constexpr int kMaxInvariantHoles = 5;

// A 2 x 2^n integer matrix up to an overall sign, stored in canonical form: the first
// nonzero entry in row-major order is positive.
class PMatrix {
 public:
  PMatrix() : m_(IntMatrix::Zero(2, 1)) {}
  explicit PMatrix(const IntMatrix& raw);

  // Rows as nested lists, e.g. PMatrix::rows({{1, 0}, {0, 1}}).
  static PMatrix rows(std::initializer_list<std::initializer_list<std::int64_t>> r);
  static PMatrix ball(std::int64_t p, std::int64_t q) { return rows({{p}, {q}}); }

  const IntMatrix& matrix() const { return m_; }
  std::int64_t operator()(int r, Eigen::Index c) const { return m_(r, c); }
  Eigen::Index cols() const { return m_.cols(); }
  int holes() const;
  bool is_zero() const { return m_.isZero(); }

  friend bool operator==(const PMatrix& a, const PMatrix& b) {
    return a.m_.cols() == b.m_.cols() && a.m_ == b.m_;
  }

 private:
  IntMatrix m_;
};

PMatrix canonicalize(const IntMatrix& raw);

// "[[a,b],[c,d]]": rows in order.
std::string to_string(const PMatrix& m);
std::ostream& operator<<(std::ostream& os, const PMatrix& m);

// Matrix invariant of a diagram with n <= 5 holes, from its 2^(n+1) closure brackets.
PMatrix compute_F(const TangleDiagram& d);

// Mod-4 comparison of the two delta-move variants of a template. For a closed template the
// bracket magnitudes are compared; for a spherical one (4 outer points, one 4-point hole)
// all four matrix entries must agree mod 4 under one common sign.
struct DeltaReport {
  bool spherical;
  PMatrix first, second;            // spherical templates
  std::int64_t first_bracket = 0;   // closed templates: magnitudes
  std::int64_t second_bracket = 0;
  int sign = 0;                     // +1 or -1 when congruent, 0 when not
  bool congruent() const { return sign != 0; }
};
DeltaReport delta_report(const TangleDiagram& tmpl);

}  // namespace ptangle
