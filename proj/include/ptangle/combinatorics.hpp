#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <vector>

#include "ptangle/checked.hpp"
#include "ptangle/errors.hpp"

namespace ptangle {

// Entries are 1-based; entry j ranges over 1..bounds[j].
using IndexTuple = std::vector<long>;
using Bounds = std::vector<long>;

inline constexpr int kEtaSizeLimit = 12;  // n + sum(k_j)

long tuple_count(const Bounds& bounds);
// i-th tuple (1-based) in dictionary order.
IndexTuple unrank(long i, const Bounds& bounds);
long rank(const IndexTuple& t, const Bounds& bounds);
// t_k = number of 2s in the k-th tuple of {1,2}^n, k = 1..2^n.
std::vector<int> t_sequence(int n);

template <typename Scalar>
using ColumnVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Component m is the product over j of vectors[j] at coordinate j of the m-th index tuple.
template <typename Scalar>
ColumnVector<Scalar> xi(const std::vector<ColumnVector<Scalar>>& vectors) {
  Bounds dims;
  for (const auto& v : vectors) {
    if (v.size() == 0) throw ValidationError("xi: empty factor");
    dims.push_back(static_cast<long>(v.size()));
  }
  const long total = tuple_count(dims);
  ColumnVector<Scalar> out(total);
  for (long m = 1; m <= total; ++m) {
    IndexTuple a = unrank(m, dims);
    Scalar prod(1);
    for (std::size_t j = 0; j < vectors.size(); ++j) prod = checked_mul(prod, vectors[j](a[j] - 1));
    out(m - 1) = prod;
  }
  return out;
}

// Entry (i, m) is the product over j of factors[j] at (row tuple i, column tuple m), coordinate j;
// row tuples range over {1,2}^n and column tuples over the factors' column counts.
template <typename Scalar>
DenseMatrix<Scalar> eta(const std::vector<DenseMatrix<Scalar>>& factors) {
  const int n = static_cast<int>(factors.size());
  Bounds row_dims(n, 2), col_dims;
  int size = n;
  for (const auto& b : factors) {
    if (b.rows() != 2) throw ValidationError("eta: every factor needs 2 rows");
    long c = b.cols();
    int k = 0;
    while ((1L << k) < c) ++k;
    if (c < 1 || (1L << k) != c) throw ValidationError("eta: factor column count must be a power of 2");
    size += k;
    col_dims.push_back(c);
  }
  if (size > kEtaSizeLimit)
    throw GuardExceeded("eta: n + sum(k) = " + std::to_string(size) + " exceeds " +
                        std::to_string(kEtaSizeLimit));
  const long rows = tuple_count(row_dims), cols = tuple_count(col_dims);
  DenseMatrix<Scalar> out(rows, cols);
  for (long i = 1; i <= rows; ++i) {
    IndexTuple a = unrank(i, row_dims);
    for (long m = 1; m <= cols; ++m) {
      IndexTuple b = unrank(m, col_dims);
      Scalar prod(1);
      for (int j = 0; j < n; ++j) prod = checked_mul(prod, factors[j](a[j] - 1, b[j] - 1));
      out(i - 1, m - 1) = prod;
    }
  }
  return out;
}

// Matrix product that throws on integer overflow.
template <typename Scalar>
DenseMatrix<Scalar> checked_product(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  if (a.cols() != b.rows()) throw ValidationError("matrix product: inner dimensions differ");
  DenseMatrix<Scalar> out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      Scalar s(0);
      for (Eigen::Index k = 0; k < a.cols(); ++k) s = checked_add(s, checked_mul(a(i, k), b(k, j)));
      out(i, j) = s;
    }
  return out;
}

}  // namespace ptangle
