#pragma once

// Exact dense linear algebra over Eigen containers. Everything here is
// templated on the scalar so the same routines serve machine integers (fast
// paths with a known magnitude bound), BigInt, and Rational.

#include "riders/exact.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace riders {

/// Reduced row echelon form over a field, in place. Returns the rank; the
/// first `rank` rows hold the reduced basis and the rest are zero.
template <typename Scalar>
Eigen::Index rref_in_place(Matrix<Scalar>& a,
                           std::vector<Eigen::Index>* pivots = nullptr) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Eigen::Index rank = 0;
  if (pivots) pivots->clear();
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r) {
      if (a(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    a.row(pivot).swap(a.row(rank));
    const Scalar lead = a(rank, col);
    for (Eigen::Index c = col; c < cols; ++c) a(rank, c) /= lead;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == rank || a(r, col) == 0) continue;
      const Scalar factor = a(r, col);
      for (Eigen::Index c = col; c < cols; ++c)
        a(r, c) -= factor * a(rank, c);
    }
    if (pivots) pivots->push_back(col);
    ++rank;
  }
  return rank;
}

/// Canonical row basis of the row space of `a`: the nonzero rows of its RREF.
/// Two matrices span the same row space iff their row bases are equal.
template <typename Scalar>
Matrix<Scalar> row_basis(Matrix<Scalar> a) {
  const Eigen::Index rank = rref_in_place(a);
  return a.topRows(rank);
}

template <typename Scalar>
Eigen::Index rank(Matrix<Scalar> a) {
  return rref_in_place(a);
}

/// True iff `v` lies in the row space spanned by the rows of an RREF basis.
template <typename Scalar>
bool in_row_space(const Matrix<Scalar>& rref_basis,
                  const std::vector<Eigen::Index>& pivots,
                  Vector<Scalar> v) {
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    const Eigen::Index col = pivots[k];
    if (v(col) == 0) continue;
    const Scalar factor = v(col);
    v -= factor * rref_basis.row(static_cast<Eigen::Index>(k)).transpose();
  }
  return v.isZero();
}

/// Fraction-free (Bareiss) elimination on a square integer matrix. Every
/// intermediate entry is itself a minor of the input, so a machine-integer
/// Scalar is safe whenever the Hadamard bound of the input fits.
template <typename Scalar>
Scalar bareiss_determinant(Matrix<Scalar> a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw InvalidArgument("determinant of a non-square matrix");
  if (n == 0) return Scalar(1);
  Scalar sign(1);
  Scalar previous(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap = -1;
      for (Eigen::Index r = k + 1; r < n; ++r) {
        if (a(r, k) != 0) {
          swap = r;
          break;
        }
      }
      if (swap < 0) return Scalar(0);
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      }
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Hadamard bound on |det| of any square submatrix, as a double. Used to
/// decide whether a machine-integer fast path is exact.
double hadamard_bound(const IntMatrix& a);

/// Unique solution of a square system A z = b, or nullopt when A is
/// singular. A and b are integer (BigInt) so elimination stays exact.
std::optional<RationalVector> solve_unique(const IntMatrix& a,
                                           const Vector<BigInt>& b);

/// Solves a square Vandermonde-style system over the rationals.
std::optional<RationalVector> solve_unique(const RationalMatrix& a,
                                           const RationalVector& b);

/// Visits every k-subset of {0..n-1} in lexicographic order. The visitor
/// receives the current index vector; returning false stops the walk.
template <typename Visitor>
void for_each_subset(int n, int k, Visitor&& visit) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (!visit(static_cast<const std::vector<int>&>(idx))) return;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace riders
