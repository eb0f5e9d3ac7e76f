#include "riders/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace riders {

double hadamard_bound(const IntMatrix& a) {
  // Product over the largest min(rows, cols) row norms bounds every minor.
  std::vector<double> norms;
  norms.reserve(static_cast<std::size_t>(a.rows()));
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    double s = 0;
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      const double v = a(r, c).convert_to<double>();
      s += v * v;
    }
    norms.push_back(std::sqrt(s));
  }
  std::sort(norms.begin(), norms.end(), std::greater<>());
  double bound = 1;
  const auto k = static_cast<std::size_t>(std::min(a.rows(), a.cols()));
  for (std::size_t i = 0; i < k && i < norms.size(); ++i)
    bound *= std::max(1.0, norms[i]);
  return bound;
}

std::optional<RationalVector> solve_unique(const RationalMatrix& a,
                                           const RationalVector& b) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.size() != n)
    throw InvalidArgument("solve_unique expects a square system");
  RationalMatrix aug(n, n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  std::vector<Eigen::Index> pivots;
  const Eigen::Index r = rref_in_place(aug, &pivots);
  if (r < n || pivots.back() >= n) return std::nullopt;
  return RationalVector(aug.col(n));
}

std::optional<RationalVector> solve_unique(const IntMatrix& a,
                                           const Vector<BigInt>& b) {
  return solve_unique(RationalMatrix(a.cast<Rational>()),
                      RationalVector(b.cast<Rational>()));
}

}  // namespace riders
