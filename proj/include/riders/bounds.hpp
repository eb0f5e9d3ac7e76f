#pragma once

// Period bounds: the denominator of the inside-out polytope by vertex
// enumeration, the closed-form lcmd for two-move pieces, and direct lcm of
// subdeterminants.

#include "riders/exact.hpp"
#include "riders/geometry.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace riders {

/// A z = rhs with A = [top; bottom]. Top rows are ordered by pair (i<j) then
/// move: m_r_perp in piece-i columns, -m_r_perp in piece-j columns. Bottom
/// rows are ordered by piece then inequality.
struct GrandMatrix {
  IntMatrix top;
  IntMatrix bottom;
  RationalVector rhs;  // zeros for top rows, beta_j for bottom rows
  IntMatrix full() const;
};

GrandMatrix grand_matrix(const MoveSet& ms, const BoardPolygon& board, int q);

/// The |M| x 2 matrix with rows m_r_perp.
IntMatrix move_matrix(const MoveSet& ms);

/// The q x C(q,2) oriented incidence matrix of K_q (+1 at i, -1 at j).
IntMatrix complete_graph_incidence(int q);

/// Explicit Kronecker product a (x) b.
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

struct Vertex {
  RationalVector z;
  std::vector<int> rows;  // the 2q defining rows of the grand matrix
};

struct DenominatorResult {
  BigInt denominator = 1;
  std::vector<Vertex> vertices;  // distinct vertices in the closed polytope
  std::uint64_t systems = 0;     // 2q-subsets examined
  std::uint64_t nonsingular = 0;
};

struct BoundsOptions {
  double denominator_budget = 1e7;  // candidate 2q-row systems
  double lcmd_budget = 1e6;         // minors
};

/// Lcm of coordinate denominators over vertices of the inside-out polytope
/// (B^q, A_P). Throws CapacityError when C(rows, 2q) exceeds the budget.
DenominatorResult denominator(const MoveSet& ms, const BoardPolygon& board, int q,
                              const BoundsOptions& opts = {});

/// lcm((lcmd M)^{q-1}, LCM_p |det[[d1^p, c1^p], [d2^p, c2^p]]|^{floor(q/2p)})
/// with zero determinants skipped. Requires exactly two moves and q >= 1.
BigInt lcmd_closed_form_two_moves(const MoveSet& ms, int q);

/// Lcm of |minor| over all nonzero minors of order 1..max_order (all orders
/// when max_order < 0). Throws CapacityError past `budget` minors.
BigInt lcmd_direct(const IntMatrix& a, int max_order = -1, double budget = 1e6);

/// Lcm of the nonzero minors of exactly the given order.
BigInt lcmd_order(const IntMatrix& a, int order, double budget = 1e6);

/// Number of minors of order 1..max_order.
double minor_count(const IntMatrix& a, int max_order = -1);

struct BoundsReport {
  std::string piece;
  std::string board;
  int q = 0;
  std::optional<int> period_observed;
  std::optional<BigInt> denominator;
  std::optional<BigInt> lcmd;
  std::string method;  // how lcmd was obtained
  bool exhaustive = true;
  std::vector<std::string> notes;

  /// {"denominator", "exhaustive", "lcmd", "method", "period_observed", ...}
  std::string to_json() const;
};

/// Denominator and lcmd within budget; anything over budget is left empty
/// and marks the report non-exhaustive.
BoundsReport bounds_report(const MoveSet& ms, const BoardPolygon& board, int q,
                           const BoundsOptions& opts = {});

}  // namespace riders
