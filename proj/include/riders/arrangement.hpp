#pragma once

// The move hyperplane arrangement in R^{2q}: its intersection semilattice,
// Moebius values, slope graphs and isomorphism classes, lattice-point counts
// on flats, and the inclusion-exclusion reconstruction of the nonattacking
// count.
//
// Coordinates of R^{2q} are ordered (x_0, y_0, x_1, y_1, ...). Hyperplane
// (i, j, r) is (z_j - z_i) . m_r_perp = 0.

#include "riders/exact.hpp"
#include "riders/geometry.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace riders {

struct Hyperplane {
  int i = 0;  // i < j
  int j = 0;
  int r = 0;  // move index into the MoveSet
  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

/// All C(q,2)*|M| move hyperplanes, ordered by pair (i<j lexicographic) and
/// then by move index. Requires q >= 2.
std::vector<Hyperplane> build_move_arrangement(const MoveSet& ms, int q);

/// Normal vector of a move hyperplane in R^{2q}.
RationalVector hyperplane_normal(const Hyperplane& h, const MoveSet& ms, int q);

/// Bit k set iff hyperplane k contains the flat. Limits arrangements to 64
/// hyperplanes (q <= 6 for four moves).
using HyperplaneMask = std::uint64_t;

/// An edge e_ij^r of a slope graph (i < j).
using SlopeEdge = Hyperplane;

/// Slope graph relabelled to canonical node numbers 0..kappa-1.
struct SlopeGraphForm {
  int kappa = 0;
  std::vector<SlopeEdge> edges;  // canonical labels, sorted
  std::uint64_t aut = 1;         // label-preserving automorphisms
  std::string key() const;
};

/// Exact canonical form by minimizing the sorted edge list over all kappa!
/// node bijections.
SlopeGraphForm canonical_slope_graph(const std::vector<SlopeEdge>& edges);

struct Flat {
  HyperplaneMask hyperplanes = 0;
  RationalMatrix equations;   // RREF basis, codim x 2q
  int codim = 0;
  std::uint64_t pieces = 0;   // involved pieces
  int kappa = 0;
  std::int64_t mobius = 0;
  std::vector<SlopeEdge> edges;  // one per member hyperplane
  int iso_class = -1;
};

struct IsoClass {
  std::string key;
  int kappa = 0;
  int codim = 0;
  std::int64_t mobius = 0;
  std::uint64_t aut = 1;
  std::vector<std::size_t> members;
  /// C(q,kappa) * kappa! / |Aut|.
  BigInt expected_size() const;
  int q = 0;
};

/// Flats grouped by the multiset of iso classes of their connected
/// components; coefficient is the summed Moebius value.
struct ReconstructionTerm {
  std::vector<int> component_classes;  // sorted
  int kappa = 0;
  std::int64_t coefficient = 0;
};

struct SemilatticeOptions {
  std::size_t max_flats = 2'000'000;
};

/// The intersection semilattice of a move arrangement. Flat 0 is the bottom
/// element R^{2q}; flats are stored in nondecreasing codimension.
class Semilattice {
 public:
  const MoveSet& moves() const { return ms_; }
  int q() const { return q_; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyps_; }
  const std::vector<Flat>& flats() const { return flats_; }
  const Flat& flat(std::size_t id) const { return flats_.at(id); }
  std::size_t size() const { return flats_.size(); }
  const std::vector<IsoClass>& iso_classes() const { return classes_; }
  const std::vector<ReconstructionTerm>& reconstruction_terms() const {
    return terms_;
  }

  /// Flat whose member set is exactly `mask`.
  std::optional<std::size_t> find(HyperplaneMask mask) const;
  /// Smallest flat containing all hyperplanes of `mask` (its member set).
  HyperplaneMask closure(HyperplaneMask mask) const;
  /// Index of the hyperplane (i, j, r).
  int hyperplane_index(int i, int j, int r) const;

  /// JSON report: flats with codim, kappa, mobius, aut, edges, iso class.
  std::string to_json() const;

 private:
  friend Semilattice intersection_semilattice(const std::vector<Hyperplane>&,
                                              const MoveSet&, int,
                                              const SemilatticeOptions&);
  MoveSet ms_;
  int q_ = 0;
  std::vector<Hyperplane> hyps_;
  std::vector<RationalVector> normals_;
  std::vector<Flat> flats_;
  std::unordered_map<HyperplaneMask, std::size_t> index_;
  std::vector<IsoClass> classes_;
  std::vector<ReconstructionTerm> terms_;
};

/// Breadth-first closure: every intersection of hyperplanes appears once,
/// with its member set, codimension, Moebius value, slope graph and
/// isomorphism class. Throws CapacityError past opts.max_flats.
Semilattice intersection_semilattice(const std::vector<Hyperplane>& hyps,
                                     const MoveSet& ms, int q,
                                     const SemilatticeOptions& opts = {});

/// mu(0, U); mu(0, 0) = 1. Throws InvalidArgument for an unknown id.
std::int64_t mobius(const Semilattice& sl, std::size_t flat_id);

/// Splits a flat along the connected components of its slope graph. Returns
/// the ids of the component flats (the flat itself when connected, nothing
/// for the bottom element).
std::vector<std::size_t> decompose(const Semilattice& sl, std::size_t flat_id);

/// Lattice points of the dilated board and per-slope line structure at one
/// size n, shared by all alpha evaluations at that n.
class AlphaEvaluator {
 public:
  AlphaEvaluator(const MoveSet& ms, const BoardPolygon& board, std::int64_t n);

  std::int64_t n() const { return n_; }
  std::size_t lattice_points() const { return pts_.size(); }

  /// alpha for a flat given by its member edges: tuples of interior points
  /// (one per involved piece, repetition allowed) on every member
  /// hyperplane. Multiplies over connected components; memoized per
  /// component isomorphism type.
  BigInt operator()(const std::vector<SlopeEdge>& edges);

  /// Reference count by plain enumeration of kappa-tuples with pairwise
  /// filtering as soon as both endpoints are placed. No decomposition, no
  /// line structure.
  BigInt by_enumeration(const std::vector<SlopeEdge>& edges) const;

 private:
  struct Component {
    int kappa;
    std::vector<SlopeEdge> edges;  // local node labels
  };
  BigInt component_alpha(const Component& c) const;
  BigInt tree_count(const Component& c) const;
  BigInt pinned_search(const Component& c) const;
  std::int32_t point_index(std::int64_t x, std::int64_t y) const;

  MoveSet ms_;
  std::int64_t n_;
  std::vector<Point> pts_;
  // dense grid over the bounding box; -1 outside the board
  std::vector<std::int32_t> grid_;
  std::int64_t xmin_ = 0, ymin_ = 0, width_ = 0, height_ = 0;
  // line_of_[r][p]: line id of point p for slope r; members_[r][id]: points
  std::vector<std::vector<std::int32_t>> line_of_;
  std::vector<std::vector<std::vector<std::int32_t>>> members_;
  std::map<std::string, BigInt> memo_;
};

/// alpha(U; n) for one flat of a semilattice.
BigInt alpha(const Flat& flat, const MoveSet& ms, const BoardPolygon& board,
             std::int64_t n);

/// Sum over flats of mu(0,U) * alpha(U;n) * N^{q - kappa(U)}: the labelled
/// nonattacking count o_P(q; n).
BigInt reconstruct_count(const Semilattice& sl, const BoardPolygon& board,
                         std::int64_t n);

/// Same, reusing a caller-owned evaluator (its n is used).
BigInt reconstruct_count(const Semilattice& sl, AlphaEvaluator& eval);

}  // namespace riders
