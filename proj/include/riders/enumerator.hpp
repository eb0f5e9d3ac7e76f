#pragma once

// Exact brute-force counting of nonattacking placements on dilated boards,
// and the census of combinatorial configuration types. This is the ground
// truth every symbolic route is checked against.

#include "riders/exact.hpp"
#include "riders/geometry.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace riders {

struct EnumerationOptions {
  /// Abort when N^min(q,3) exceeds this many elementary attack tests.
  double budget = 1e10;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct PlacementCount {
  BigInt labelled;    // o_P(q; n)
  BigInt unlabelled;  // u_P(q; n)
  friend bool operator==(const PlacementCount&, const PlacementCount&) = default;
};

enum class CountMethod { brute_force, reconstruction };
std::string to_string(CountMethod m);

/// Exact counts indexed by n. labelled == q! * unlabelled in every row.
struct CountTable {
  std::string piece;
  BoardPolygon board;
  int q = 0;
  CountMethod method = CountMethod::brute_force;
  std::map<std::int64_t, PlacementCount> rows;

  /// Adds a row from a labelled count; throws if it is not divisible by q!.
  void add_labelled(std::int64_t n, const BigInt& labelled);

  /// n -> value, either column.
  std::map<std::int64_t, Rational> column(bool labelled) const;

  /// Header "n,labelled,unlabelled,method".
  std::string to_csv() const;
  /// Big integers as decimal strings; keys sorted.
  std::string to_json() const;
};

/// Counts q-subsets of interior points of (n+1)B with no two attacking.
/// q = 0 yields 1. Throws CapacityError when the search envelope exceeds the
/// budget.
PlacementCount count_nonattacking(const MoveSet& ms, const BoardPolygon& board,
                                  int q, std::int64_t n,
                                  const EnumerationOptions& opts = {});

/// One row per n in [n_from, n_to]. Capacity errors carry the offending n.
CountTable count_series(const MoveSet& ms, const BoardPolygon& board, int q,
                        std::int64_t n_from, std::int64_t n_to,
                        const EnumerationOptions& opts = {});

/// Labelled combinatorial type: for each piece i and move r, the set of
/// pieces j strictly to the left of the directed move line through piece i,
/// i.e. (z_j - z_i) . m_r_perp > 0. Bit j of left(i, r) marks membership.
class ConfigType {
 public:
  ConfigType(int q, int moves) : q_(q), moves_(moves), left_(q * moves, 0) {}

  int q() const { return q_; }
  int moves() const { return moves_; }
  std::uint64_t left(int i, int r) const { return left_[i * moves_ + r]; }
  void set_left(int i, int r, std::uint64_t mask) { left_[i * moves_ + r] = mask; }

  /// The type of the configuration obtained by moving piece i to label
  /// perm[i].
  ConfigType relabelled(const std::vector<int>& perm) const;
  /// Orbit representative under all relabellings (lexicographic minimum).
  ConfigType canonical() const;

  const std::vector<std::uint64_t>& data() const { return left_; }
  friend bool operator==(const ConfigType&, const ConfigType&) = default;
  friend auto operator<=>(const ConfigType&, const ConfigType&) = default;

 private:
  int q_;
  int moves_;
  std::vector<std::uint64_t> left_;
};

/// Computes the left-list family of a nonattacking configuration. Throws
/// InvalidArgument when two pieces attack each other.
ConfigType labelled_type_of(const Configuration& cfg, const MoveSet& ms);

struct TypeCensus {
  BigInt labelled_types;
  BigInt unlabelled_types;
};

/// Distinct configuration types realized by nonattacking placements at size
/// n. Requires q >= 1.
TypeCensus census_types(const MoveSet& ms, const BoardPolygon& board, int q,
                        std::int64_t n, const EnumerationOptions& opts = {});

}  // namespace riders
