#pragma once

// Pieces, boards and configurations: the primitive objects every other module
// consumes. All values are immutable after construction.

#include "riders/exact.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace riders {

/// An integer lattice point (x, y).
struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
  Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
};

struct RationalPoint {
  Rational x;
  Rational y;
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

/// A basic move m = (c, d): nonzero, coprime, and in canonical slope form
/// (c > 0, or c == 0 and d == 1).
struct Move {
  std::int64_t c = 0;
  std::int64_t d = 0;

  /// m rotated a quarter turn counterclockwise: (d, -c). Points to the left
  /// of the directed move line.
  Point perp() const { return {d, -c}; }
  /// Attack key of a point for this slope: constant along each move line.
  std::int64_t key(const Point& z) const { return d * z.x - c * z.y; }

  friend bool operator==(const Move&, const Move&) = default;
};

/// The basic moves of a rider, in a fixed order that labels hyperplanes.
class MoveSet {
 public:
  MoveSet() = default;
  MoveSet(std::vector<Move> moves, std::string name)
      : moves_(std::move(moves)), name_(std::move(name)) {}

  const std::vector<Move>& moves() const { return moves_; }
  std::size_t size() const { return moves_.size(); }
  const Move& operator[](std::size_t r) const { return moves_[r]; }
  const std::string& name() const { return name_; }

  /// "c1,d1;c2,d2;..." in stored order.
  std::string to_text() const;

  friend bool operator==(const MoveSet&, const MoveSet&) = default;

 private:
  std::vector<Move> moves_;
  std::string name_;
};

/// Validates raw move vectors and normalizes each to its canonical slope
/// representative, keeping input order. Throws InvalidArgument for an empty
/// list, a zero vector, non-coprime coordinates, or a repeated slope.
MoveSet validate_move_set(std::span<const std::pair<std::int64_t, std::int64_t>> raw,
                          std::string name = "custom");

/// Preset pieces: queen, rook, bishop, nightrider, semiqueen.
MoveSet preset_piece(std::string_view name);
std::vector<std::string> preset_names();

/// Parses "c1,d1;c2,d2;..." into a validated MoveSet.
MoveSet parse_moves(std::string_view text, std::string name = "custom");

/// One boundary half-plane a*x + b*y <= beta.
struct Inequality {
  std::int64_t a = 0;
  std::int64_t b = 0;
  Rational beta;
  friend bool operator==(const Inequality&, const Inequality&) = default;
};

/// A bounded, full-dimensional rational convex polygon given by its
/// irredundant boundary inequalities. The dilate t*B has inequalities
/// a*x + b*y <= t*beta; the playable cells at size n are the integer points
/// strictly inside (n+1)*B.
class BoardPolygon {
 public:
  /// Validates and caches vertices. Rejects unbounded, degenerate and
  /// redundant systems with InvalidArgument.
  static BoardPolygon from_inequalities(std::vector<Inequality> ineqs,
                                        std::string label = "");
  /// [0,1]^2, inequalities ordered -x<=0, -y<=0, x<=1, y<=1.
  static BoardPolygon square();
  /// [0,a] x [0,b] with the same inequality order as square().
  static BoardPolygon rectangle(const Rational& a, const Rational& b);

  const std::vector<Inequality>& inequalities() const { return ineqs_; }
  /// Vertices in counterclockwise order.
  const std::vector<RationalPoint>& vertices() const { return vertices_; }
  const Rational& area() const { return area_; }
  /// Least common denominator of all vertex coordinates.
  BigInt vertex_denominator() const;
  bool has_integral_vertices() const { return vertex_denominator() == 1; }
  /// True iff the polygon is an axis-parallel rectangle with a vertex at 0.
  bool is_origin_rectangle() const;

  /// Text form accepted by parse_board; preserves the preset spelling when
  /// the board was built from one.
  std::string to_text() const;

  /// a*x + b*y < t*beta for every inequality.
  bool strictly_inside(const Point& z, std::int64_t t) const;
  /// a*x + b*y <= beta for every inequality.
  bool contains(const RationalPoint& z) const;

  friend bool operator==(const BoardPolygon& l, const BoardPolygon& r) {
    return l.ineqs_ == r.ineqs_;
  }

 private:
  std::vector<Inequality> ineqs_;
  std::vector<RationalPoint> vertices_;
  Rational area_;
  std::string label_;
};

/// Board syntax: "square", "rect:a,b", "poly:a1,b1,beta1;a2,b2,beta2;...".
BoardPolygon parse_board(std::string_view text);

/// Integer points strictly inside t*B, sorted lexicographically by (x, y).
/// Requires t >= 1.
std::vector<Point> interior_lattice_points(const BoardPolygon& board,
                                           std::int64_t t);

/// A placement of q labelled pieces.
struct Configuration {
  std::vector<Point> positions;
  bool labelled = true;
};

/// True iff zi == zj or zj - zi is an integer multiple of some basic move.
bool attacks(const Point& zi, const Point& zj, const MoveSet& ms);

/// det of the 2x2 matrix with columns m1, m2.
std::int64_t move_determinant(const Move& m1, const Move& m2);

/// True iff a piece can travel by delta using only multiples of m1 and m2,
/// i.e. both components of delta are divisible by det(m1, m2). Throws
/// InvalidArgument for parallel moves.
bool reachable_by_two_moves(const Move& m1, const Move& m2, const Point& delta);

}  // namespace riders
