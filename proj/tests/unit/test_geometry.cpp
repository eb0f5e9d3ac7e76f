#include "riders/geometry.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace riders;

TEST_CASE("presets are canonical and validated") {
  const auto q = preset_piece("queen");
  CHECK(q.size() == 4);
  for (const auto& m : q.moves()) CHECK((m.c > 0 || (m.c == 0 && m.d == 1)));
  CHECK(preset_piece("nightrider").to_text() == "2,1;1,2;2,-1;1,-2");
  CHECK(preset_piece("semiqueen").size() == 3);
  CHECK_THROWS_AS(preset_piece("dragon"), InvalidArgument);
}

TEST_CASE("move validation") {
  CHECK(parse_moves("-1,0;0,-1").to_text() == "1,0;0,1");
  CHECK_THROWS_AS(parse_moves("2,2"), InvalidArgument);
  CHECK_THROWS_AS(parse_moves("0,0"), InvalidArgument);
  CHECK_THROWS_AS(parse_moves("1,1;-1,-1"), InvalidArgument);
  CHECK_THROWS_AS(parse_moves(""), InvalidArgument);
  CHECK_THROWS_AS(parse_moves("1;2"), InvalidArgument);
}

TEST_CASE("square board") {
  const auto b = BoardPolygon::square();
  CHECK(b.area() == 1);
  CHECK(b.vertices().size() == 4);
  CHECK(b.has_integral_vertices());
  CHECK(b.is_origin_rectangle());
  CHECK(parse_board(b.to_text()) == b);
  for (std::int64_t n = 1; n <= 6; ++n)
    CHECK(interior_lattice_points(b, n + 1).size() == static_cast<std::size_t>(n * n));
}

TEST_CASE("rectangle dilation convention") {
  const auto b = parse_board("rect:3,2");
  CHECK(b.area() == 6);
  for (std::int64_t n = 1; n <= 5; ++n) {
    const auto pts = interior_lattice_points(b, n + 1);
    CHECK(pts.size() == static_cast<std::size_t>((3 * (n + 1) - 1) * (2 * (n + 1) - 1)));
    CHECK(pts.size() == oracle::cells(b, n + 1).size());
  }
}

TEST_CASE("rational triangle") {
  const auto b = parse_board("poly:-1,0,0;0,-1,0;2,1,1");
  CHECK(b.area() == Rational(1, 4));
  CHECK(b.vertex_denominator() == 2);
  CHECK_FALSE(b.is_origin_rectangle());
  // counterclockwise means a positive shoelace sum
  const auto& v = b.vertices();
  Rational twice = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const auto& a = v[k];
    const auto& c = v[(k + 1) % v.size()];
    twice += a.x * c.y - a.y * c.x;
  }
  CHECK(twice == Rational(1, 2));
  for (std::int64_t t = 1; t <= 9; ++t)
    CHECK(interior_lattice_points(b, t) == oracle::cells(b, t));
}

TEST_CASE("board validation") {
  CHECK_THROWS_AS(parse_board("poly:1,0,1;-1,0,0"), InvalidArgument);           // strip
  CHECK_THROWS_AS(parse_board("poly:1,0,1;-1,0,0;0,1,1"), InvalidArgument);     // unbounded
  CHECK_THROWS_AS(parse_board("poly:1,0,1;-1,0,0;0,1,1;0,-1,0;1,1,5"),
                  InvalidArgument);                                             // redundant
  CHECK_THROWS_AS(parse_board("poly:1,0,0;-1,0,0;0,1,1;0,-1,0"), InvalidArgument);  // flat
  CHECK_THROWS_AS(parse_board("rect:0,1"), InvalidArgument);
  CHECK_THROWS_AS(parse_board("circle"), InvalidArgument);
}

TEST_CASE("attacks") {
  const auto q = preset_piece("queen");
  CHECK(attacks({0, 0}, {0, 0}, q));
  CHECK(attacks({1, 1}, {4, 4}, q));
  CHECK(attacks({1, 5}, {4, 2}, q));
  CHECK_FALSE(attacks({0, 0}, {1, 2}, q));
  const auto n = preset_piece("nightrider");
  CHECK(attacks({0, 0}, {4, 2}, n));
  CHECK(attacks({0, 0}, {-2, 4}, n));
  CHECK_FALSE(attacks({0, 0}, {1, 1}, n));
  for (int dx = -5; dx <= 5; ++dx)
    for (int dy = -5; dy <= 5; ++dy)
      CHECK(attacks({0, 0}, {dx, dy}, n) == oracle::hits({0, 0}, {dx, dy}, n));
}

TEST_CASE("two-move reachability") {
  const Move a{1, 1}, b{1, -1};
  CHECK(move_determinant(a, b) == -2);
  CHECK(reachable_by_two_moves(a, b, {2, 0}));
  CHECK_FALSE(reachable_by_two_moves(a, b, {1, 0}));
  CHECK_THROWS_AS(reachable_by_two_moves(a, Move{2, 2}, {0, 0}), InvalidArgument);
}
