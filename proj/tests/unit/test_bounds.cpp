#include "riders/bounds.hpp"
#include "riders/linalg.hpp"

#include <doctest.h>

using namespace riders;

TEST_CASE("attack block is a Kronecker product") {
  for (const auto& name : preset_names()) {
    const auto ms = preset_piece(name);
    for (int q = 2; q <= 4; ++q) {
      const auto g = grand_matrix(ms, BoardPolygon::square(), q);
      const IntMatrix dt = complete_graph_incidence(q).transpose();
      CHECK(g.top == kronecker(dt, move_matrix(ms)));
      CHECK(g.bottom.rows() == 4 * q);
      CHECK(g.full().rows() == g.top.rows() + g.bottom.rows());
    }
  }
}

TEST_CASE("board block layout") {
  const auto b = parse_board("rect:3,2");
  const auto g = grand_matrix(preset_piece("rook"), b, 2);
  const auto top = g.top.rows();
  CHECK(g.bottom(0, 0) == -1);
  CHECK(g.bottom(1, 1) == -1);
  CHECK(g.bottom(2, 0) == 1);
  CHECK(g.bottom(3, 1) == 1);
  CHECK(g.bottom(4, 2) == -1);
  CHECK(g.bottom(7, 3) == 1);
  CHECK(g.bottom(7, 0) == 0);
  CHECK(g.rhs(top + 2) == 3);
  CHECK(g.rhs(top + 3) == 2);
  CHECK(g.rhs(0) == 0);
}

TEST_CASE("closed form agrees with direct minors") {
  for (const auto* name : {"bishop", "rook"})
    for (int q = 2; q <= 4; ++q) {
      const auto ms = preset_piece(name);
      const auto g = grand_matrix(ms, BoardPolygon::square(), q);
      CHECK(lcmd_closed_form_two_moves(ms, q) == lcmd_direct(g.top));
    }
  CHECK(lcmd_closed_form_two_moves(preset_piece("rook"), 5) == 1);
  CHECK_THROWS_AS(lcmd_closed_form_two_moves(preset_piece("queen"), 2), InvalidArgument);
}

TEST_CASE("minor helpers") {
  IntMatrix a(2, 2);
  a << 2, 3, 4, 9;
  CHECK(minor_count(a) == 5);
  CHECK(lcmd_order(a, 1) == 36);
  CHECK(lcmd_order(a, 2) == 6);
  CHECK(lcmd_direct(a) == 36);
  CHECK_THROWS_AS(lcmd_direct(a, -1, 2), CapacityError);
}

TEST_CASE("vertices lie on their rows and inside the polytope") {
  for (const auto* name : {"rook", "bishop", "queen"})
    for (int q = 1; q <= 3; ++q) {
      const auto ms = preset_piece(name);
      const auto b = BoardPolygon::square();
      const auto g = grand_matrix(ms, b, q);
      const IntMatrix full = g.full();
      const auto res = denominator(ms, b, q);
      CHECK(!res.vertices.empty());
      BigInt lcm_den = 1;
      for (const auto& v : res.vertices) {
        CHECK(v.rows.size() == static_cast<std::size_t>(2 * q));
        for (Eigen::Index r = 0; r < full.rows(); ++r) {
          Rational s = 0;
          for (Eigen::Index c = 0; c < full.cols(); ++c) s += Rational(full(r, c)) * v.z(c);
          if (r >= g.top.rows()) CHECK(s <= g.rhs(r));
          if (std::find(v.rows.begin(), v.rows.end(), r) != v.rows.end())
            CHECK(s == g.rhs(r));
        }
        for (Eigen::Index c = 0; c < v.z.size(); ++c) lcm_den = lcm(lcm_den, denominator(v.z(c)));
      }
      CHECK(lcm_den == res.denominator);
    }
}

TEST_CASE("denominator divides lcmd") {
  for (const auto* name : {"rook", "bishop", "queen", "semiqueen"})
    for (int q = 2; q <= 3; ++q) {
      const auto ms = preset_piece(name);
      const auto r = bounds_report(ms, BoardPolygon::square(), q);
      REQUIRE(r.denominator);
      REQUIRE(r.lcmd);
      CHECK(*r.lcmd % *r.denominator == 0);
      CHECK(r.exhaustive);
    }
}

TEST_CASE("rational board vertex denominators show up") {
  const auto b = parse_board("poly:-1,0,0;0,-1,0;2,1,1");
  const auto res = denominator(preset_piece("rook"), b, 1);
  CHECK(res.denominator == 2);
}

TEST_CASE("denominator budget") {
  BoundsOptions o;
  o.denominator_budget = 10;
  CHECK_THROWS_AS(denominator(preset_piece("queen"), BoardPolygon::square(), 3, o),
                  CapacityError);
  const auto r = bounds_report(preset_piece("queen"), BoardPolygon::square(), 3, o);
  CHECK_FALSE(r.denominator);
  CHECK_FALSE(r.exhaustive);
}
