#include "riders/exact.hpp"
#include "riders/linalg.hpp"

#include <doctest.h>

using namespace riders;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK(to_string(Rational(-7)) == "-7");
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("x"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational(""), InvalidArgument);
}

TEST_CASE("floor and ceil on negatives") {
  CHECK(floor(Rational(-7, 2)) == -4);
  CHECK(ceil(Rational(-7, 2)) == -3);
  CHECK(floor(Rational(7, 2)) == 3);
  CHECK(ceil(Rational(7, 2)) == 4);
  CHECK(floor(Rational(-3)) == -3);
}

TEST_CASE("combinatorial helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(24, 6) == 134596);
  CHECK(binomial(3, 5) == 0);
  CHECK(ipow(BigInt(3), 4) == 81);
  CHECK(lcm(BigInt(0), BigInt(6)) == 6);
  CHECK(lcm(BigInt(4), BigInt(6)) == 12);
}

TEST_CASE("rref and rank") {
  RationalMatrix a(3, 3);
  a << 1, 2, 3, 2, 4, 6, 1, 0, 1;
  std::vector<Eigen::Index> piv;
  auto b = a;
  CHECK(rref_in_place(b, &piv) == 2);
  CHECK(piv == std::vector<Eigen::Index>{0, 1});
  RationalVector v(3);
  v << 3, 4, 7;  // row0 + row2 * 2
  CHECK(in_row_space<Rational>(b.topRows(2), piv, v));
  v << 0, 0, 1;
  CHECK_FALSE(in_row_space<Rational>(b.topRows(2), piv, v));
}

TEST_CASE("bareiss agrees across scalar types") {
  Matrix<std::int64_t> a(4, 4);
  a << 2, -1, 0, 3, 1, 1, 4, -2, 0, 5, -3, 1, 7, 0, 2, 2;
  const auto d64 = bareiss_determinant<std::int64_t>(a);
  const auto dbig = bareiss_determinant<BigInt>(a.cast<BigInt>());
  CHECK(d64 == 295);
  CHECK(dbig == 295);
  Matrix<std::int64_t> s(2, 2);
  s << 1, 2, 2, 4;
  CHECK(bareiss_determinant<std::int64_t>(s) == 0);
}

TEST_CASE("solve_unique") {
  IntMatrix a(2, 2);
  a << 2, 1, 1, 3;
  Vector<BigInt> b(2);
  b << 1, 2;
  const auto z = solve_unique(a, b);
  REQUIRE(z);
  CHECK((*z)(0) == Rational(1, 5));
  CHECK((*z)(1) == Rational(3, 5));
  a << 1, 2, 2, 4;
  CHECK_FALSE(solve_unique(a, b));
}

TEST_CASE("subset walk is lexicographic and complete") {
  std::vector<std::vector<int>> seen;
  for_each_subset(4, 2, [&](const std::vector<int>& s) {
    seen.push_back(s);
    return true;
  });
  CHECK(seen.size() == 6);
  CHECK(seen.front() == std::vector<int>{0, 1});
  CHECK(seen.back() == std::vector<int>{2, 3});
  int count = 0;
  for_each_subset(5, 0, [&](const std::vector<int>&) { return ++count, true; });
  CHECK(count == 1);
}
