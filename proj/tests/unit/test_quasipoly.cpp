#include "riders/quasipoly.hpp"

#include <doctest.h>

using namespace riders;

namespace {

std::map<std::int64_t, Rational> sample(const Quasipolynomial& qp, std::int64_t a,
                                        std::int64_t b) {
  std::map<std::int64_t, Rational> m;
  for (auto n = a; n <= b; ++n) m[n] = qp.evaluate(n);
  return m;
}

}  // namespace

TEST_CASE("evaluation and residues") {
  // n^2/2 + (0 | 1/2)
  Quasipolynomial qp(2, {{0, 0, Rational(1, 2)}, {Rational(1, 2), 0, Rational(1, 2)}});
  CHECK(qp.period() == 2);
  CHECK(qp.residue(-1) == 1);
  CHECK(qp.residue(-4) == 0);
  CHECK(qp.evaluate(3) == 5);
  CHECK(qp.evaluate(-1) == 1);
  CHECK(qp.coefficient(0) == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK(qp.coefficient(2) == std::vector<Rational>{0, Rational(1, 2)});
  CHECK_THROWS_AS(Quasipolynomial(2, {{1, 2}}), InvalidArgument);
}

TEST_CASE("fit recovers a known quasipolynomial") {
  Quasipolynomial qp(3, {{1, -2, 0, 3}, {Rational(5, 6), 1, 0, 3}, {0, 0, 7, 3}});
  const auto data = sample(qp, 1, 36);
  CHECK(fit(data, 3, 3) == qp);
  CHECK(detect_period(data, 3, 6) == 3);
  const auto f = fit(data, 6, 3);
  for (std::int64_t n = -10; n <= 30; ++n) CHECK(f.evaluate(n) == qp.evaluate(n));
}

TEST_CASE("fit errors") {
  Quasipolynomial qp(2, {{0, 1, 1}, {1, 1, 1}});
  auto data = sample(qp, 1, 12);
  CHECK_THROWS_AS(fit(data, 1, 2), FitError);
  try {
    fit(data, 1, 2);
  } catch (const FitError& e) {
    CHECK_FALSE(e.mismatches().empty());
  }
  CHECK_THROWS_AS(fit(sample(qp, 1, 4), 2, 2), FitError);  // too few points
  data[12] += 1;
  CHECK_THROWS_AS(fit(data, 2, 2), FitError);
  CHECK_THROWS_AS(detect_period(data, 2, 4), FitError);
}

TEST_CASE("json round trip") {
  Quasipolynomial qp(1, {{Rational(-1, 3), 2}, {4, 2}});
  qp.verified_range = std::make_pair<std::int64_t, std::int64_t>(1, 9);
  const auto back = Quasipolynomial::from_json(qp.to_json());
  CHECK(back == qp);
  CHECK(back.verified_range == qp.verified_range);
  CHECK_THROWS(Quasipolynomial::from_json("{\"degree\": 1}"));
}

TEST_CASE("pretty printing") {
  CHECK(Quasipolynomial(2, {{0, -1, 1}}).pretty() == "n^2 - n");
  const auto two = Quasipolynomial(1, {{0, 1}, {1, 1}}).pretty();
  CHECK(two.find("(-1)^n") != std::string::npos);
  const auto three = Quasipolynomial(1, {{0, 1}, {1, 1}, {2, 1}}).pretty();
  CHECK(three.find('{') != std::string::npos);
}

TEST_CASE("types count at n = -1") {
  // residue 1 constituent is n^2 + 3n + 4 or n^2 + 3n + 5/2
  CHECK(types_count(Quasipolynomial(2, {{0, 0, 1}, {4, 3, 1}})) == 2);
  CHECK_THROWS_AS(types_count(Quasipolynomial(2, {{0, 0, 1}, {Rational(5, 2), 3, 1}})),
                  FitError);
  CHECK_THROWS_AS(types_count(Quasipolynomial(1, {{-5, 1}})), FitError);
}
