#include "riders/enumerator.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace riders;

namespace {

// Orbit set of type signatures from a plain enumeration of ordered tuples.
// A signature lists, for each ordered pair (i, j) and move r, the sign of
// (zj - zi) . perp(m_r). Relabelling is handled by minimizing over all
// permutations.
std::size_t census_oracle(const MoveSet& ms, const BoardPolygon& b, int q,
                          std::int64_t n, bool labelled) {
  const auto pts = oracle::cells(b, n + 1);
  std::set<std::vector<int>> seen;
  std::vector<std::size_t> idx(q);
  std::vector<int> perm(q);
  auto signature = [&](const std::vector<int>& p) {
    std::vector<int> s;
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j)
        if (i != j)
          for (const auto& m : ms.moves()) {
            const auto& zi = pts[idx[p[i]]];
            const auto& zj = pts[idx[p[j]]];
            s.push_back((zj.x - zi.x) * m.d - (zj.y - zi.y) * m.c > 0);
          }
    return s;
  };
  std::function<void(int)> rec = [&](int k) {
    if (k == q) {
      for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
          if (oracle::hits(pts[idx[i]], pts[idx[j]], ms)) return;
      for (int i = 0; i < q; ++i) perm[i] = i;
      auto best = signature(perm);
      if (!labelled)
        while (std::next_permutation(perm.begin(), perm.end()))
          best = std::min(best, signature(perm));
      seen.insert(best);
      return;
    }
    for (std::size_t p = 0; p < pts.size(); ++p) {
      idx[k] = p;
      rec(k + 1);
    }
  };
  rec(0);
  return seen.size();
}

}  // namespace

TEST_CASE("counts agree with the unpruned oracle") {
  const std::vector<std::string> boards = {"square", "rect:2,1",
                                           "poly:-1,0,0;0,-1,0;2,1,1"};
  for (const auto& name : preset_names()) {
    const auto ms = preset_piece(name);
    for (const auto& bt : boards) {
      const auto b = parse_board(bt);
      for (int q = 1; q <= 3; ++q)
        for (std::int64_t n = 1; n <= (q == 3 ? 4 : 6); ++n) {
          const auto c = count_nonattacking(ms, b, q, n);
          CHECK(c.labelled == oracle::labelled_count(ms, b, q, n));
          CHECK(c.labelled == c.unlabelled * factorial(q));
        }
    }
  }
}

TEST_CASE("small q edge cases") {
  const auto ms = preset_piece("queen");
  const auto b = BoardPolygon::square();
  CHECK(count_nonattacking(ms, b, 0, 5).unlabelled == 1);
  CHECK(count_nonattacking(ms, b, 1, 5).unlabelled == 25);
  CHECK(count_nonattacking(ms, b, 2, 1).unlabelled == 0);
  CHECK_THROWS_AS(count_nonattacking(ms, b, -1, 5), InvalidArgument);
}

TEST_CASE("classical queens") {
  // n-queens on the n x n board at q = n
  const auto ms = preset_piece("queen");
  const auto b = BoardPolygon::square();
  const std::vector<int> known = {1, 0, 0, 2, 10, 4, 40, 92};
  for (int n = 1; n <= 8; ++n)
    CHECK(count_nonattacking(ms, b, n, n).unlabelled == known[n - 1]);
}

TEST_CASE("capacity error") {
  EnumerationOptions o;
  o.budget = 100;
  CHECK_THROWS_AS(count_nonattacking(preset_piece("queen"), BoardPolygon::square(), 3,
                                     20, o),
                  CapacityError);
}

TEST_CASE("thread count does not change results") {
  const auto ms = preset_piece("nightrider");
  const auto b = parse_board("rect:2,1");
  EnumerationOptions one, four;
  one.threads = 1;
  four.threads = 4;
  for (std::int64_t n = 1; n <= 5; ++n)
    CHECK(count_nonattacking(ms, b, 3, n, one) == count_nonattacking(ms, b, 3, n, four));
}

TEST_CASE("series and table formats") {
  const auto t = count_series(preset_piece("rook"), BoardPolygon::square(), 2, 1, 4);
  CHECK(t.rows.size() == 4);
  CHECK(t.rows.at(3).unlabelled == 18);
  CHECK(t.to_csv().rfind("n,labelled,unlabelled,method\n", 0) == 0);
  const auto col = t.column(false);
  CHECK(col.at(4) == 72);
}

TEST_CASE("type census against orbit oracle") {
  const auto b = BoardPolygon::square();
  for (const auto* name : {"rook", "bishop", "queen"})
    for (int q = 1; q <= 3; ++q) {
      const auto ms = preset_piece(name);
      const std::int64_t n = q == 3 ? 5 : 6;
      const auto c = census_types(ms, b, q, n);
      CHECK(c.labelled_types == census_oracle(ms, b, q, n, true));
      CHECK(c.unlabelled_types == census_oracle(ms, b, q, n, false));
    }
}

TEST_CASE("labelled type rejects attacking configurations") {
  Configuration cfg{{{0, 0}, {2, 2}}, true};
  CHECK_THROWS_AS(labelled_type_of(cfg, preset_piece("bishop")), InvalidArgument);
  const auto t = labelled_type_of(cfg, preset_piece("rook"));
  CHECK(t.relabelled({1, 0}).canonical() == t.canonical());
}
