#pragma once

// Slow reference implementations used only by the tests. None of them call
// the library routine they check.

#include "riders/exact.hpp"
#include "riders/geometry.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using riders::BigInt;
using riders::BoardPolygon;
using riders::MoveSet;
using riders::Point;
using riders::Rational;

// Cells strictly inside t*B by direct rational tests over a generous box.
inline std::vector<Point> cells(const BoardPolygon& b, std::int64_t t) {
  Rational lo = 0, hi = 0;
  for (const auto& v : b.vertices()) {
    lo = std::min({lo, v.x, v.y});
    hi = std::max({hi, v.x, v.y});
  }
  const auto a = static_cast<std::int64_t>(riders::floor(lo * t).convert_to<long>()) - 1;
  const auto z = static_cast<std::int64_t>(riders::ceil(hi * t).convert_to<long>()) + 1;
  std::vector<Point> out;
  for (std::int64_t x = a; x <= z; ++x)
    for (std::int64_t y = a; y <= z; ++y) {
      bool in = true;
      for (const auto& h : b.inequalities())
        if (Rational(h.a * x + h.b * y) >= h.beta * t) in = false;
      if (in) out.push_back({x, y});
    }
  return out;
}

// zj - zi parallel to some move, or equal.
inline bool hits(const Point& p, const Point& q, const MoveSet& ms) {
  const std::int64_t dx = q.x - p.x, dy = q.y - p.y;
  if (dx == 0 && dy == 0) return true;
  for (const auto& m : ms.moves())
    if (dx * m.d == dy * m.c) return true;
  return false;
}

// Ordered q-tuples of distinct nonattacking cells, no pruning beyond the
// final pairwise check. Equals the labelled count.
inline BigInt labelled_count(const MoveSet& ms, const BoardPolygon& b, int q,
                             std::int64_t n) {
  const auto pts = cells(b, n + 1);
  std::vector<std::size_t> idx(q, 0);
  BigInt total = 0;
  if (q == 0) return 1;
  std::function<void(int)> rec = [&](int k) {
    if (k == q) {
      for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
          if (hits(pts[idx[i]], pts[idx[j]], ms)) return;
      ++total;
      return;
    }
    for (std::size_t p = 0; p < pts.size(); ++p) {
      idx[k] = p;
      rec(k + 1);
    }
  };
  rec(0);
  return total;
}

struct Edge {
  int i, j, r;
};

// kappa-tuples of cells (repetition allowed) on every edge's move line.
inline BigInt alpha(const std::vector<Edge>& edges, int kappa, const MoveSet& ms,
                    const std::vector<Point>& pts) {
  std::vector<Point> z(kappa);
  BigInt total = 0;
  std::function<void(int)> rec = [&](int k) {
    if (k == kappa) {
      for (const auto& e : edges) {
        const auto& m = ms[e.r];
        if ((z[e.j].x - z[e.i].x) * m.d != (z[e.j].y - z[e.i].y) * m.c) return;
      }
      ++total;
      return;
    }
    for (const auto& p : pts) {
      z[k] = p;
      rec(k + 1);
    }
  };
  rec(0);
  return total;
}

// Rank over Q by plain fraction elimination.
inline int rank(std::vector<std::vector<Rational>> rows) {
  int r = 0;
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int k = r; k < static_cast<int>(rows.size()); ++k)
      if (rows[k][c] != 0) piv = k;
    if (piv < 0) continue;
    std::swap(rows[piv], rows[r]);
    for (int k = 0; k < static_cast<int>(rows.size()); ++k) {
      if (k == r || rows[k][c] == 0) continue;
      const Rational f = rows[k][c] / rows[r][c];
      for (int j = 0; j < cols; ++j) rows[k][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

// Crosscut form of the Moebius function: sum of (-1)^|S| over subsets S of
// the flat's hyperplanes whose intersection is the flat itself.
inline std::int64_t mobius_crosscut(const std::vector<std::vector<Rational>>& normals,
                                    int codim) {
  const int h = static_cast<int>(normals.size());
  std::int64_t total = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t(1) << h); ++s) {
    std::vector<std::vector<Rational>> rows;
    for (int k = 0; k < h; ++k)
      if (s >> k & 1) rows.push_back(normals[k]);
    if (rank(rows) == codim) total += (std::popcount(s) % 2 ? -1 : 1);
  }
  return total;
}

inline std::vector<Rational> normal(int i, int j, const riders::Move& m, int q) {
  std::vector<Rational> v(2 * q, 0);
  v[2 * i] = -m.d;
  v[2 * i + 1] = m.c;
  v[2 * j] = m.d;
  v[2 * j + 1] = -m.c;
  return v;
}

}  // namespace oracle
