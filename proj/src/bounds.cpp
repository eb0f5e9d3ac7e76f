#include "riders/bounds.hpp"

#include "riders/linalg.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <set>
#include <unordered_set>

namespace riders {

namespace {

std::string count_text(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.0f", v);
  return buf;
}

constexpr double kInt64Safe = 4.0e18;

double choose(double n, double k) {
  if (k < 0 || k > n) return 0;
  return std::round(std::exp(std::lgamma(n + 1) - std::lgamma(k + 1) -
                             std::lgamma(n - k + 1)));
}

Matrix<std::int64_t> to_int64(const IntMatrix& a) {
  Matrix<std::int64_t> out(a.rows(), a.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      out(r, c) = a(r, c).convert_to<std::int64_t>();
  return out;
}

BigInt to_big(std::int64_t v) { return BigInt(v); }
BigInt to_big(const BigInt& v) { return v; }

template <typename Scalar>
BigInt lcm_of_minors(const Matrix<Scalar>& a, int order, double budget,
                     double* spent) {
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  if (order > std::min(rows, cols)) return 1;
  *spent += choose(rows, order) * choose(cols, order);
  if (*spent > budget)
    throw CapacityError("lcmd needs more than " + count_text(budget) + " minors");
  BigInt acc = 0;
  std::set<Scalar> seen;
  Matrix<Scalar> sub(order, order);
  for_each_subset(rows, order, [&](const std::vector<int>& rs) {
    for_each_subset(cols, order, [&](const std::vector<int>& cs) {
      for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) sub(i, j) = a(rs[i], cs[j]);
      Scalar d = bareiss_determinant<Scalar>(sub);
      if (d < 0) d = -d;
      if (d != 0 && seen.insert(d).second) acc = lcm(acc, to_big(d));
      return true;
    });
    return true;
  });
  return acc == 0 ? BigInt(1) : acc;
}

BigInt lcmd_impl(const IntMatrix& a, int lo, int hi, double budget) {
  double spent = 0;
  BigInt acc = 1;
  const bool small = hadamard_bound(a) < kInt64Safe;
  const auto fast = small ? to_int64(a) : Matrix<std::int64_t>();
  for (int k = lo; k <= hi; ++k)
    acc = lcm(acc, small ? lcm_of_minors(fast, k, budget, &spent)
                         : lcm_of_minors(a, k, budget, &spent));
  return acc;
}

}  // namespace

IntMatrix GrandMatrix::full() const {
  IntMatrix out(top.rows() + bottom.rows(), top.cols());
  out.topRows(top.rows()) = top;
  out.bottomRows(bottom.rows()) = bottom;
  return out;
}

IntMatrix move_matrix(const MoveSet& ms) {
  IntMatrix m(static_cast<Eigen::Index>(ms.size()), 2);
  for (std::size_t r = 0; r < ms.size(); ++r) {
    const Point p = ms[r].perp();
    m(r, 0) = p.x;
    m(r, 1) = p.y;
  }
  return m;
}

IntMatrix complete_graph_incidence(int q) {
  const int pairs = q * (q - 1) / 2;
  IntMatrix h = IntMatrix::Zero(q, pairs);
  int col = 0;
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j, ++col) {
      h(i, col) = 1;
      h(j, col) = -1;
    }
  return h;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

GrandMatrix grand_matrix(const MoveSet& ms, const BoardPolygon& board, int q) {
  if (q < 1) throw InvalidArgument("grand matrix needs q >= 1");
  const auto m = static_cast<Eigen::Index>(ms.size());
  const auto w = static_cast<Eigen::Index>(board.inequalities().size());
  const Eigen::Index pairs = q * (q - 1) / 2;
  GrandMatrix g;
  g.top = IntMatrix::Zero(pairs * m, 2 * q);
  g.bottom = IntMatrix::Zero(q * w, 2 * q);
  g.rhs = RationalVector::Zero(pairs * m + q * w);
  Eigen::Index row = 0;
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j)
      for (Eigen::Index r = 0; r < m; ++r, ++row) {
        const Point p = ms[r].perp();
        g.top(row, 2 * i) = p.x;
        g.top(row, 2 * i + 1) = p.y;
        g.top(row, 2 * j) = -p.x;
        g.top(row, 2 * j + 1) = -p.y;
      }
  for (int i = 0; i < q; ++i)
    for (Eigen::Index k = 0; k < w; ++k) {
      const auto& h = board.inequalities()[k];
      g.bottom(i * w + k, 2 * i) = h.a;
      g.bottom(i * w + k, 2 * i + 1) = h.b;
      g.rhs(pairs * m + i * w + k) = h.beta;
    }
  return g;
}

DenominatorResult denominator(const MoveSet& ms, const BoardPolygon& board, int q,
                              const BoundsOptions& opts) {
  const GrandMatrix g = grand_matrix(ms, board, q);
  const IntMatrix a = g.full();
  const int rows = static_cast<int>(a.rows());
  const int dim = 2 * q;
  const double systems = choose(rows, dim);
  if (systems > opts.denominator_budget)
    throw CapacityError("denominator needs " + count_text(systems) +
                        " systems, budget " + count_text(opts.denominator_budget));

  // Cramer with an integer right-hand side: scale beta by its common
  // denominator L, then z_k = det(A_k) / (det(A) * L).
  BigInt scale = 1;
  for (Eigen::Index r = 0; r < g.rhs.size(); ++r) scale = lcm(scale, denominator(g.rhs(r)));
  IntMatrix aug(rows, dim + 1);
  aug.leftCols(dim) = a;
  for (int r = 0; r < rows; ++r) aug(r, dim) = numerator(g.rhs(r) * Rational(scale));
  if (hadamard_bound(aug) >= kInt64Safe)
    throw CapacityError("grand matrix entries too large for exact fast path");
  const auto fast = to_int64(aug);

  DenominatorResult out;
  std::set<std::vector<Rational>> seen;
  Matrix<std::int64_t> sub(dim, dim);
  for_each_subset(rows, dim, [&](const std::vector<int>& rs) {
    ++out.systems;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) sub(i, j) = fast(rs[i], j);
    const std::int64_t det = bareiss_determinant<std::int64_t>(sub);
    if (det == 0) return true;
    ++out.nonsingular;
    std::vector<Rational> z(dim);
    for (int k = 0; k < dim; ++k) {
      Matrix<std::int64_t> ak = sub;
      for (int i = 0; i < dim; ++i) ak(i, k) = fast(rs[i], dim);
      z[k] = Rational(BigInt(bareiss_determinant<std::int64_t>(ak))) /
             Rational(BigInt(det) * scale);
    }
    for (int i = 0; i < q; ++i)
      if (!board.contains({z[2 * i], z[2 * i + 1]})) return true;
    if (!seen.insert(z).second) return true;
    Vertex v;
    v.z = RationalVector(dim);
    for (int k = 0; k < dim; ++k) {
      v.z(k) = z[k];
      out.denominator = lcm(out.denominator, denominator(z[k]));
    }
    v.rows = rs;
    out.vertices.push_back(std::move(v));
    return true;
  });
  return out;
}

BigInt lcmd_closed_form_two_moves(const MoveSet& ms, int q) {
  if (ms.size() != 2) throw InvalidArgument("closed-form lcmd needs exactly two moves");
  if (q < 1) throw InvalidArgument("q must be >= 1");
  const BigInt lcmd_m = lcmd_direct(move_matrix(ms));
  BigInt acc = ipow(lcmd_m, static_cast<unsigned>(q - 1));
  const BigInt c1 = ms[0].c, d1 = ms[0].d, c2 = ms[1].c, d2 = ms[1].d;
  for (int p = 1; p <= q / 2; ++p) {
    const auto e = static_cast<unsigned>(p);
    BigInt det = ipow(d1, e) * ipow(c2, e) - ipow(c1, e) * ipow(d2, e);
    if (det < 0) det = -det;
    if (det == 0) continue;
    acc = lcm(acc, ipow(det, static_cast<unsigned>(q / (2 * p))));
  }
  return acc;
}

double minor_count(const IntMatrix& a, int max_order) {
  const auto top = std::min(a.rows(), a.cols());
  const auto hi = max_order < 0 ? top : std::min<Eigen::Index>(max_order, top);
  double total = 0;
  for (Eigen::Index k = 1; k <= hi; ++k)
    total += choose(static_cast<double>(a.rows()), static_cast<double>(k)) *
             choose(static_cast<double>(a.cols()), static_cast<double>(k));
  return total;
}

BigInt lcmd_direct(const IntMatrix& a, int max_order, double budget) {
  const int top = static_cast<int>(std::min(a.rows(), a.cols()));
  const int hi = max_order < 0 ? top : std::min(max_order, top);
  if (minor_count(a, hi) > budget)
    throw CapacityError("lcmd needs " + count_text(minor_count(a, hi)) +
                        " minors, budget " + count_text(budget));
  return lcmd_impl(a, 1, hi, budget);
}

BigInt lcmd_order(const IntMatrix& a, int order, double budget) {
  if (order < 1) throw InvalidArgument("minor order must be >= 1");
  return lcmd_impl(a, order, order, budget);
}

std::string BoundsReport::to_json() const {
  using nlohmann::json;
  json out = {{"piece", piece},
              {"board", board},
              {"q", q},
              {"method", method},
              {"exhaustive", exhaustive},
              {"notes", notes}};
  out["period_observed"] = period_observed ? json(*period_observed) : json(nullptr);
  out["denominator"] = denominator ? json(to_string(*denominator)) : json(nullptr);
  out["lcmd"] = lcmd ? json(to_string(*lcmd)) : json(nullptr);
  return out.dump(2);
}

BoundsReport bounds_report(const MoveSet& ms, const BoardPolygon& board, int q,
                           const BoundsOptions& opts) {
  BoundsReport rep;
  rep.piece = ms.name();
  rep.board = board.to_text();
  rep.q = q;
  try {
    rep.denominator = denominator(ms, board, q, opts).denominator;
  } catch (const CapacityError& e) {
    rep.exhaustive = false;
    rep.notes.push_back(std::string("denominator skipped: ") + e.what());
  }
  const GrandMatrix g = grand_matrix(ms, board, q);
  try {
    if (board.is_origin_rectangle() && ms.size() == 2) {
      rep.method = "closed_form_two_moves";
      rep.lcmd = lcmd_closed_form_two_moves(ms, q);
      if (ms.moves() == preset_piece("bishop").moves())
        rep.notes.push_back(
            "closed form evaluated literally; for the bishop it gives 2^(q-1), not 2^q");
    } else if (board.is_origin_rectangle()) {
      rep.method = "direct_attack_block";
      rep.lcmd = lcmd_direct(g.top, -1, opts.lcmd_budget);
    } else {
      rep.method = "direct_full_order_2q";
      rep.lcmd = lcmd_order(g.full(), 2 * q, opts.lcmd_budget);
    }
  } catch (const CapacityError& e) {
    rep.exhaustive = false;
    rep.lcmd.reset();
    rep.notes.push_back(std::string("lcmd skipped: ") + e.what());
  }
  return rep;
}

}  // namespace riders
