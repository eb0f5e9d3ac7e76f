#include "riders/quasipoly.hpp"

#include "riders/linalg.hpp"

#include <json.hpp>

#include <sstream>

namespace riders {

Quasipolynomial::Quasipolynomial(int degree,
                                 std::vector<std::vector<Rational>> constituents)
    : degree_(degree), constituents_(std::move(constituents)) {
  if (degree < 0) throw InvalidArgument("negative degree");
  if (constituents_.empty()) throw InvalidArgument("period must be >= 1");
  for (const auto& c : constituents_)
    if (static_cast<int>(c.size()) != degree + 1)
      throw InvalidArgument("constituent length differs from degree + 1");
}

int Quasipolynomial::residue(std::int64_t n) const {
  const std::int64_t p = period();
  return static_cast<int>(((n % p) + p) % p);
}

Rational Quasipolynomial::evaluate(std::int64_t n) const {
  return evaluate_polynomial(constituents_[residue(n)], Rational(n));
}

std::vector<Rational> Quasipolynomial::coefficient(int i) const {
  if (i < 0 || i > degree_) throw InvalidArgument("coefficient index out of range");
  std::vector<Rational> out;
  for (const auto& c : constituents_) out.push_back(c[degree_ - i]);
  return out;
}

std::string Quasipolynomial::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : constituents_) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& v : c) row.push_back(to_string(v));
    cs.push_back(row);
  }
  nlohmann::json out = {{"degree", degree_}, {"period", period()}, {"constituents", cs}};
  if (verified_range)
    out["verified_range"] = {verified_range->first, verified_range->second};
  return out.dump(2);
}

Quasipolynomial Quasipolynomial::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  std::vector<std::vector<Rational>> cs;
  for (const auto& row : j.at("constituents")) {
    cs.emplace_back();
    for (const auto& v : row) cs.back().push_back(parse_rational(v.get<std::string>()));
  }
  Quasipolynomial qp(j.at("degree").get<int>(), std::move(cs));
  if (qp.period() != j.at("period").get<int>())
    throw InvalidArgument("period does not match the constituent count");
  if (j.contains("verified_range"))
    qp.verified_range = {j["verified_range"][0].get<std::int64_t>(),
                         j["verified_range"][1].get<std::int64_t>()};
  return qp;
}

std::string Quasipolynomial::pretty() const {
  std::ostringstream out;
  bool first = true;
  auto power = [](int j) -> std::string {
    if (j == 0) return "";
    if (j == 1) return " n";
    return " n^" + std::to_string(j);
  };
  for (int j = degree_; j >= 0; --j) {
    std::vector<Rational> c;
    for (const auto& k : constituents_) c.push_back(k[j]);
    const bool constant = std::all_of(c.begin(), c.end(),
                                      [&](const Rational& v) { return v == c[0]; });
    if (constant) {
      if (c[0] == 0) continue;
      const Rational mag = abs(c[0]);
      if (first)
        out << (c[0] < 0 ? "-" : "");
      else
        out << (c[0] < 0 ? " - " : " + ");
      if (mag == 1 && j > 0)
        out << power(j).substr(1);
      else
        out << to_string(mag) << power(j);
    } else if (c.size() == 2) {
      // c_k = a + b(-1)^k
      const Rational a = (c[0] + c[1]) / 2;
      const Rational b = (c[0] - c[1]) / 2;
      out << (first ? "" : " + ") << '(';
      if (a != 0) out << to_string(a) << (b < 0 ? " - " : " + ");
      else if (b < 0) out << '-';
      out << to_string(abs(b)) << "(-1)^n)" << power(j);
    } else {
      out << (first ? "" : " + ") << '{';
      for (std::size_t k = 0; k < c.size(); ++k)
        out << (k ? ", " : "") << to_string(c[k]);
      out << '}' << power(j);
    }
    first = false;
  }
  if (first) out << '0';
  return out.str();
}

Rational evaluate_polynomial(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Rational> interpolate(const std::vector<std::pair<Rational, Rational>>& pts) {
  const auto m = static_cast<Eigen::Index>(pts.size());
  RationalMatrix a(m, m);
  RationalVector b(m);
  for (Eigen::Index r = 0; r < m; ++r) {
    Rational xp = 1;
    for (Eigen::Index c = 0; c < m; ++c) {
      a(r, c) = xp;
      xp *= pts[r].first;
    }
    b(r) = pts[r].second;
  }
  const auto sol = solve_unique(a, b);
  if (!sol) throw InvalidArgument("interpolation nodes are not distinct");
  return {sol->data(), sol->data() + m};
}

Quasipolynomial fit(const std::map<std::int64_t, Rational>& values, int period,
                    int degree) {
  if (period < 1) throw InvalidArgument("period must be >= 1");
  if (degree < 0) throw InvalidArgument("degree must be >= 0");
  std::vector<std::vector<std::pair<std::int64_t, Rational>>> by_res(period);
  for (const auto& [n, v] : values)
    by_res[((n % period) + period) % period].push_back({n, v});

  std::vector<std::vector<Rational>> cs;
  std::vector<Mismatch> bad;
  for (int k = 0; k < period; ++k) {
    const auto& pts = by_res[k];
    if (static_cast<int>(pts.size()) < degree + 2)
      throw FitError("insufficient data: residue " + std::to_string(k) + " mod " +
                     std::to_string(period) + " has " + std::to_string(pts.size()) +
                     " values, need " + std::to_string(degree + 2));
    std::vector<std::pair<Rational, Rational>> nodes;
    for (int t = 0; t <= degree; ++t) nodes.push_back({Rational(pts[t].first), pts[t].second});
    cs.push_back(interpolate(nodes));
    for (std::size_t t = degree + 1; t < pts.size(); ++t) {
      const Rational got = evaluate_polynomial(cs.back(), Rational(pts[t].first));
      if (got != pts[t].second) bad.push_back({pts[t].first, pts[t].second, got});
    }
  }
  if (!bad.empty())
    throw FitError("validation mismatch at period " + std::to_string(period), bad);
  Quasipolynomial qp(degree, std::move(cs));
  qp.verified_range = {values.begin()->first, values.rbegin()->first};
  return qp;
}

Quasipolynomial fit(const CountTable& table, int period, int degree, bool labelled) {
  if (degree < 0) degree = 2 * table.q;
  auto qp = fit(table.column(labelled), period, degree);
  if (degree == 2 * table.q) {
    Rational lead = 1;
    for (int k = 0; k < table.q; ++k) lead *= table.board.area();
    if (!labelled) lead /= Rational(factorial(table.q));
    for (const auto& c : qp.coefficient(0))
      if (c != lead)
        throw FitError("leading coefficient " + to_string(c) + " differs from " +
                       to_string(lead));
  }
  return qp;
}

int detect_period(const std::map<std::int64_t, Rational>& values, int degree,
                  int p_max, const std::optional<BigInt>& denominator_bound) {
  if (p_max < 1) throw InvalidArgument("p_max must be >= 1");
  std::vector<Mismatch> last;
  std::string reason = "no period tried";
  for (int p = 1; p <= p_max; ++p) {
    if (denominator_bound && *denominator_bound % p != 0) continue;
    try {
      fit(values, p, degree);
      return p;
    } catch (const FitError& e) {
      last = e.mismatches();
      reason = e.what();
    }
  }
  throw FitError("no period <= " + std::to_string(p_max) + " fits (" + reason + ")",
                 last);
}

int detect_period(const CountTable& table, int p_max,
                  const std::optional<BigInt>& denominator_bound, bool labelled) {
  return detect_period(table.column(labelled), 2 * table.q, p_max, denominator_bound);
}

BigInt types_count(const Quasipolynomial& qp) {
  const Rational v = qp.evaluate(-1);
  if (!is_integer(v) || v < 0)
    throw FitError("evaluation at n = -1 is " + to_string(v) +
                   ", not a nonnegative integer");
  return numerator(v);
}

}  // namespace riders
