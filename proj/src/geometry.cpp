#include "riders/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace riders {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos == std::string_view::npos
                                            ? std::string_view::npos
                                            : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::int64_t parse_int64(std::string_view text) {
  const BigInt v = parse_bigint(text);
  if (v > BigInt(INT32_MAX) || v < BigInt(INT32_MIN))
    throw InvalidArgument("coordinate out of range: " + std::string(text));
  return v.convert_to<std::int64_t>();
}

Rational cross(const RationalPoint& o, const RationalPoint& a,
               const RationalPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// 0 for directions in the upper half plane (angle in [0, pi)), 1 otherwise.
int half(const Rational& dx, const Rational& dy) {
  return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
}

}  // namespace

std::string MoveSet::to_text() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < moves_.size(); ++r) {
    if (r) out << ';';
    out << moves_[r].c << ',' << moves_[r].d;
  }
  return out.str();
}

MoveSet validate_move_set(
    std::span<const std::pair<std::int64_t, std::int64_t>> raw,
    std::string name) {
  if (raw.empty()) throw InvalidArgument("move set is empty");
  std::vector<Move> moves;
  for (const auto& [c0, d0] : raw) {
    if (c0 == 0 && d0 == 0) throw InvalidArgument("zero move vector");
    if (std::gcd(c0, d0) != 1)
      throw InvalidArgument("move (" + std::to_string(c0) + "," +
                            std::to_string(d0) +
                            ") does not have coprime coordinates");
    Move m{c0, d0};
    if (m.c < 0 || (m.c == 0 && m.d < 0)) m = {-m.c, -m.d};
    if (std::find(moves.begin(), moves.end(), m) != moves.end())
      throw InvalidArgument("moves (" + std::to_string(c0) + "," +
                            std::to_string(d0) +
                            ") and an earlier move have the same slope");
    moves.push_back(m);
  }
  return MoveSet(std::move(moves), std::move(name));
}

std::vector<std::string> preset_names() {
  return {"queen", "rook", "bishop", "nightrider", "semiqueen"};
}

MoveSet preset_piece(std::string_view name) {
  using Raw = std::vector<std::pair<std::int64_t, std::int64_t>>;
  Raw raw;
  if (name == "queen")
    raw = {{1, 0}, {1, 1}, {0, 1}, {1, -1}};
  else if (name == "rook")
    raw = {{1, 0}, {0, 1}};
  else if (name == "bishop")
    raw = {{1, 1}, {1, -1}};
  else if (name == "nightrider")
    raw = {{2, 1}, {1, 2}, {2, -1}, {1, -2}};
  else if (name == "semiqueen")
    raw = {{1, 0}, {0, 1}, {1, 1}};
  else
    throw InvalidArgument("unknown piece '" + std::string(name) + "'");
  return validate_move_set(raw, std::string(name));
}

MoveSet parse_moves(std::string_view text, std::string name) {
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  for (const auto& item : split(text, ';')) {
    const auto xy = split(item, ',');
    if (xy.size() != 2)
      throw InvalidArgument("malformed move '" + item + "', expected c,d");
    raw.emplace_back(parse_int64(xy[0]), parse_int64(xy[1]));
  }
  return validate_move_set(raw, std::move(name));
}

BoardPolygon BoardPolygon::from_inequalities(std::vector<Inequality> ineqs,
                                             std::string label) {
  const std::size_t w = ineqs.size();
  if (w < 3) throw InvalidArgument("a bounded polygon needs >= 3 inequalities");
  for (const auto& h : ineqs)
    if (h.a == 0 && h.b == 0)
      throw InvalidArgument("boundary inequality with zero normal");

  BoardPolygon board;
  board.ineqs_ = std::move(ineqs);
  board.label_ = std::move(label);

  // Pairwise intersections that satisfy every inequality.
  std::vector<RationalPoint> verts;
  for (std::size_t i = 0; i < w; ++i) {
    for (std::size_t j = i + 1; j < w; ++j) {
      const auto& p = board.ineqs_[i];
      const auto& s = board.ineqs_[j];
      const std::int64_t det = p.a * s.b - p.b * s.a;
      if (det == 0) continue;
      RationalPoint v{(p.beta * s.b - s.beta * p.b) / Rational(det),
                      (p.a * s.beta - s.a * p.beta) / Rational(det)};
      if (!board.contains(v)) continue;
      if (std::find(verts.begin(), verts.end(), v) == verts.end())
        verts.push_back(std::move(v));
    }
  }
  // Each inequality must support an edge: tight at exactly two vertices.
  for (const auto& h : board.ineqs_) {
    int tight = 0;
    for (const auto& v : verts)
      if (v.x * h.a + v.y * h.b == h.beta) ++tight;
    if (tight != 2)
      throw InvalidArgument(
          "boundary system is unbounded, degenerate, or has a redundant "
          "inequality");
  }
  if (verts.size() != w)
    throw InvalidArgument("boundary system does not describe a bounded polygon");

  RationalPoint centre{0, 0};
  for (const auto& v : verts) {
    centre.x += v.x;
    centre.y += v.y;
  }
  centre.x /= Rational(static_cast<long>(w));
  centre.y /= Rational(static_cast<long>(w));
  std::sort(verts.begin(), verts.end(),
            [&](const RationalPoint& a, const RationalPoint& b) {
              const int ha = half(a.x - centre.x, a.y - centre.y);
              const int hb = half(b.x - centre.x, b.y - centre.y);
              if (ha != hb) return ha < hb;
              return cross(centre, a, b) > 0;
            });
  Rational twice_area = 0;
  for (std::size_t k = 0; k < w; ++k) {
    const auto& a = verts[k];
    const auto& b = verts[(k + 1) % w];
    twice_area += a.x * b.y - a.y * b.x;
  }
  if (twice_area <= 0) throw InvalidArgument("polygon has zero area");
  board.area_ = twice_area / 2;
  board.vertices_ = std::move(verts);
  return board;
}

BoardPolygon BoardPolygon::square() {
  auto b = rectangle(1, 1);
  b.label_ = "square";
  return b;
}

BoardPolygon BoardPolygon::rectangle(const Rational& a, const Rational& b) {
  if (a <= 0 || b <= 0)
    throw InvalidArgument("rectangle sides must be positive");
  auto board = from_inequalities(
      {{-1, 0, 0}, {0, -1, 0}, {1, 0, a}, {0, 1, b}},
      "rect:" + to_string(a) + "," + to_string(b));
  return board;
}

BigInt BoardPolygon::vertex_denominator() const {
  BigInt out = 1;
  for (const auto& v : vertices_) {
    out = lcm(out, denominator(v.x));
    out = lcm(out, denominator(v.y));
  }
  return out;
}

bool BoardPolygon::is_origin_rectangle() const {
  if (ineqs_.size() != 4) return false;
  for (const auto& h : ineqs_)
    if (h.a != 0 && h.b != 0) return false;
  for (const auto& v : vertices_)
    if (v.x == 0 && v.y == 0) return true;
  return false;
}

std::string BoardPolygon::to_text() const {
  if (!label_.empty()) return label_;
  std::ostringstream out;
  out << "poly:";
  for (std::size_t j = 0; j < ineqs_.size(); ++j) {
    if (j) out << ';';
    out << ineqs_[j].a << ',' << ineqs_[j].b << ',' << to_string(ineqs_[j].beta);
  }
  return out.str();
}

bool BoardPolygon::strictly_inside(const Point& z, std::int64_t t) const {
  for (const auto& h : ineqs_) {
    const BigInt lhs = BigInt(h.a) * z.x + BigInt(h.b) * z.y;
    if (Rational(lhs) >= h.beta * t) return false;
  }
  return true;
}

bool BoardPolygon::contains(const RationalPoint& z) const {
  for (const auto& h : ineqs_)
    if (z.x * h.a + z.y * h.b > h.beta) return false;
  return true;
}

BoardPolygon parse_board(std::string_view text) {
  if (text == "square") return BoardPolygon::square();
  if (text.starts_with("rect:")) {
    const auto parts = split(text.substr(5), ',');
    if (parts.size() != 2)
      throw InvalidArgument("rect board expects 'rect:a,b'");
    return BoardPolygon::rectangle(parse_rational(parts[0]),
                                   parse_rational(parts[1]));
  }
  if (text.starts_with("poly:")) {
    std::vector<Inequality> ineqs;
    for (const auto& item : split(text.substr(5), ';')) {
      const auto f = split(item, ',');
      if (f.size() != 3)
        throw InvalidArgument("malformed inequality '" + item +
                              "', expected a,b,beta");
      ineqs.push_back({parse_int64(f[0]), parse_int64(f[1]),
                       parse_rational(f[2])});
    }
    return BoardPolygon::from_inequalities(std::move(ineqs));
  }
  throw InvalidArgument("unknown board '" + std::string(text) + "'");
}

std::vector<Point> interior_lattice_points(const BoardPolygon& board,
                                           std::int64_t t) {
  if (t < 1) throw InvalidArgument("dilation factor must be >= 1");
  Rational xmin = board.vertices().front().x, xmax = xmin;
  Rational ymin = board.vertices().front().y, ymax = ymin;
  for (const auto& v : board.vertices()) {
    xmin = std::min(xmin, v.x);
    xmax = std::max(xmax, v.x);
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  const auto x0 = floor(xmin * t).convert_to<std::int64_t>();
  const auto x1 = ceil(xmax * t).convert_to<std::int64_t>();
  const auto y0 = floor(ymin * t).convert_to<std::int64_t>();
  const auto y1 = ceil(ymax * t).convert_to<std::int64_t>();

  // a*x + b*y < t*beta  <=>  den*(a*x + b*y) < t*num, in machine integers.
  struct Scaled {
    std::int64_t a, b, rhs;
  };
  std::vector<Scaled> scaled;
  for (const auto& h : board.inequalities()) {
    const BigInt den = denominator(h.beta);
    scaled.push_back({(den * h.a).convert_to<std::int64_t>(),
                      (den * h.b).convert_to<std::int64_t>(),
                      (numerator(h.beta) * t).convert_to<std::int64_t>()});
  }
  std::vector<Point> out;
  for (std::int64_t x = x0; x <= x1; ++x) {
    for (std::int64_t y = y0; y <= y1; ++y) {
      bool inside = true;
      for (const auto& s : scaled) {
        if (s.a * x + s.b * y >= s.rhs) {
          inside = false;
          break;
        }
      }
      if (inside) out.push_back({x, y});
    }
  }
  return out;
}

bool attacks(const Point& zi, const Point& zj, const MoveSet& ms) {
  if (zi == zj) return true;
  const Point delta = zj - zi;
  for (const auto& m : ms.moves()) {
    const Point p = m.perp();
    if (delta.x * p.x + delta.y * p.y == 0) return true;
  }
  return false;
}

std::int64_t move_determinant(const Move& m1, const Move& m2) {
  return m1.c * m2.d - m1.d * m2.c;
}

bool reachable_by_two_moves(const Move& m1, const Move& m2, const Point& delta) {
  const std::int64_t det = move_determinant(m1, m2);
  if (det == 0) throw InvalidArgument("moves are parallel");
  return delta.x % det == 0 && delta.y % det == 0;
}

}  // namespace riders
