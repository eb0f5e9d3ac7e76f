#include "riders/arrangement.hpp"

#include "riders/linalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <numeric>
#include <sstream>

namespace riders {

namespace {

using i128 = __int128;

BigInt to_bigint(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v)
                            : static_cast<unsigned __int128>(v);
  BigInt out = 0;
  BigInt scale = 1;
  const BigInt base = BigInt(1) << 32;
  while (u) {
    out += scale * BigInt(static_cast<std::uint32_t>(u & 0xffffffffu));
    scale *= base;
    u >>= 32;
  }
  return neg ? BigInt(-out) : out;
}

// Connected components of an edge list, as lists of original piece labels.
std::vector<std::vector<int>> components_of(const std::vector<SlopeEdge>& edges) {
  std::vector<int> nodes;
  for (const auto& e : edges) {
    nodes.push_back(e.i);
    nodes.push_back(e.j);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  std::vector<int> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto local = [&](int label) {
    return static_cast<int>(std::lower_bound(nodes.begin(), nodes.end(), label) -
                            nodes.begin());
  };
  for (const auto& e : edges) parent[find(local(e.i))] = find(local(e.j));
  std::map<int, std::vector<int>> groups;
  for (std::size_t k = 0; k < nodes.size(); ++k)
    groups[find(static_cast<int>(k))].push_back(nodes[k]);
  std::vector<std::vector<int>> out;
  for (auto& [root, g] : groups) out.push_back(std::move(g));
  return out;
}

bool edge_less(const SlopeEdge& a, const SlopeEdge& b) {
  return std::tie(a.i, a.j, a.r) < std::tie(b.i, b.j, b.r);
}

}  // namespace

std::vector<Hyperplane> build_move_arrangement(const MoveSet& ms, int q) {
  if (q < 2) throw InvalidArgument("the move arrangement needs q >= 2");
  std::vector<Hyperplane> out;
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j)
      for (int r = 0; r < static_cast<int>(ms.size()); ++r) out.push_back({i, j, r});
  if (out.size() > 64)
    throw CapacityError("more than 64 hyperplanes; lower q");
  return out;
}

RationalVector hyperplane_normal(const Hyperplane& h, const MoveSet& ms, int q) {
  RationalVector v = RationalVector::Zero(2 * q);
  const Point p = ms[h.r].perp();
  v(2 * h.j) = p.x;
  v(2 * h.j + 1) = p.y;
  v(2 * h.i) = -p.x;
  v(2 * h.i + 1) = -p.y;
  return v;
}

std::string SlopeGraphForm::key() const {
  std::ostringstream out;
  out << kappa << ':';
  for (const auto& e : edges) out << e.i << '-' << e.j << '-' << e.r << ',';
  return out.str();
}

SlopeGraphForm canonical_slope_graph(const std::vector<SlopeEdge>& edges) {
  std::vector<int> nodes;
  for (const auto& e : edges) {
    nodes.push_back(e.i);
    nodes.push_back(e.j);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  const int kappa = static_cast<int>(nodes.size());
  if (kappa > 10) throw CapacityError("slope graph too large to canonicalize");

  std::map<int, int> local;
  for (int k = 0; k < kappa; ++k) local[nodes[k]] = k;
  std::vector<SlopeEdge> base;
  for (const auto& e : edges) base.push_back({local[e.i], local[e.j], e.r});

  std::vector<int> perm(kappa);
  std::iota(perm.begin(), perm.end(), 0);
  SlopeGraphForm best;
  best.kappa = kappa;
  best.aut = 0;
  bool first = true;
  std::vector<SlopeEdge> cur(base.size());
  do {
    for (std::size_t k = 0; k < base.size(); ++k) {
      int a = perm[base[k].i], b = perm[base[k].j];
      if (a > b) std::swap(a, b);
      cur[k] = {a, b, base[k].r};
    }
    std::sort(cur.begin(), cur.end(), edge_less);
    if (first || std::lexicographical_compare(cur.begin(), cur.end(),
                                              best.edges.begin(),
                                              best.edges.end(), edge_less)) {
      best.edges = cur;
      best.aut = 1;
      first = false;
    } else if (cur == best.edges) {
      ++best.aut;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

BigInt IsoClass::expected_size() const {
  return binomial(q, kappa) * factorial(kappa) / BigInt(aut);
}

std::optional<std::size_t> Semilattice::find(HyperplaneMask mask) const {
  const auto it = index_.find(mask);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

HyperplaneMask Semilattice::closure(HyperplaneMask mask) const {
  const auto n = static_cast<Eigen::Index>(std::popcount(mask));
  RationalMatrix a(n, 2 * q_);
  Eigen::Index row = 0;
  for (std::size_t h = 0; h < hyps_.size(); ++h)
    if (mask >> h & 1) a.row(row++) = normals_[h].transpose();
  std::vector<Eigen::Index> piv;
  const auto rk = rref_in_place(a, &piv);
  const RationalMatrix basis = a.topRows(rk);
  HyperplaneMask out = 0;
  for (std::size_t h = 0; h < hyps_.size(); ++h)
    if (in_row_space(basis, piv, normals_[h])) out |= HyperplaneMask(1) << h;
  return out;
}

int Semilattice::hyperplane_index(int i, int j, int r) const {
  if (i > j) std::swap(i, j);
  for (std::size_t k = 0; k < hyps_.size(); ++k)
    if (hyps_[k].i == i && hyps_[k].j == j && hyps_[k].r == r)
      return static_cast<int>(k);
  throw InvalidArgument("no such hyperplane");
}

std::string Semilattice::to_json() const {
  using nlohmann::json;
  json flats = json::array();
  for (std::size_t id = 0; id < flats_.size(); ++id) {
    const auto& f = flats_[id];
    json edges = json::array();
    for (const auto& e : f.edges) edges.push_back({e.i, e.j, e.r});
    flats.push_back({{"id", id},
                     {"codim", f.codim},
                     {"kappa", f.kappa},
                     {"mobius", f.mobius},
                     {"aut", classes_[f.iso_class].aut},
                     {"iso_class", f.iso_class},
                     {"edges", edges}});
  }
  json classes = json::array();
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    const auto& k = classes_[c];
    classes.push_back({{"id", c},
                       {"key", k.key},
                       {"kappa", k.kappa},
                       {"codim", k.codim},
                       {"mobius", k.mobius},
                       {"aut", k.aut},
                       {"size", k.members.size()},
                       {"expected_size", to_string(k.expected_size())}});
  }
  json moves = json::array();
  for (const auto& m : ms_.moves()) moves.push_back({m.c, m.d});
  json out = {{"piece", ms_.name()},
              {"moves", moves},
              {"q", q_},
              {"hyperplanes", hyps_.size()},
              {"flats", flats},
              {"iso_classes", classes}};
  return out.dump(2);
}

Semilattice intersection_semilattice(const std::vector<Hyperplane>& hyps,
                                     const MoveSet& ms, int q,
                                     const SemilatticeOptions& opts) {
  if (hyps.size() > 64) throw CapacityError("more than 64 hyperplanes");
  Semilattice sl;
  sl.ms_ = ms;
  sl.q_ = q;
  sl.hyps_ = hyps;
  for (const auto& h : hyps) {
    if (h.i < 0 || h.j >= q || h.i >= h.j || h.r < 0 ||
        h.r >= static_cast<int>(ms.size()))
      throw InvalidArgument("hyperplane label out of range");
    sl.normals_.push_back(hyperplane_normal(h, ms, q));
  }

  auto make_flat = [&](HyperplaneMask mask, RationalMatrix eq, int codim) {
    Flat f;
    f.hyperplanes = mask;
    f.equations = std::move(eq);
    f.codim = codim;
    for (std::size_t h = 0; h < hyps.size(); ++h) {
      if (!(mask >> h & 1)) continue;
      f.edges.push_back(hyps[h]);
      f.pieces |= std::uint64_t(1) << hyps[h].i;
      f.pieces |= std::uint64_t(1) << hyps[h].j;
    }
    f.kappa = std::popcount(f.pieces);
    return f;
  };

  sl.flats_.push_back(make_flat(0, RationalMatrix(0, 2 * q), 0));
  sl.index_[0] = 0;
  // FIFO order keeps codimension nondecreasing.
  for (std::size_t cur = 0; cur < sl.flats_.size(); ++cur) {
    HyperplaneMask covered = sl.flats_[cur].hyperplanes;
    for (std::size_t h = 0; h < hyps.size(); ++h) {
      if (covered >> h & 1) continue;
      const Flat& f = sl.flats_[cur];
      RationalMatrix a(f.codim + 1, 2 * q);
      if (f.codim) a.topRows(f.codim) = f.equations;
      a.row(f.codim) = sl.normals_[h].transpose();
      std::vector<Eigen::Index> piv;
      const auto rk = rref_in_place(a, &piv);
      HyperplaneMask mask = 0;
      for (std::size_t g = 0; g < hyps.size(); ++g)
        if (in_row_space<Rational>(a, piv, sl.normals_[g]))
          mask |= HyperplaneMask(1) << g;
      covered |= mask;
      if (sl.index_.count(mask)) continue;
      if (sl.flats_.size() >= opts.max_flats)
        throw CapacityError("intersection semilattice exceeds " +
                            std::to_string(opts.max_flats) + " flats");
      sl.index_[mask] = sl.flats_.size();
      sl.flats_.push_back(make_flat(mask, a, static_cast<int>(rk)));
    }
  }

  // Isomorphism classes.
  std::map<std::string, int> class_of_key;
  for (std::size_t id = 0; id < sl.flats_.size(); ++id) {
    auto& f = sl.flats_[id];
    const auto form = canonical_slope_graph(f.edges);
    const std::string key = form.key();
    auto [it, inserted] =
        class_of_key.emplace(key, static_cast<int>(sl.classes_.size()));
    if (inserted) {
      IsoClass c;
      c.key = key;
      c.kappa = f.kappa;
      c.codim = f.codim;
      c.aut = form.aut;
      c.q = q;
      sl.classes_.push_back(c);
    }
    f.iso_class = it->second;
    sl.classes_[it->second].members.push_back(id);
  }

  // Moebius: multiplicative over components, a class invariant, and computed
  // by the defining recursion once per connected class.
  std::vector<bool> known(sl.classes_.size(), false);
  sl.flats_[0].mobius = 1;
  known[sl.flats_[0].iso_class] = true;
  sl.classes_[sl.flats_[0].iso_class].mobius = 1;
  std::map<std::vector<int>, std::size_t> term_of;
  for (std::size_t id = 0; id < sl.flats_.size(); ++id) {
    auto& f = sl.flats_[id];
    const auto comps = decompose(sl, id);
    std::vector<int> classes;
    std::int64_t mu = 1;
    for (const auto cid : comps) {
      const int cls = sl.flats_[cid].iso_class;
      classes.push_back(cls);
      if (!known[cls]) {
        // cid == id here: a connected flat of a new class.
        const auto& u = sl.flats_[cid];
        std::int64_t s = 0;
        for (std::size_t v = 0; v < sl.flats_.size(); ++v) {
          const auto& w = sl.flats_[v];
          if (w.codim >= u.codim) break;
          if ((w.hyperplanes & ~u.hyperplanes) == 0) s += w.mobius;
        }
        sl.classes_[cls].mobius = -s;
        known[cls] = true;
      }
      mu *= sl.classes_[cls].mobius;
    }
    f.mobius = mu;
    std::sort(classes.begin(), classes.end());
    auto [it, inserted] = term_of.emplace(classes, sl.terms_.size());
    if (inserted) sl.terms_.push_back({classes, f.kappa, 0});
    sl.terms_[it->second].coefficient += mu;
  }
  for (auto& c : sl.classes_) c.mobius = sl.flats_[c.members.front()].mobius;
  return sl;
}

std::int64_t mobius(const Semilattice& sl, std::size_t flat_id) {
  if (flat_id >= sl.size()) throw InvalidArgument("unknown flat id");
  return sl.flat(flat_id).mobius;
}

std::vector<std::size_t> decompose(const Semilattice& sl, std::size_t flat_id) {
  if (flat_id >= sl.size()) throw InvalidArgument("unknown flat id");
  const Flat& f = sl.flat(flat_id);
  std::vector<std::size_t> out;
  for (const auto& comp : components_of(f.edges)) {
    std::uint64_t members = 0;
    for (int v : comp) members |= std::uint64_t(1) << v;
    HyperplaneMask mask = 0;
    for (std::size_t h = 0; h < sl.hyperplanes().size(); ++h) {
      const auto& hp = sl.hyperplanes()[h];
      if ((f.hyperplanes >> h & 1) && (members >> hp.i & 1))
        mask |= HyperplaneMask(1) << h;
    }
    const auto id = sl.find(mask);
    if (!id) throw std::logic_error("component of a flat is not a flat");
    out.push_back(*id);
  }
  return out;
}

AlphaEvaluator::AlphaEvaluator(const MoveSet& ms, const BoardPolygon& board,
                               std::int64_t n)
    : ms_(ms), n_(n) {
  if (n < 1) throw InvalidArgument("board size n must be >= 1");
  pts_ = interior_lattice_points(board, n + 1);
  if (pts_.size() > static_cast<std::size_t>(INT32_MAX))
    throw CapacityError("too many lattice points", n);
  if (!pts_.empty()) {
    std::int64_t xmax = pts_.front().x, ymax = pts_.front().y;
    xmin_ = xmax;
    ymin_ = ymax;
    for (const auto& p : pts_) {
      xmin_ = std::min(xmin_, p.x);
      ymin_ = std::min(ymin_, p.y);
      xmax = std::max(xmax, p.x);
      ymax = std::max(ymax, p.y);
    }
    width_ = xmax - xmin_ + 1;
    height_ = ymax - ymin_ + 1;
  }
  grid_.assign(static_cast<std::size_t>(width_ * height_), -1);
  for (std::size_t k = 0; k < pts_.size(); ++k)
    grid_[(pts_[k].x - xmin_) * height_ + (pts_[k].y - ymin_)] =
        static_cast<std::int32_t>(k);

  line_of_.resize(ms.size());
  members_.resize(ms.size());
  for (std::size_t r = 0; r < ms.size(); ++r) {
    std::unordered_map<std::int64_t, std::int32_t> id_of_key;
    line_of_[r].resize(pts_.size());
    for (std::size_t k = 0; k < pts_.size(); ++k) {
      const auto key = ms[r].key(pts_[k]);
      auto [it, inserted] = id_of_key.emplace(
          key, static_cast<std::int32_t>(members_[r].size()));
      if (inserted) members_[r].emplace_back();
      line_of_[r][k] = it->second;
      members_[r][it->second].push_back(static_cast<std::int32_t>(k));
    }
  }
}

std::int32_t AlphaEvaluator::point_index(std::int64_t x, std::int64_t y) const {
  x -= xmin_;
  y -= ymin_;
  if (x < 0 || y < 0 || x >= width_ || y >= height_) return -1;
  return grid_[x * height_ + y];
}

BigInt AlphaEvaluator::operator()(const std::vector<SlopeEdge>& edges) {
  BigInt out = 1;
  for (const auto& comp : components_of(edges)) {
    std::uint64_t members = 0;
    for (int v : comp) members |= std::uint64_t(1) << v;
    std::vector<SlopeEdge> sub;
    for (const auto& e : edges)
      if (members >> e.i & 1) sub.push_back(e);
    const auto form = canonical_slope_graph(sub);
    const auto key = form.key();
    auto it = memo_.find(key);
    if (it == memo_.end())
      it = memo_.emplace(key, component_alpha({form.kappa, form.edges})).first;
    out *= it->second;
  }
  return out;
}

BigInt AlphaEvaluator::component_alpha(const Component& c) const {
  // Tree-like components (codim kappa-1) are cut out by any spanning tree.
  RationalMatrix a(static_cast<Eigen::Index>(c.edges.size()), 2 * c.kappa);
  for (std::size_t k = 0; k < c.edges.size(); ++k)
    a.row(static_cast<Eigen::Index>(k)) =
        hyperplane_normal(c.edges[k], ms_, c.kappa).transpose();
  if (rank(a) == c.kappa - 1) return tree_count(c);
  return pinned_search(c);
}

BigInt AlphaEvaluator::tree_count(const Component& c) const {
  const std::size_t N = pts_.size();
  if (N == 0) return 0;
  if (c.kappa * std::log2(static_cast<double>(N)) > 120)
    throw CapacityError("tree count exceeds 128-bit range", n_);
  // BFS spanning tree rooted at node 0.
  std::vector<int> parent(c.kappa, -1), slope(c.kappa, -1), order{0};
  std::vector<bool> seen(c.kappa, false);
  seen[0] = true;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int v = order[k];
    for (const auto& e : c.edges) {
      int w = -1;
      if (e.i == v) w = e.j;
      if (e.j == v) w = e.i;
      if (w < 0 || seen[w]) continue;
      seen[w] = true;
      parent[w] = v;
      slope[w] = e.r;
      order.push_back(w);
    }
  }
  std::vector<std::vector<i128>> f(c.kappa, std::vector<i128>(N, 1));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    if (parent[v] < 0) continue;
    const int r = slope[v];
    std::vector<i128> line_sum(members_[r].size(), 0);
    for (std::size_t p = 0; p < N; ++p) line_sum[line_of_[r][p]] += f[v][p];
    auto& up = f[parent[v]];
    for (std::size_t p = 0; p < N; ++p) up[p] *= line_sum[line_of_[r][p]];
  }
  i128 total = 0;
  for (std::size_t p = 0; p < N; ++p) total += f[0][p];
  return to_bigint(total);
}

BigInt AlphaEvaluator::pinned_search(const Component& c) const {
  const int kappa = c.kappa;
  struct Step {
    int node;
    std::vector<std::pair<int, int>> cons;  // (earlier node, slope)
    int mode = 0;                           // 0 free, 1 line, 2 pinned
  };
  // Greedy order: next node has the most distinct slopes to placed nodes.
  std::vector<Step> steps;
  std::vector<bool> placed(kappa, false);
  {
    std::vector<int> degree(kappa, 0);
    for (const auto& e : c.edges) ++degree[e.i], ++degree[e.j];
    const int start = static_cast<int>(
        std::max_element(degree.begin(), degree.end()) - degree.begin());
    steps.push_back({start, {}, 0});
    placed[start] = true;
  }
  while (static_cast<int>(steps.size()) < kappa) {
    int best = -1, best_slopes = -1, best_edges = -1;
    for (int v = 0; v < kappa; ++v) {
      if (placed[v]) continue;
      std::vector<int> rs;
      int cnt = 0;
      for (const auto& e : c.edges) {
        const int other = e.i == v ? e.j : (e.j == v ? e.i : -1);
        if (other < 0 || !placed[other]) continue;
        rs.push_back(e.r);
        ++cnt;
      }
      std::sort(rs.begin(), rs.end());
      const int distinct =
          static_cast<int>(std::unique(rs.begin(), rs.end()) - rs.begin());
      if (distinct > best_slopes || (distinct == best_slopes && cnt > best_edges)) {
        best = v;
        best_slopes = distinct;
        best_edges = cnt;
      }
    }
    Step st{best, {}, 0};
    for (const auto& e : c.edges) {
      const int other = e.i == best ? e.j : (e.j == best ? e.i : -1);
      if (other >= 0 && placed[other]) st.cons.push_back({other, e.r});
    }
    st.mode = best_slopes == 0 ? 0 : (best_slopes == 1 ? 1 : 2);
    if (st.mode == 2) {
      // put two different slopes first
      for (std::size_t k = 1; k < st.cons.size(); ++k)
        if (st.cons[k].second != st.cons[0].second) {
          std::swap(st.cons[1], st.cons[k]);
          break;
        }
    }
    steps.push_back(std::move(st));
    placed[best] = true;
  }

  std::vector<std::int32_t> pos(kappa, -1);
  i128 total = 0;
  auto consistent = [&](const Step& st, std::int32_t p) {
    for (const auto& [a, r] : st.cons)
      if (line_of_[r][p] != line_of_[r][pos[a]]) return false;
    return true;
  };
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == steps.size()) {
      ++total;
      return;
    }
    const Step& st = steps[k];
    const bool last = k + 1 == steps.size();
    if (st.mode == 0) {
      if (last) {
        total += static_cast<i128>(pts_.size());
        return;
      }
      for (std::size_t p = 0; p < pts_.size(); ++p) {
        pos[st.node] = static_cast<std::int32_t>(p);
        self(self, k + 1);
      }
    } else if (st.mode == 1) {
      const auto [a, r] = st.cons[0];
      const auto line = line_of_[r][pos[a]];
      for (const auto& [b, s] : st.cons)
        if (line_of_[s][pos[b]] != line) return;
      const auto& mem = members_[r][line];
      if (last) {
        total += static_cast<i128>(mem.size());
        return;
      }
      for (const auto p : mem) {
        pos[st.node] = p;
        self(self, k + 1);
      }
    } else {
      const auto [a1, r1] = st.cons[0];
      const auto [a2, r2] = st.cons[1];
      const Move& m1 = ms_[r1];
      const Move& m2 = ms_[r2];
      const i128 k1 = m1.key(pts_[pos[a1]]);
      const i128 k2 = m2.key(pts_[pos[a2]]);
      const i128 det = m1.c * m2.d - m1.d * m2.c;
      const i128 xn = m1.c * k2 - m2.c * k1;
      const i128 yn = m1.d * k2 - m2.d * k1;
      if (xn % det != 0 || yn % det != 0) return;
      const auto p = point_index(static_cast<std::int64_t>(xn / det),
                                 static_cast<std::int64_t>(yn / det));
      if (p < 0 || !consistent(st, p)) return;
      pos[st.node] = p;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return to_bigint(total);
}

BigInt AlphaEvaluator::by_enumeration(const std::vector<SlopeEdge>& edges) const {
  std::vector<int> nodes;
  for (const auto& e : edges) {
    nodes.push_back(e.i);
    nodes.push_back(e.j);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  const int kappa = static_cast<int>(nodes.size());
  if (kappa == 0) return 1;
  auto local = [&](int label) {
    return static_cast<int>(std::lower_bound(nodes.begin(), nodes.end(), label) -
                            nodes.begin());
  };
  // checks[k]: edges whose later endpoint is k
  std::vector<std::vector<std::tuple<int, int>>> checks(kappa);
  for (const auto& e : edges) {
    const int a = local(e.i), b = local(e.j);
    checks[std::max(a, b)].push_back({std::min(a, b), e.r});
  }
  std::vector<Point> z(kappa);
  BigInt total = 0;
  std::int64_t run = 0;
  auto rec = [&](auto&& self, int k) -> void {
    if (k == kappa) {
      ++run;
      return;
    }
    for (const auto& p : pts_) {
      bool ok = true;
      for (const auto& [a, r] : checks[k])
        if (ms_[r].key(p) != ms_[r].key(z[a])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      z[k] = p;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  total = run;
  return total;
}

BigInt alpha(const Flat& flat, const MoveSet& ms, const BoardPolygon& board,
             std::int64_t n) {
  AlphaEvaluator eval(ms, board, n);
  return eval(flat.edges);
}

BigInt reconstruct_count(const Semilattice& sl, AlphaEvaluator& eval) {
  const BigInt N = eval.lattice_points();
  std::vector<std::optional<BigInt>> class_alpha(sl.iso_classes().size());
  BigInt total = 0;
  for (const auto& t : sl.reconstruction_terms()) {
    if (t.coefficient == 0) continue;
    BigInt a = 1;
    for (const int cls : t.component_classes) {
      if (!class_alpha[cls]) {
        const auto& rep = sl.flat(sl.iso_classes()[cls].members.front());
        class_alpha[cls] = eval(rep.edges);
      }
      a *= *class_alpha[cls];
    }
    total += BigInt(t.coefficient) * a *
             ipow(N, static_cast<unsigned>(sl.q() - t.kappa));
  }
  return total;
}

BigInt reconstruct_count(const Semilattice& sl, const BoardPolygon& board,
                         std::int64_t n) {
  AlphaEvaluator eval(sl.moves(), board, n);
  return reconstruct_count(sl, eval);
}

}  // namespace riders
