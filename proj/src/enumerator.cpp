#include "riders/enumerator.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace riders {

namespace {

using Word = std::uint64_t;
using Wide = unsigned __int128;

BigInt to_bigint(Wide v) {
  const auto hi = static_cast<std::uint64_t>(v >> 64);
  const auto lo = static_cast<std::uint64_t>(v);
  BigInt out = hi;
  out <<= 64;
  out += lo;
  return out;
}

unsigned resolve_threads(unsigned requested) {
  if (requested) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

void check_capacity(std::size_t n_points, int q, const EnumerationOptions& opts,
                    std::int64_t n) {
  const double envelope =
      std::pow(static_cast<double>(n_points), std::min(q, 3));
  if (envelope > opts.budget) {
    std::ostringstream msg;
    msg << "search envelope N^" << std::min(q, 3) << " = " << envelope
        << " (N = " << n_points << ") exceeds the budget of " << opts.budget
        << " attack tests at n = " << n;
    throw CapacityError(msg.str(), n);
  }
}

/// Precomputed "later and not attacked" bitsets, one row of words per point.
/// Built from per-slope attack keys: two points attack iff they share a key
/// for some slope (coincident points never occur among distinct indices).
class SafeMasks {
 public:
  SafeMasks(const std::vector<Point>& pts, const MoveSet& ms)
      : n_(pts.size()), words_((n_ + 63) / 64), bits_(n_ * words_, 0) {
    std::vector<std::unordered_map<std::int64_t, std::vector<std::uint32_t>>>
        groups(ms.size());
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t r = 0; r < ms.size(); ++r)
        groups[r][ms[r].key(pts[i])].push_back(static_cast<std::uint32_t>(i));
    for (std::size_t i = 0; i < n_; ++i) {
      Word* row = &bits_[i * words_];
      for (std::size_t j = i + 1; j < n_; ++j) row[j / 64] |= Word{1} << (j % 64);
      for (std::size_t r = 0; r < ms.size(); ++r)
        for (std::uint32_t j : groups[r][ms[r].key(pts[i])])
          row[j / 64] &= ~(Word{1} << (j % 64));
    }
  }

  std::size_t size() const { return n_; }
  std::size_t words() const { return words_; }
  const Word* row(std::size_t i) const { return &bits_[i * words_]; }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<Word> bits_;
};

/// Depth-first search over increasing index sequences. `avail` holds the
/// candidates for the next piece; the last piece is counted by popcount.
Wide count_from(const SafeMasks& masks, int remaining, const Word* avail,
                std::size_t first_word, std::vector<Word>& scratch,
                std::size_t depth) {
  const std::size_t words = masks.words();
  if (remaining == 1) {
    Wide total = 0;
    for (std::size_t w = first_word; w < words; ++w) total += std::popcount(avail[w]);
    return total;
  }
  Wide total = 0;
  Word* next = &scratch[depth * words];
  for (std::size_t w = first_word; w < words; ++w) {
    Word bits = avail[w];
    while (bits) {
      const std::size_t j = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      bits &= bits - 1;
      const Word* mj = masks.row(j);
      const std::size_t start = j / 64;
      bool any = false;
      for (std::size_t k = start; k < words; ++k) {
        next[k] = avail[k] & mj[k];
        any |= next[k] != 0;
      }
      if (any) total += count_from(masks, remaining - 1, next, start, scratch, depth + 1);
    }
  }
  return total;
}

/// Visits every nonattacking increasing index sequence of length q.
template <typename Visitor>
void visit_from(const SafeMasks& masks, int remaining, const Word* avail,
                std::size_t first_word, std::vector<Word>& scratch,
                std::vector<std::uint32_t>& chosen, Visitor& visit) {
  const std::size_t words = masks.words();
  const std::size_t depth = chosen.size();
  Word* next = &scratch[depth * words];
  for (std::size_t w = first_word; w < words; ++w) {
    Word bits = avail[w];
    while (bits) {
      const std::size_t j = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      bits &= bits - 1;
      chosen.push_back(static_cast<std::uint32_t>(j));
      if (remaining == 1) {
        visit(chosen);
      } else {
        const Word* mj = masks.row(j);
        for (std::size_t k = j / 64; k < words; ++k) next[k] = avail[k] & mj[k];
        visit_from(masks, remaining - 1, next, j / 64, scratch, chosen, visit);
      }
      chosen.pop_back();
    }
  }
}

}  // namespace

std::string to_string(CountMethod m) {
  return m == CountMethod::brute_force ? "brute_force" : "reconstruction";
}

void CountTable::add_labelled(std::int64_t n, const BigInt& labelled) {
  const BigInt f = factorial(q);
  if (labelled % f != 0)
    throw InvalidArgument("labelled count is not divisible by q!");
  rows[n] = {labelled, labelled / f};
}

std::map<std::int64_t, Rational> CountTable::column(bool labelled) const {
  std::map<std::int64_t, Rational> out;
  for (const auto& [n, row] : rows)
    out[n] = Rational(labelled ? row.labelled : row.unlabelled);
  return out;
}

std::string CountTable::to_csv() const {
  std::ostringstream out;
  out << "n,labelled,unlabelled,method\n";
  for (const auto& [n, row] : rows)
    out << n << ',' << row.labelled << ',' << row.unlabelled << ','
        << to_string(method) << '\n';
  return out.str();
}

std::string CountTable::to_json() const {
  nlohmann::json rows_json = nlohmann::json::array();
  for (const auto& [n, row] : rows)
    rows_json.push_back({{"n", n},
                         {"labelled", to_string(row.labelled)},
                         {"unlabelled", to_string(row.unlabelled)}});
  nlohmann::json j = {{"piece", piece},
                      {"board", board.to_text()},
                      {"q", q},
                      {"method", to_string(method)},
                      {"rows", rows_json}};
  return j.dump(2);
}

PlacementCount count_nonattacking(const MoveSet& ms, const BoardPolygon& board,
                                  int q, std::int64_t n,
                                  const EnumerationOptions& opts) {
  if (q < 0) throw InvalidArgument("q must be nonnegative");
  if (n < 0) throw InvalidArgument("n must be nonnegative");
  if (q == 0) return {1, 1};
  const auto pts = interior_lattice_points(board, n + 1);
  const BigInt qf = factorial(q);
  if (q == 1) {
    const BigInt count = pts.size();
    return {count, count};
  }
  if (static_cast<std::size_t>(q) > pts.size()) return {0, 0};
  check_capacity(pts.size(), q, opts, n);

  const SafeMasks masks(pts, ms);
  const unsigned threads =
      std::min<unsigned>(resolve_threads(opts.threads),
                         static_cast<unsigned>(std::max<std::size_t>(1, masks.size())));
  std::vector<Wide> partial(threads, 0);
  auto worker = [&](unsigned t) {
    std::vector<Word> scratch(static_cast<std::size_t>(q) * masks.words());
    for (std::size_t i = t; i < masks.size(); i += threads)
      partial[t] += count_from(masks, q - 1, masks.row(i), i / 64, scratch, 0);
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }
  Wide total = 0;
  for (Wide p : partial) total += p;
  const BigInt unlabelled = to_bigint(total);
  return {unlabelled * qf, unlabelled};
}

CountTable count_series(const MoveSet& ms, const BoardPolygon& board, int q,
                        std::int64_t n_from, std::int64_t n_to,
                        const EnumerationOptions& opts) {
  if (n_from > n_to) throw InvalidArgument("empty n range");
  CountTable table{ms.name(), board, q, CountMethod::brute_force, {}};
  for (std::int64_t n = n_from; n <= n_to; ++n) {
    try {
      table.rows[n] = count_nonattacking(ms, board, q, n, opts);
    } catch (const CapacityError& e) {
      throw CapacityError(e.what(), n);
    }
  }
  return table;
}

ConfigType ConfigType::relabelled(const std::vector<int>& perm) const {
  ConfigType out(q_, moves_);
  for (int i = 0; i < q_; ++i) {
    for (int r = 0; r < moves_; ++r) {
      std::uint64_t src = left(i, r), dst = 0;
      while (src) {
        const int j = std::countr_zero(src);
        src &= src - 1;
        dst |= std::uint64_t{1} << perm[static_cast<std::size_t>(j)];
      }
      out.set_left(perm[static_cast<std::size_t>(i)], r, dst);
    }
  }
  return out;
}

ConfigType ConfigType::canonical() const {
  std::vector<int> perm(static_cast<std::size_t>(q_));
  std::iota(perm.begin(), perm.end(), 0);
  ConfigType best = *this;
  while (std::next_permutation(perm.begin(), perm.end())) {
    ConfigType candidate = relabelled(perm);
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

ConfigType labelled_type_of(const Configuration& cfg, const MoveSet& ms) {
  const int q = static_cast<int>(cfg.positions.size());
  if (q > 64) throw InvalidArgument("configuration types support q <= 64");
  const int moves = static_cast<int>(ms.size());
  ConfigType type(q, moves);
  for (int i = 0; i < q; ++i) {
    for (int j = i + 1; j < q; ++j) {
      if (attacks(cfg.positions[static_cast<std::size_t>(i)],
                  cfg.positions[static_cast<std::size_t>(j)], ms))
        throw InvalidArgument("configuration has attacking pieces " +
                              std::to_string(i) + " and " + std::to_string(j));
    }
  }
  for (int i = 0; i < q; ++i) {
    const Point zi = cfg.positions[static_cast<std::size_t>(i)];
    for (int r = 0; r < moves; ++r) {
      const Point perp = ms[static_cast<std::size_t>(r)].perp();
      std::uint64_t mask = 0;
      for (int j = 0; j < q; ++j) {
        const Point delta = cfg.positions[static_cast<std::size_t>(j)] - zi;
        if (delta.x * perp.x + delta.y * perp.y > 0) mask |= std::uint64_t{1} << j;
      }
      type.set_left(i, r, mask);
    }
  }
  return type;
}

TypeCensus census_types(const MoveSet& ms, const BoardPolygon& board, int q,
                        std::int64_t n, const EnumerationOptions& opts) {
  if (q < 1) throw InvalidArgument("census requires q >= 1");
  if (q > 10) throw InvalidArgument("census canonicalization supports q <= 10");
  const auto pts = interior_lattice_points(board, n + 1);
  if (static_cast<std::size_t>(q) > pts.size()) return {0, 0};
  check_capacity(pts.size(), q, opts, n);

  std::set<ConfigType> unlabelled;
  std::set<ConfigType> labelled;
  std::vector<int> perm(static_cast<std::size_t>(q));
  Configuration cfg;
  cfg.positions.resize(static_cast<std::size_t>(q));

  auto record = [&](const std::vector<std::uint32_t>& chosen) {
    for (std::size_t k = 0; k < chosen.size(); ++k) cfg.positions[k] = pts[chosen[k]];
    const ConfigType type = labelled_type_of(cfg, ms);
    const ConfigType canon = type.canonical();
    if (!unlabelled.insert(canon).second) return;
    // A new orbit: every relabelling is a distinct labelled type.
    std::iota(perm.begin(), perm.end(), 0);
    do {
      labelled.insert(canon.relabelled(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
  };

  if (q == 1) {
    std::vector<std::uint32_t> chosen{0};
    record(chosen);
  } else {
    const SafeMasks masks(pts, ms);
    std::vector<Word> all(masks.words(), 0);
    for (std::size_t j = 0; j < masks.size(); ++j) all[j / 64] |= Word{1} << (j % 64);
    std::vector<Word> scratch(static_cast<std::size_t>(q) * masks.words());
    std::vector<std::uint32_t> chosen;
    visit_from(masks, q, all.data(), 0, scratch, chosen, record);
  }
  return {BigInt(labelled.size()), BigInt(unlabelled.size())};
}

}  // namespace riders
