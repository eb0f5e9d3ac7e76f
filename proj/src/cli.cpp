#include "riders/cli.hpp"

#include "riders/arrangement.hpp"
#include "riders/bounds.hpp"
#include "riders/enumerator.hpp"
#include "riders/quasipoly.hpp"
#include "riders/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace riders {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
  double v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw InvalidArgument("not a number: '" + s + "'");
  return v;
}

std::int64_t parse_i64(const std::string& s) {
  std::int64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw InvalidArgument("not an integer: '" + s + "'");
  return v;
}

bool parse_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw InvalidArgument("not a boolean: '" + s + "'");
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) {
    const auto v = parse_i64(s);
    return {v, v};
  }
  const auto a = parse_i64(s.substr(0, colon));
  const auto b = parse_i64(s.substr(colon + 1));
  if (a > b) throw InvalidArgument("empty range '" + s + "'");
  return {a, b};
}

MoveSet config_moves(const RunConfig& cfg) {
  if (cfg.moves) return parse_moves(*cfg.moves, cfg.piece);
  return preset_piece(cfg.piece);
}

EnumerationOptions enum_opts(const RunConfig& cfg) {
  return {cfg.budget, cfg.threads};
}

BoundsOptions bounds_opts(const RunConfig& cfg) {
  return {cfg.denominator_budget, cfg.lcmd_budget};
}

void check_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  throw InvalidArgument("format '" + cfg.format + "' is not available for " + cfg.command);
}

CountTable make_table(const RunConfig& cfg) {
  const auto ms = config_moves(cfg);
  const auto board = parse_board(cfg.board);
  if (cfg.q < 0) throw InvalidArgument("q must be nonnegative");
  if (cfg.n_from < 0) throw InvalidArgument("n must be nonnegative");
  if (cfg.method == "brute") {
    auto t = count_series(ms, board, cfg.q, cfg.n_from, cfg.n_to, enum_opts(cfg));
    t.piece = ms.name();
    return t;
  }
  if (cfg.method != "reconstruction")
    throw InvalidArgument("method must be brute or reconstruction");
  if (cfg.q < 2) throw InvalidArgument("reconstruction needs q >= 2");
  if (cfg.n_from < 1) throw InvalidArgument("reconstruction needs n >= 1");
  const auto sl = intersection_semilattice(build_move_arrangement(ms, cfg.q), ms, cfg.q);
  CountTable t;
  t.piece = ms.name();
  t.board = board;
  t.q = cfg.q;
  t.method = CountMethod::reconstruction;
  for (auto n = cfg.n_from; n <= cfg.n_to; ++n)
    t.add_labelled(n, reconstruct_count(sl, board, n));
  return t;
}

std::string pretty_table(const CountTable& t) {
  std::ostringstream out;
  out << t.piece << " on " << t.board.to_text() << ", q = " << t.q << " ("
      << to_string(t.method) << ")\n";
  out << std::setw(6) << "n" << std::setw(24) << "labelled" << std::setw(24)
      << "unlabelled" << '\n';
  for (const auto& [n, row] : t.rows)
    out << std::setw(6) << n << std::setw(24) << row.labelled << std::setw(24)
        << row.unlabelled << '\n';
  return out.str();
}

int cmd_count(const RunConfig& cfg, std::ostream& out) {
  check_format(cfg, {"json", "csv", "pretty"});
  const auto t = make_table(cfg);
  if (cfg.format == "csv") out << t.to_csv();
  else if (cfg.format == "pretty") out << pretty_table(t);
  else out << t.to_json() << '\n';
  return kOk;
}

std::string verified_label(const Quasipolynomial& qp) {
  return "empirically verified on n in [" + std::to_string(qp.verified_range->first) +
         ", " + std::to_string(qp.verified_range->second) + "]";
}

int cmd_fit(const RunConfig& cfg, std::ostream& out) {
  check_format(cfg, {"json", "pretty"});
  const auto t = make_table(cfg);
  const int p = cfg.period ? *cfg.period
                           : detect_period(t, cfg.p_max, std::nullopt, cfg.labelled);
  const auto qp = fit(t, p, 2 * t.q, cfg.labelled);
  if (cfg.format == "pretty") {
    out << (cfg.labelled ? "o" : "u") << "(" << t.q << "; n) = " << qp.pretty() << '\n'
        << "period " << p << ", " << verified_label(qp) << '\n';
    return kOk;
  }
  json j = json::parse(qp.to_json());
  j["piece"] = t.piece;
  j["board"] = t.board.to_text();
  j["q"] = t.q;
  j["labelled"] = cfg.labelled;
  j["period_detected"] = !cfg.period.has_value();
  j["status"] = verified_label(qp);
  out << j.dump(2) << '\n';
  return kOk;
}

int cmd_types(const RunConfig& cfg, std::ostream& out) {
  check_format(cfg, {"json", "pretty"});
  const auto ms = config_moves(cfg);
  const auto board = parse_board(cfg.board);
  if (cfg.q < 1) throw InvalidArgument("types needs q >= 1");
  const auto t = make_table(cfg);
  const int p = cfg.period ? *cfg.period : detect_period(t, cfg.p_max);
  const auto u = fit(t, p, 2 * t.q, false);
  const auto o = fit(t, p, 2 * t.q, true);
  const BigInt tu = types_count(u);
  const BigInt to = types_count(o);
  const bool consistent = factorial(t.q) * tu == to;

  json census = json::array();
  const auto c0 = cfg.census_from.value_or(cfg.n_from);
  const auto c1 = cfg.census_to.value_or(cfg.n_to);
  for (auto n = c0; n <= c1; ++n) {
    const auto c = census_types(ms, board, cfg.q, n, enum_opts(cfg));
    census.push_back({{"n", n},
                      {"labelled_types", to_string(c.labelled_types)},
                      {"unlabelled_types", to_string(c.unlabelled_types)}});
  }
  if (cfg.format == "pretty") {
    out << "types at n = -1: " << tu << " unlabelled, " << to << " labelled (period " << p
        << (consistent ? ")" : ", INCONSISTENT)") << '\n';
    for (const auto& row : census)
      out << "census n = " << row["n"] << ": " << row["unlabelled_types"].get<std::string>()
          << " unlabelled, " << row["labelled_types"].get<std::string>() << " labelled\n";
    return kOk;
  }
  json j = {{"piece", ms.name()},
            {"board", board.to_text()},
            {"q", cfg.q},
            {"period", p},
            {"types_count", {{"unlabelled", to_string(tu)}, {"labelled", to_string(to)}}},
            {"consistent", consistent},
            {"census", census},
            {"status", verified_label(u)}};
  out << j.dump(2) << '\n';
  return consistent ? kOk : kFailure;
}

int cmd_mobius(const RunConfig& cfg, std::ostream& out) {
  check_format(cfg, {"json"});
  const auto ms = config_moves(cfg);
  const auto sl = intersection_semilattice(build_move_arrangement(ms, cfg.q), ms, cfg.q);
  out << sl.to_json() << '\n';
  return kOk;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
  check_format(cfg, {"json"});
  const auto ms = config_moves(cfg);
  const auto board = parse_board(cfg.board);
  auto rep = bounds_report(ms, board, cfg.q, bounds_opts(cfg));
  if (cfg.observe_period) {
    const auto t = make_table(cfg);
    rep.period_observed = detect_period(t, cfg.p_max, rep.denominator);
    if (rep.denominator && *rep.denominator % *rep.period_observed != 0)
      rep.notes.push_back("observed period does not divide the denominator");
  }
  out << rep.to_json() << '\n';
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  check_format(cfg, {"json", "pretty"});
  if (cfg.suite != "reference") throw InvalidArgument("unknown suite '" + cfg.suite + "'");
  VerifyOptions opts;
  opts.stretch = cfg.stretch;
  opts.only.insert(cfg.only.begin(), cfg.only.end());
  opts.enumeration = enum_opts(cfg);
  opts.bounds = bounds_opts(cfg);
  if (cfg.format == "pretty")
    opts.on_result = [&](const CriterionResult& r) { out << format_line(r) << std::endl; };
  const auto results = run_acceptance_suite(opts);
  if (cfg.format == "json") out << suite_json(results) << '\n';
  for (const auto& r : results)
    if (!r.pass) return kFailure;
  return kOk;
}

json error_json(const std::string& kind, const std::string& message, int code,
                std::optional<std::int64_t> n = {}) {
  json e = {{"kind", kind}, {"message", message}, {"exit_code", code}};
  e["n"] = n ? json(*n) : json(nullptr);
  return {{"error", e}};
}

}  // namespace

std::string RunConfig::to_text() const {
  std::ostringstream out;
  std::string only_text;
  for (std::size_t k = 0; k < only.size(); ++k)
    only_text += (k ? "," : "") + std::to_string(only[k]);
  out << "command=" << command << '\n'
      << "piece=" << piece << '\n'
      << "moves=" << moves.value_or("") << '\n'
      << "board=" << board << '\n'
      << "q=" << q << '\n'
      << "n=" << n_from << ':' << n_to << '\n'
      << "census_n="
      << (census_from ? std::to_string(*census_from) + ":" + std::to_string(*census_to) : "")
      << '\n'
      << "period=" << (period ? std::to_string(*period) : "") << '\n'
      << "p_max=" << p_max << '\n'
      << "method=" << method << '\n'
      << "format=" << format << '\n'
      << "labelled=" << (labelled ? "true" : "false") << '\n'
      << "observe_period=" << (observe_period ? "true" : "false") << '\n'
      << "budget=" << fmt_double(budget) << '\n'
      << "denominator_budget=" << fmt_double(denominator_budget) << '\n'
      << "lcmd_budget=" << fmt_double(lcmd_budget) << '\n'
      << "threads=" << threads << '\n'
      << "suite=" << suite << '\n'
      << "stretch=" << (stretch ? "true" : "false") << '\n'
      << "only=" << only_text << '\n';
  return out.str();
}

RunConfig RunConfig::from_text(const std::string& text) {
  RunConfig c;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InvalidArgument("config line without '=': " + line);
    const std::string key = line.substr(0, eq);
    const std::string val = line.substr(eq + 1);
    if (key == "command") c.command = val;
    else if (key == "piece") c.piece = val;
    else if (key == "moves") c.moves = val.empty() ? std::nullopt : std::optional(val);
    else if (key == "board") c.board = val;
    else if (key == "q") c.q = static_cast<int>(parse_i64(val));
    else if (key == "n") std::tie(c.n_from, c.n_to) = parse_range(val);
    else if (key == "census_n") {
      if (val.empty()) {
        c.census_from.reset();
        c.census_to.reset();
      } else {
        const auto [a, b] = parse_range(val);
        c.census_from = a;
        c.census_to = b;
      }
    } else if (key == "period") {
      if (val.empty()) c.period.reset();
      else c.period = static_cast<int>(parse_i64(val));
    } else if (key == "p_max") c.p_max = static_cast<int>(parse_i64(val));
    else if (key == "method") c.method = val;
    else if (key == "format") c.format = val;
    else if (key == "labelled") c.labelled = parse_bool(val);
    else if (key == "observe_period") c.observe_period = parse_bool(val);
    else if (key == "budget") c.budget = parse_double(val);
    else if (key == "denominator_budget") c.denominator_budget = parse_double(val);
    else if (key == "lcmd_budget") c.lcmd_budget = parse_double(val);
    else if (key == "threads") c.threads = static_cast<unsigned>(parse_i64(val));
    else if (key == "suite") c.suite = val;
    else if (key == "stretch") c.stretch = parse_bool(val);
    else if (key == "only") {
      c.only.clear();
      std::istringstream items(val);
      std::string item;
      while (std::getline(items, item, ','))
        if (!item.empty()) c.only.push_back(static_cast<int>(parse_i64(item)));
    } else throw InvalidArgument("unknown config key '" + key + "'");
  }
  return c;
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.command == "count") return cmd_count(cfg, out);
  if (cfg.command == "fit") return cmd_fit(cfg, out);
  if (cfg.command == "types") return cmd_types(cfg, out);
  if (cfg.command == "mobius") return cmd_mobius(cfg, out);
  if (cfg.command == "bounds") return cmd_bounds(cfg, out);
  if (cfg.command == "verify") return cmd_verify(cfg, out);
  throw InvalidArgument("unknown command '" + cfg.command + "'");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counting of nonattacking rider placements on dilated polygons"};
  app.name("riders");
  app.fallthrough();
  bool json_errors = false;
  bool dump_config = false;
  std::string config_file;
  app.add_flag("--json-errors", json_errors, "Report errors as JSON on stdout");
  app.add_flag("--dump-config", dump_config, "Print the parsed configuration and exit");
  app.add_option("--config", config_file, "Run a configuration written by --dump-config");

  RunConfig cfg;
  if (const char* env = std::getenv("RIDERS_BUDGET")) {
    try {
      cfg.budget = parse_double(env);
    } catch (const InvalidArgument&) {
      err << "ignoring malformed RIDERS_BUDGET\n";
    }
  }
  std::string n_range, census_range, moves_text, only_text;
  int period = 0;

  auto common = [&](CLI::App* sub, bool counts) {
    sub->add_option("--piece", cfg.piece, "Preset piece or label for --moves")
        ->capture_default_str();
    sub->add_option("--moves", moves_text, "Custom moves 'c1,d1;c2,d2;...'");
    sub->add_option("--board", cfg.board, "square | rect:a,b | poly:a,b,beta;...")
        ->capture_default_str();
    sub->add_option("--q", cfg.q, "Number of pieces")->capture_default_str();
    sub->add_option("--format", cfg.format, "json | csv | pretty")->capture_default_str();
    if (counts) {
      sub->add_option("--n", n_range, "Board sizes a:b");
      sub->add_option("--method", cfg.method, "brute | reconstruction")
          ->capture_default_str();
      sub->add_option("--budget", cfg.budget, "Enumeration work budget");
      sub->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
    }
  };

  auto* count = app.add_subcommand("count", "Count nonattacking placements");
  common(count, true);
  auto* fitc = app.add_subcommand("fit", "Fit a quasipolynomial to exact counts");
  common(fitc, true);
  fitc->add_option("--period", period, "Fixed period (skips detection)");
  fitc->add_option("--p-max", cfg.p_max, "Largest period tried")->capture_default_str();
  fitc->add_flag("--labelled", cfg.labelled, "Fit the labelled count");
  auto* types = app.add_subcommand("types", "Configuration types: census and n = -1");
  common(types, true);
  types->add_option("--period", period, "Fixed period (skips detection)");
  types->add_option("--p-max", cfg.p_max, "Largest period tried")->capture_default_str();
  types->add_option("--census-n", census_range, "Census sizes a:b (default: --n)");
  auto* mob = app.add_subcommand("mobius", "Intersection semilattice report");
  common(mob, false);
  auto* bnd = app.add_subcommand("bounds", "Denominator and lcmd period bounds");
  common(bnd, true);
  bnd->add_flag("--observe-period", cfg.observe_period,
                "Also detect the period from counts over --n");
  bnd->add_option("--p-max", cfg.p_max, "Largest period tried")->capture_default_str();
  bnd->add_option("--denominator-budget", cfg.denominator_budget, "Systems")
      ->capture_default_str();
  bnd->add_option("--lcmd-budget", cfg.lcmd_budget, "Minors")->capture_default_str();
  auto* ver = app.add_subcommand("verify", "Run the acceptance battery");
  ver->add_option("--suite", cfg.suite, "Suite name (reference)")->capture_default_str();
  ver->add_flag("--stretch", cfg.stretch, "Include the optional long job");
  ver->add_option("--only", only_text, "Comma-separated criterion ids");
  ver->add_option("--format", cfg.format, "json | pretty");
  ver->add_option("--budget", cfg.budget, "Enumeration work budget");
  ver->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");

  auto fail = [&](const std::string& kind, const std::string& msg, int code,
                  std::optional<std::int64_t> n = {}) {
    if (json_errors) out << error_json(kind, msg, code, n).dump(2) << '\n';
    else err << "riders: " << kind << ": " << msg << '\n';
    return code;
  };

  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      out << app.help();
      return kOk;
    } catch (const CLI::CallForAllHelp& e) {
      out << app.help("", CLI::AppFormatMode::All);
      return kOk;
    } catch (const CLI::ParseError& e) {
      return fail("usage", e.what(), kUsage);
    }

    if (!config_file.empty()) {
      if (!app.get_subcommands().empty())
        return fail("usage", "--config cannot be combined with a subcommand", kUsage);
      std::ifstream in(config_file);
      if (!in) return fail("usage", "cannot read " + config_file, kUsage);
      std::stringstream buf;
      buf << in.rdbuf();
      cfg = RunConfig::from_text(buf.str());
    } else {
      if (app.get_subcommands().empty())
        return fail("usage", "a subcommand is required (count, fit, types, mobius, "
                             "bounds, verify)", kUsage);
      auto* sub = app.get_subcommands().front();
      cfg.command = sub->get_name();
      if (cfg.command == "verify" && ver->count("--format") == 0) cfg.format = "pretty";
      if (!moves_text.empty()) {
        cfg.moves = moves_text;
        if (sub->count("--piece") == 0) cfg.piece = "custom";
      }
      if (!n_range.empty()) std::tie(cfg.n_from, cfg.n_to) = parse_range(n_range);
      if (!census_range.empty()) {
        const auto [a, b] = parse_range(census_range);
        cfg.census_from = a;
        cfg.census_to = b;
      }
      if (period > 0) cfg.period = period;
      else if (sub->get_option_no_throw("--period") && sub->count("--period"))
        return fail("usage", "--period must be >= 1", kUsage);
      if (!only_text.empty()) {
        std::istringstream items(only_text);
        std::string item;
        while (std::getline(items, item, ','))
          if (!item.empty()) cfg.only.push_back(static_cast<int>(parse_i64(item)));
      }
    }
    if (dump_config) {
      out << cfg.to_text();
      return kOk;
    }
    return execute(cfg, out, err);
  } catch (const CapacityError& e) {
    return fail("capacity", e.what(), kCapacity,
                e.n() >= 0 ? std::optional<std::int64_t>(e.n()) : std::nullopt);
  } catch (const InvalidArgument& e) {
    return fail("usage", e.what(), kUsage);
  } catch (const FitError& e) {
    return fail("fit", e.what(), kFailure);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), kFailure);
  }
}

}  // namespace riders
