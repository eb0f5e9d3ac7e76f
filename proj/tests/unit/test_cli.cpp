#include "riders/cli.hpp"

#include <json.hpp>

#include <doctest.h>

#include <sstream>
#include <vector>

using namespace riders;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "riders");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("config text round trip") {
  RunConfig c;
  c.command = "types";
  c.piece = "custom";
  c.moves = "2,1;0,1";
  c.board = "poly:-1,0,0;0,-1,0;2,1,1";
  c.q = 3;
  c.n_from = 2;
  c.n_to = 9;
  c.census_from = 3;
  c.census_to = 4;
  c.period = 6;
  c.labelled = true;
  c.budget = 12345.5;
  c.only = {1, 5};
  CHECK(RunConfig::from_text(c.to_text()) == c);
  CHECK(RunConfig::from_text(RunConfig{}.to_text()) == RunConfig{});
  CHECK_THROWS(RunConfig::from_text("bogus=1\n"));
}

TEST_CASE("dump-config reflects flags") {
  const auto r = call({"--dump-config", "fit", "--piece", "rook", "--q", "3", "--n", "2:7",
                       "--period", "2"});
  CHECK(r.code == kOk);
  const auto c = RunConfig::from_text(r.out);
  CHECK(c.command == "fit");
  CHECK(c.piece == "rook");
  CHECK(c.q == 3);
  CHECK(c.n_from == 2);
  CHECK(c.n_to == 7);
  CHECK(c.period == 2);
}

TEST_CASE("count output") {
  const auto r = call({"count", "--piece", "queen", "--q", "2", "--n", "1:6", "--format",
                       "csv"});
  CHECK(r.code == kOk);
  CHECK(r.out.find("6,680,340,") != std::string::npos);
  const auto j = call({"count", "--piece", "queen", "--q", "2", "--n", "1:4"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["rows"].size() == 4);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args = {"fit", "--piece", "bishop", "--q", "2", "--n",
                                         "1:12"};
  const auto a = call(args);
  const auto b = call(args);
  CHECK(a.code == kOk);
  CHECK(a.out == b.out);
  const auto m1 = call({"mobius", "--piece", "semiqueen", "--q", "3"});
  const auto m2 = call({"mobius", "--piece", "semiqueen", "--q", "3"});
  CHECK(m1.out == m2.out);
}

TEST_CASE("exit codes and json errors") {
  CHECK(call({}).code == kUsage);
  CHECK(call({"count", "--piece", "dragon"}).code == kUsage);
  CHECK(call({"count", "--moves", "2,2"}).code == kUsage);
  CHECK(call({"count", "--n", "5:1"}).code == kUsage);
  CHECK(call({"frobnicate"}).code == kUsage);

  const auto cap = call({"--json-errors", "count", "--q", "3", "--n", "1:30", "--budget",
                         "1000"});
  CHECK(cap.code == kCapacity);
  const auto e = nlohmann::json::parse(cap.out);
  CHECK(e["error"]["exit_code"] == kCapacity);
  CHECK(e["error"]["kind"] == "capacity");
  CHECK(e["error"]["n"].is_number_integer());

  const auto fit = call({"--json-errors", "fit", "--piece", "nightrider", "--q", "2", "--n",
                         "1:14", "--period", "1"});
  CHECK(fit.code == kFailure);
  CHECK(nlohmann::json::parse(fit.out)["error"]["kind"] == "fit");
}
