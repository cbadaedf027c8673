#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "abelcycles/cache.hpp"
#include "abelcycles/cli.hpp"
#include "abelcycles/report.hpp"
#include "abelcycles/verify.hpp"

using namespace abelcycles;

namespace {

struct Ran {
  int status;
  std::string out, err;
};

Ran invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "abelcycles");
  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  RunConfig cfg;
  std::ostringstream out, err;
  if (auto code = parse_command_line(static_cast<int>(argv.size()), argv.data(), cfg, out, err))
    return {*code, out.str(), err.str()};
  int status = run(cfg, out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path fresh_dir(const std::string &name) {
  auto p = std::filesystem::temp_directory_path() / ("abelcycles_test_" + name);
  std::filesystem::remove_all(p);
  return p;
}

} // namespace

TEST_CASE("count and range parsing") {
  CHECK(parse_count("100000000") == 100000000);
  CHECK(parse_count("10^8") == 100000000);
  CHECK(parse_count("1e8") == 100000000);
  CHECK(parse_count("1.5e3") == 1500);
  CHECK(parse_count(" 7 ") == 7);
  for (const char *bad : {"", "abc", "1e-3", "-5", "1.55e1", "2^100", "1e30"})
    CHECK_THROWS_AS(parse_count(bad), std::invalid_argument);
  CHECK(parse_order_range("3..10") == std::pair<std::int64_t, std::int64_t>{3, 10});
  CHECK(parse_order_range("7") == std::pair<std::int64_t, std::int64_t>{7, 7});
  CHECK_THROWS_AS(parse_order_range("5..3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_order_range("0..3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_order_range("a..3"), std::invalid_argument);
}

TEST_CASE("expect reports exact values") {
  auto r = invoke({"expect", "--group", "4", "--exact"});
  CHECK(r.status == exit_pass);
  CHECK(r.out.find("\"7/3\"") != std::string::npos);
  CHECK(r.out.find("\"8/3\"") != std::string::npos);
  auto j = Json::parse(r.out);
  CHECK(j["results"].size() == 2);

  auto mc = invoke({"expect", "-g", "2x4", "--mc-trials", "10^4", "--seed", "5", "--mode", "sum"});
  CHECK(mc.status == exit_pass);
  auto mj = Json::parse(mc.out);
  CHECK(mj["results"][0]["mc"]["trials"] == 10000);
  CHECK(mj["results"][0]["mc"]["seed"] == 5);

  auto csv = invoke({"expect", "-g", "5", "--format", "csv"});
  CHECK(csv.out.rfind("group,mode,exact", 0) == 0);
  CHECK(csv.out.find("Z5,diff,8/3,") != std::string::npos);
}

TEST_CASE("smin reports values, brackets and exit statuses") {
  auto r = invoke({"smin", "--group", "9", "--budget", "10^8"});
  CHECK(r.status == exit_pass);
  auto j = Json::parse(r.out);
  CHECK(j["results"][0]["value"] == 3);
  CHECK(j["results"][0]["witness_set"].size() == 3);

  auto low = invoke({"smin", "--group", "3x3", "--budget", "1"});
  CHECK(low.status == exit_inconclusive);
  auto lj = Json::parse(low.out);
  CHECK(lj["results"][0]["exact"] == false);
  CHECK(lj["results"][0]["lower"] == 3);
  CHECK(lj["results"][0]["upper"] == 5);
}

TEST_CASE("verify passes on small orders and never turns exhaustion into a verdict") {
  auto r = invoke({"verify", "--orders", "3..6"});
  CHECK(r.status == exit_pass);
  auto j = Json::parse(r.out);
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["summary"]["verdict"] == "pass");

  auto low = invoke({"verify", "--group", "3x3", "--budget", "1", "--format", "text"});
  CHECK(low.status == exit_inconclusive);
  CHECK(low.out.find("inconclusive T4 Z3 x Z3") != std::string::npos);

  VerifyOptions vo;
  vo.budget = 1;
  for (const auto &rec : verify_group(GroupSpec({3, 3}), vo))
    if (rec.id == "T4")
      CHECK(rec.verdict == Verdict::inconclusive);
  CHECK(dmax_exceptional(GroupSpec({2, 4})));
  CHECK(dmax_exceptional(GroupSpec({2, 2, 2})));
  CHECK(dmax_exceptional(GroupSpec({2, 12})));
  CHECK_FALSE(dmax_exceptional(GroupSpec({8})));
  CHECK_FALSE(dmax_exceptional(GroupSpec({2, 2})));
  CHECK_FALSE(dmax_exceptional(GroupSpec({4, 4})));
  CHECK(smax_formula(GroupSpec({2, 2})) == 2);
  CHECK(smax_formula(GroupSpec({6})) == 5);
  CHECK(smax_formula(GroupSpec({2, 4})) == 8);
  CHECK(smax_formula(GroupSpec({9})) == 9);
}

TEST_CASE("usage errors") {
  CHECK(invoke({"construct", "bogus", "-g", "4"}).status == exit_usage);
  CHECK(invoke({"construct", "odd-smin", "-g", "6"}).status == exit_usage);
  CHECK(invoke({"scan"}).status == exit_usage);
  CHECK(invoke({"scan", "-g", "13"}).status == exit_usage);
  CHECK(invoke({"smin", "-g", "6", "--format", "csv"}).status == exit_usage);
  CHECK(invoke({"info", "-g", "2xx3"}).status == exit_usage);
  CHECK(invoke({"info", "-g", "4", "--format", "xml"}).status == exit_usage);
  CHECK(invoke({"info", "-g", "4", "--budget", "lots"}).status == exit_usage);
  CHECK(invoke({}).status == exit_usage);
  auto help = invoke({"--help"});
  CHECK(help.status == exit_pass);
  CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("constructions through the command line") {
  auto r = invoke({"construct", "rs-cycle", "-g", "2x2"});
  CHECK(r.status == exit_pass);
  CHECK(Json::parse(r.out)["results"][0]["status"] == "nonexistent");
  auto p = invoke({"construct", "rs-path", "-g", "12"});
  auto pj = Json::parse(p.out)["results"][0];
  CHECK(pj["rainbow_sums"] == true);
  CHECK(pj["trail"]["kind"] == "open");
  auto e = invoke({"construct", "e8-cycle", "-g", "2x2x2", "--format", "text"});
  CHECK(e.out.find("|S|=6") != std::string::npos);
  auto s = invoke({"construct", "rs-cycle", "-g", "2x4"});
  CHECK(Json::parse(s.out)["results"][0]["method"] == "search");
  CHECK(Json::parse(s.out)["results"][0]["rainbow_sums"] == true);
  auto x = invoke({"construct", "rd-cycle-nonzero", "-g", "4x4", "--budget", "5"});
  CHECK(x.status == exit_inconclusive);
}

TEST_CASE("reports are byte deterministic") {
  auto a = invoke({"scan", "--orders", "3..8", "--threads", "1"});
  auto b = invoke({"scan", "--orders", "3..8", "--threads", "3"});
  CHECK(a.status == exit_pass);
  CHECK(a.out == b.out);
  auto c = invoke({"expect", "-g", "12", "--mc-trials", "5000", "--seed", "11", "--threads", "2"});
  auto d = invoke({"expect", "-g", "12", "--mc-trials", "5000", "--seed", "11"});
  CHECK(c.out == d.out);
  auto v1 = invoke({"verify", "--orders", "3..5", "--format", "csv"});
  auto v2 = invoke({"verify", "--orders", "3..5", "--format", "csv", "--threads", "2"});
  CHECK(v1.out == v2.out);
  CHECK(v1.out.rfind("id,group,predicted,measured,verdict", 0) == 0);
}

TEST_CASE("result cache") {
  auto dir = fresh_dir("cache");
  const std::string d = dir.string();
  auto first = invoke({"scan", "-g", "2x4", "--cache", d});
  CHECK(first.status == exit_pass);
  auto entries = [&] {
    std::size_t n = 0;
    for (const auto &e : std::filesystem::directory_iterator(dir))
      n += e.path().extension() == ".json";
    return n;
  };
  CHECK(entries() == 1);

  RunConfig cfg;
  cfg.command = Command::scan;
  cfg.groups = {GroupSpec({2, 4})};
  cfg.cache = dir;
  ResultCache cache(dir);
  const auto path = cache.entry_path(cache_key(cfg));
  REQUIRE(std::filesystem::exists(path));

  // a planted payload proves the second run is served from the cache
  nlohmann::json planted;
  planted["status"] = 0;
  planted["output"] = "from cache\n";
  cache.put(cache_key(cfg), planted.dump());
  auto second = invoke({"scan", "-g", "2x4", "--cache", d});
  CHECK(second.out == "from cache\n");

  auto other = invoke({"scan", "-g", "2x4", "--cache", d, "--budget", "7"});
  CHECK(other.out == first.out);
  CHECK(entries() == 2);

  // corruption is a miss, and the entry is rewritten
  {
    std::ofstream f(path, std::ios::trunc);
    f << "{\"key\": \"garbage";
  }
  auto third = invoke({"scan", "-g", "2x4", "--cache", d});
  CHECK(third.out == first.out);
  CHECK(cache.get(cache_key(cfg)).has_value());

  // a checksum mismatch is also a miss
  {
    std::ifstream in(path);
    auto j = nlohmann::json::parse(in);
    j["payload"] = "{\"status\":0,\"output\":\"tampered\\n\"}";
    std::ofstream out(path, std::ios::trunc);
    out << j.dump();
  }
  CHECK_FALSE(cache.get(cache_key(cfg)).has_value());
  CHECK(invoke({"scan", "-g", "2x4", "--cache", d}).out == first.out);

  CHECK(sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  std::filesystem::remove_all(dir);
}

TEST_CASE("cache directory from the environment") {
  auto dir = fresh_dir("env");
  ::setenv(cache_env_var, dir.string().c_str(), 1);
  auto r = invoke({"info", "-g", "6"});
  ::unsetenv(cache_env_var);
  CHECK(r.status == exit_pass);
  CHECK(std::filesystem::exists(dir));
  CHECK_FALSE(std::filesystem::is_empty(dir));
  std::filesystem::remove_all(dir);
  auto bad = invoke({"info", "-g", "6", "--cache", "/proc/forbidden/cache"});
  CHECK(bad.status == exit_usage);
}
