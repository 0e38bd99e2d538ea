#include <gtest/gtest.h>

#include <json.hpp>

#include <map>
#include <sstream>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, std::map<std::string, std::string> env = {}) {
  std::ostringstream out, err;
  const int code = gonlab::cli::run(args, out, err, [&](const std::string& k) -> std::optional<std::string> {
    const auto it = env.find(k);
    if (it == env.end()) return std::nullopt;
    return it->second;
  });
  return {code, out.str(), err.str()};
}

const std::string kData = GONLAB_TEST_DATA;

}  // namespace

TEST(Cli, CheegerPappusJson) {
  const auto r = run({"cheeger", "pappus", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  const std::vector<std::string> expected{"3", "2", "5/3", "3/2", "7/5", "1", "1", "1", "7/9"};
  ASSERT_EQ(j["rows"].size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(j["rows"][i]["h_u"], expected[i]);
  EXPECT_TRUE(j["exact"].get<bool>());
}

TEST(Cli, BoundsCycleSix) {
  const auto r = run({"bounds", "cycle:6", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["rows"][2]["h_u"], "2/3");
  EXPECT_EQ(j["upper"]["genus"]["loose"], true);
  const auto tsv = run({"bounds", "cycle:6", "--tsv"});
  EXPECT_EQ(tsv.out.substr(0, tsv.out.find('\n')), "u\tB_u\th_u\th_u_n\trow_min\tseparator_floor\tfloor_min");
}

TEST(Cli, JsonRoundTripsByteForByte) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"bounds", "pappus", "--json"},
           {"spectral", "k4", "--json"},
           {"random", "--k", "3", "--n", "10", "--samples", "3", "--json"},
           {"rank", "cycle:5", "0:1,2:1", "--json"}}) {
    const auto r = run(args);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out).dump(2) + "\n", r.out);
  }
}

TEST(Cli, HumanAndJsonCarrySameNumbers) {
  const auto j = json::parse(run({"spectral", "pappus", "--json"}).out);
  const auto human = run({"spectral", "pappus"}).out;
  for (const char* key : {"lambda2", "lambda2_error"}) {
    EXPECT_NE(human.find(j[key].dump()), std::string::npos) << key;
  }
  EXPECT_NE(human.find(j["bound"]["value"].dump()), std::string::npos);
  const auto bj = json::parse(run({"bounds", "pappus", "--json"}).out);
  const auto bh = run({"bounds", "pappus"}).out;
  for (const auto& row : bj["rows"]) {
    EXPECT_NE(bh.find(row["h_u_n"].get<std::string>()), std::string::npos);
  }
  EXPECT_NE(bh.find(bj["spectral_bound"]["value"].dump()), std::string::npos);
}

TEST(Cli, PappusDemo) {
  const auto r = run({"pappus-demo", "--json", "--threads", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["regular_cheeger_bound"]["value"], "9/2");
  EXPECT_EQ(j["regular_cheeger_bound"]["u"], "6/18");
  EXPECT_EQ(j["gonality"]["value"], 6);
  EXPECT_EQ(j["gonality"]["cleared_degree"], 5);
  EXPECT_EQ(j["middle_ring_divisor"]["positive_rank"], true);
  EXPECT_NEAR(j["spectral"]["bound"].get<double>(), 5.04, 0.01);
  EXPECT_EQ(j["bracket"], json::array({6, 9}));
}

TEST(Cli, ReduceAndRank) {
  auto r = run({"reduce", "complete:2", "1:1", "--at", "0", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["reduced"], "0:1");
  r = run({"rank", "complete:3", "0:2", "--at-least", "2", "--json"});
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["holds"], false);
  EXPECT_FALSE(j["failing_subtrahend"].is_null());
  r = run({"rank", "path:4", "3:1", "--json"});
  EXPECT_EQ(json::parse(r.out)["holds"], true);
  r = run({"rank", "cycle:5", "0:1", "--json"});
  j = json::parse(r.out);
  EXPECT_EQ(j["holds"], false);
  EXPECT_FALSE(j["failing_vertex"].is_null());
}

TEST(Cli, GonalityAndBu) {
  auto r = run({"gonality", "cycle:5", "--json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["gonality"], 2);
  r = run({"bu", "path:5", "--u", "2/5", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["B_u"], 1);
  EXPECT_EQ(run({"bu", "pappus", "--u", "2/3"}).code, 1);
}

TEST(Cli, ExitCodes) {
  auto r = run({"bounds", kData + "/malformed.txt"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line 4"), std::string::npos) << r.err;
  EXPECT_EQ(run({"bounds", "/no/such/file"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"bounds"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
  r = run({"gonality", "pappus", "--budget", "100"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("budget_exhausted"), std::string::npos);
  EXPECT_EQ(run({"bounds", "path:3", "--threads", "0"}).code, 1);
}

TEST(Cli, FileInput) {
  const auto r = run({"gonality", kData + "/path3.txt", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["gonality"], 1);
}

TEST(Cli, Environment) {
  EXPECT_EQ(run({"gonality", "pappus"}, {{"GONLAB_BUDGET_STEPS", "100"}}).code, 2);
  EXPECT_EQ(run({"gonality", "cycle:4"}, {{"GONLAB_THREADS", "zero"}}).code, 1);
  EXPECT_EQ(run({"gonality", "cycle:4"}, {{"GONLAB_THREADS", "3"}}).code, 0);
}

TEST(Cli, RandomDeterministic) {
  const std::vector<std::string> base{"random", "--k", "3", "--n", "100", "--samples", "10", "--seed", "42"};
  auto with_threads = [&](const char* t) {
    auto a = base;
    a.insert(a.end(), {"--threads", t});
    return run(a).out;
  };
  const auto one = with_threads("1");
  EXPECT_EQ(one, with_threads("4"));
  EXPECT_EQ(one, with_threads("1"));
}
