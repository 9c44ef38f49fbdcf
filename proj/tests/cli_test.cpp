#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "factorlen/cli.hpp"

using nlohmann::json;

namespace {
  struct Outcome {
    int         code;
    std::string out;
    std::string err;
  };

  Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "factorlen");
    std::vector<char const*> argv;
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int const code = factorlen::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
  }

  json result_of(std::vector<std::string> args) {
    auto const o = run(std::move(args));
    EXPECT_EQ(o.code, 0) << o.err;
    return json::parse(o.out);
  }

  std::string corpus(std::string const& name) {
    return std::string(FACTORLEN_CORPUS_DIR) + "/" + name + ".mon";
  }
}  // namespace

TEST(Cli, GoldenBnLengthSet) {
  auto const o = run({"bn", "length-set", "--n", "3", "--k", "0", "--m", "4"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out,
            R"({"command":"bn length-set","inputs":{"k":0,"m":4,"n":3},)"
            R"("result":{"lengths":[3,4],"q":1},"version":"0.1.0"})"
            "\n");
}

TEST(Cli, BnExamples) {
  EXPECT_EQ(result_of({"bn", "union", "--n", "3", "--l", "4"})["result"]["union"],
            json({3, 4, 5, 6, 7}));
  EXPECT_EQ(result_of({"bn", "union", "--n", "3", "--l", "1"})["result"]["union"],
            json({1}));
  auto const m = result_of({"bn", "membership", "--n", "3", "--set", "2,3,4"});
  EXPECT_EQ(m["result"]["member"], false);
  auto const r = result_of({"bn", "membership", "--n", "3", "--set", "3..4"});
  EXPECT_EQ(r["result"]["witness"], json({{"k", 1}, {"m", 3}}));
  EXPECT_EQ(result_of({"bn", "phi", "--n", "4", "--set", "5,7,9"})["result"]["h"],
            json({{"k", 5}, {"i", 2}}));
  EXPECT_EQ(result_of({"bn", "rho-k", "--n", "4", "--k", "5"})["result"]["rho_k"], 13);
  auto const e = result_of({"bn", "elasticity", "--n", "3"});
  EXPECT_EQ(e["result"]["rho"], "2");
  EXPECT_EQ(e["result"]["accepted"], false);
  EXPECT_EQ(result_of({"bn", "catenary", "--n", "7"})["result"]["catenary_degree"], 6);
}

TEST(Cli, FpExamples) {
  auto const l = result_of({"fp", "lengths", "--presentation", corpus("b3"), "--word", "bbbb"});
  EXPECT_EQ(l["result"]["lengths"], json({3, 4}));
  EXPECT_EQ(l["complete"], true);
  auto const a = result_of(
      {"fp", "lengths", "--presentation", corpus("adyan"), "--word", "aa", "--max-len", "12"});
  EXPECT_EQ(a["result"]["lengths"], json({2, 4, 6, 8, 10, 12}));
  EXPECT_EQ(a["complete"], false);
  EXPECT_EQ(result_of({"fp", "relation-bound", "--presentation", corpus("b5")})["result"]
                     ["relation_bound"],
            4);
  auto const f = result_of({"fp", "factorize", "--presentation", corpus("b3"), "--word", "bbbb"});
  EXPECT_EQ(f["result"]["words"], json({"bab", "bba", "bbbb"}));
  auto const c = result_of({"fp", "catenary", "--presentation", corpus("b3"), "--word", "bbbb"});
  EXPECT_EQ(c["result"]["catenary"], 2);
  auto const d = result_of({"fp", "delta-probe", "--presentation", corpus("b3")});
  EXPECT_EQ(d["result"]["delta"], json({1}));
}

TEST(Cli, ZsExamples) {
  EXPECT_EQ(result_of({"zs", "atoms", "--group", "3", "--max-len", "3"})["result"]["count"], 4);
  EXPECT_EQ(result_of({"zs", "lengths", "--group", "3", "--seq", "1^3,2^3"})["result"]["lengths"],
            json({2, 3}));
  auto const e = result_of({"zs", "elasticity", "--group", "2", "--max-len", "8"});
  EXPECT_EQ(e["result"]["rho"], "1");
  EXPECT_EQ(e["result"]["attained"], true);
  auto const c = result_of({"zs", "elasticity", "--group", "3"});
  EXPECT_EQ(c["result"]["rho"], "3/2");
  EXPECT_EQ(c["result"]["witness"], "1^3,2^3");
}

TEST(Cli, VerifySuitesPass) {
  auto const o = run({"verify", "bn-oracle", "--n-max", "4", "--size-max", "10"});
  EXPECT_EQ(o.code, 0) << o.out;
  auto const doc = json::parse(o.out);
  EXPECT_EQ(doc["result"]["passed"], true);
  auto const c = result_of({"verify", "catenary", "--n-max", "5"});
  for (auto const& check : c["result"]["checks"]) {
    if (check["name"] == "catenary-degree") {
      for (int n = 2; n <= 5; ++n) {
        EXPECT_EQ(check["metrics"]["per_n"][std::to_string(n)]["max_catenary"], n - 1);
      }
    }
  }
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"bn", "union", "--n", "1", "--l", "3"}).code, 2);
  EXPECT_EQ(run({"bn", "union", "--n", "3", "--l", "0"}).code, 2);
  EXPECT_EQ(run({"bn", "length-set", "--n", "3", "--k", "x", "--m", "1"}).code, 2);
  EXPECT_EQ(run({"bn", "membership", "--n", "3", "--set", "4..2"}).code, 2);
  EXPECT_EQ(run({"bn", "frobnicate", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"fp", "lengths", "--presentation", "/nonexistent.mon", "--word", "a"}).code, 2);
  EXPECT_EQ(run({"fp", "lengths", "--presentation", corpus("b3"), "--word", "abc"}).code, 2);
  EXPECT_EQ(run({"zs", "atoms", "--group", "3x"}).code, 2);
  EXPECT_EQ(run({"zs", "lengths", "--group", "3", "--seq", "1^2"}).code, 2);
  EXPECT_EQ(run({"verify", "nothing"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, DeterministicAndRoundTrips) {
  std::vector<std::vector<std::string>> const cases{
      {"fp", "factorize", "--presentation", corpus("b0"), "--word", "b", "--max-len", "9"},
      {"zs", "atoms", "--group", "2x2"},
      {"verify", "zerosum"},
  };
  for (auto const& args : cases) {
    auto const a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(json::parse(a.out).dump() + "\n", a.out);
  }
}

TEST(Cli, PrettyTable) {
  auto const o = run({"--pretty", "bn", "elasticity", "--n", "5"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("rho"), std::string::npos);
  EXPECT_EQ(o.out.find('{'), std::string::npos);
}
