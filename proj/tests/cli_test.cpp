#include <unistd.h>

#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "kmin/quotient.hpp"
#include "support/kex.hpp"
#include "support/run.hpp"

#ifndef KMIN_CLI
#error "KMIN_CLI must name the kmin executable"
#endif

namespace kmin {
namespace {

using namespace kmin::testing;
namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("kmin_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  RunResult kmin(const std::string& args, bool keep_stderr = false) {
    return run_command(quote(KMIN_CLI) + " " + args +
                       (keep_stderr ? " 2>&1" : " 2>/dev/null"));
  }
  std::string file(const std::string& name, const std::string& content) {
    fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return quote(p.string());
  }
  std::string path(const std::string& name) { return quote((dir_ / name).string()); }

  fs::path dir_;
  const std::string kex_ = quote(data_path("kex.kts"));
};

TEST_F(Cli, MinimizeMatchesGolden) {
  RunResult r = kmin("minimize " + kex_);
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, read_file(data_path("kex_min.kts")));

  kmin("minimize " + kex_ + " -o " + path("out.kts"));
  EXPECT_EQ(read_file((dir_ / "out.kts").string()), r.out);
}

TEST_F(Cli, MinimizeStatsLine) {
  RunResult r = run_command(quote(KMIN_CLI) + " minimize " + kex_ + " -o " +
                            path("m.kts") + " --stats 2>&1 >/dev/null");
  EXPECT_EQ(r.status, 0);
  auto stats = nlohmann::json::parse(r.out);
  EXPECT_EQ(stats["input_states"], 6);
  EXPECT_EQ(stats["output_states"], 5);
  EXPECT_EQ(stats["splits"], 1);
  EXPECT_TRUE(stats.contains("state_moves"));
  EXPECT_TRUE(stats.contains("splitter_removals"));
  EXPECT_TRUE(stats.contains("loop_iterations"));
}

TEST_F(Cli, MinimizeTrimsUnreachableWithNotice) {
  std::string in = file("u.kts",
                        "kripke\nbits 1\nalphabet a\nstate s 0 init\nstate t 1\n"
                        "trans s a s\ntrans t a s\n");
  RunResult r = kmin("minimize " + in, true);
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("unreachable"), std::string::npos);
  EXPECT_NE(r.out.find("state s0 0 init"), std::string::npos);
}

TEST_F(Cli, Equiv) {
  std::string min = file("min.kts", kmin("minimize " + kex_).out);
  RunResult same = kmin("equiv " + kex_ + " " + min);
  EXPECT_EQ(same.status, 0);
  EXPECT_EQ(same.out, "equivalent\n");

  std::string text = read_file(data_path("kex.kts"));
  text.replace(text.find("state q3 001"), 12, "state q3 101");
  RunResult diff = kmin("equiv " + kex_ + " " + file("flip.kts", text));
  EXPECT_EQ(diff.status, 1);
  EXPECT_EQ(diff.out, "counterexample: a b\nleft: 001\nright: 101\n");
}

TEST_F(Cli, Info) {
  RunResult r = kmin("info " + kex_);
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out,
            "states: 6\nbits: 3\nalphabet: 2\nreachable: 6\nminimal: false\n");
}

TEST_F(Cli, GenIsDeterministicAndMinimizes) {
  const std::string args = "gen --states 40 --bits 2 --alphabet 3 --seed 9 --collide 0.5";
  RunResult a = kmin(args), b = kmin(args);
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  KripkeStructure k = parse_kts(a.out);
  EXPECT_EQ(k.num_states(), 40u);

  std::string in = file("g.kts", a.out);
  RunResult m = kmin("minimize " + in);
  KripkeStructure minimal = parse_kts(m.out);
  EXPECT_TRUE(is_minimal(minimal));
  EXPECT_TRUE(language_equivalent(k, minimal).equivalent);
  EXPECT_EQ(m.out, kmin("minimize " + in).out);
}

TEST_F(Cli, InflateStaysEquivalent) {
  RunResult r = kmin("inflate " + kex_ + " --copies 3 --seed 4");
  EXPECT_EQ(r.status, 0);
  std::string inflated = file("i.kts", r.out);
  EXPECT_GT(parse_kts(r.out).num_states(), 6u);
  EXPECT_EQ(kmin("equiv " + kex_ + " " + inflated).status, 0);
  EXPECT_EQ(kmin("minimize " + inflated).out, kmin("minimize " + kex_).out);
}

TEST_F(Cli, BenchJson) {
  RunResult r = kmin(
      "bench --sizes 200,100 --bits 2 --alphabet 2 --reps 2 --seed 1 --json");
  EXPECT_EQ(r.status, 0);
  auto report = nlohmann::json::parse(r.out);
  ASSERT_EQ(report["points"].size(), 4u);
  auto& p = report["points"][0];
  EXPECT_EQ(p["family"], "random");
  EXPECT_EQ(p["requested_states"], 100);
  EXPECT_EQ(p["samples"].size(), 2u);
  EXPECT_TRUE(p.contains("bound_ratio"));
  EXPECT_TRUE(p.contains("max_state_moves"));
  EXPECT_TRUE(p.contains("mean_splitter_removals"));

  auto empty = nlohmann::json::parse(
      kmin("bench --sizes 100 --reps 0 --json").out);
  EXPECT_TRUE(empty["points"].empty());
}

TEST_F(Cli, Dot) {
  RunResult r = kmin("dot " + kex_);
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("digraph"), std::string::npos);
  EXPECT_NE(r.out.find("\"q1\" -> \"q0\" [label=\"a\"]"), std::string::npos);
}

TEST_F(Cli, UsageAndInputErrors) {
  EXPECT_EQ(kmin("").status, 2);
  EXPECT_EQ(kmin("frobnicate").status, 2);
  EXPECT_EQ(kmin("minimize").status, 2);
  EXPECT_EQ(kmin("minimize " + path("missing.kts")).status, 2);
  EXPECT_EQ(kmin("gen --states 0 --bits 1 --alphabet 1 --seed 1").status, 2);

  RunResult bad = kmin("minimize " + file("bad.kts", "kripke\nbits 1\nalphabet a\n"
                                                    "state s 0 init\ntrans s b s\n"),
                       true);
  EXPECT_EQ(bad.status, 2);
  EXPECT_NE(bad.out.find("5:9: UnknownSymbol"), std::string::npos) << bad.out;

  std::string partial = file("p.kts", "kripke\nbits 1\nalphabet a b\n"
                                      "state s 0 init\ntrans s a s\n");
  RunResult nt = kmin("minimize " + partial, true);
  EXPECT_EQ(nt.status, 2);
  EXPECT_NE(nt.out.find("NonTotal"), std::string::npos);

  std::string other = file("o.kts", "kripke\nbits 3\nalphabet a\n"
                                    "state s 000 init\ntrans s a s\n");
  EXPECT_EQ(kmin("equiv " + kex_ + " " + other).status, 2);
  EXPECT_EQ(kmin("--help").status, 0);
}

}  // namespace
}  // namespace kmin
