#include "cli.hpp"
#include "corpus.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = arith::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string join_args(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) s += (s.empty() ? "" : " ") + ("'" + a + "'");
  return s;
}

}  // namespace

// Each line: expected exit code, then the arguments, tab separated.
TEST(Cli, ExitCodeCorpus) {
  int cases = 0;
  for (const auto& c : corpus::exit_code_cases()) {
    const Outcome o = run(c.args);
    EXPECT_EQ(o.code, c.expected) << join_args(c.args) << "\nstdout: " << o.out << "\nstderr: " << o.err;
    ++cases;
  }
  EXPECT_GE(cases, 20);
}

// Blocks of "$<TAB>args..." followed by the exact expected stdout.
TEST(Cli, TsvGoldenOutputs) {
  const auto lines = corpus::read_lines(std::string(ARITH_GOLDEN_DIR) + "/tsv_outputs.txt");
  int blocks = 0;
  for (std::size_t i = 0; i < lines.size();) {
    ASSERT_EQ(lines[i].rfind("$\t", 0), 0u) << "line " << i + 1;
    auto args = corpus::split_tabs(lines[i].substr(2));
    std::string expected;
    for (++i; i < lines.size() && lines[i].rfind("$\t", 0) != 0; ++i) expected += lines[i] + "\n";
    const Outcome o = run(args);
    EXPECT_EQ(o.out, expected) << join_args(args) << "\nstderr: " << o.err;
    ++blocks;
  }
  EXPECT_GE(blocks, 8);
}

TEST(Cli, PlainOutputs) {
  EXPECT_EQ(run({"check", "17 | 35^228 + 84^501"}).out, "verified\n");
  EXPECT_EQ(run({"check", "forall n in [0..20], fact(n) > 2^n"}).out,
            "refuted at n = 0 searching n in [0..20] (1 assignment)\n");
  EXPECT_EQ(run({"check", "6 | n <-> (2 | n /\\ 3 | n)"}).out, "verified on n in [-100..100] (201 assignments)\n");
  EXPECT_EQ(run({"check", "--domain", "0:9", "n < 9"}).out, "refuted at n = 9 searching n in [0..9] (10 assignments)\n");
  EXPECT_EQ(run({"table", "--mod", "7", "x^2", "x^3"}).out,
            "x           0 1 2 3 4 5 6\n"
            "x^2 (mod 7) 0 1 4 2 2 4 1\n"
            "x^3 (mod 7) 0 1 1 6 1 6 6\n"
            "intersection: {0, 1}\n");
  EXPECT_EQ(run({"table", "--mod", "7", "--image", "k^2", "q^3"}).out,
            "k^2 (mod 7): {0, 1, 2, 4}\nq^3 (mod 7): {0, 1, 6}\nintersection: {0, 1}\n");
  EXPECT_EQ(run({"findall", "--range", "0:10000", "n | n + 8"}).out, "1 2 4 8\n");
  EXPECT_EQ(run({"eval", "(-7) div 2"}).out, "-4\n");
  EXPECT_EQ(run({"prime", "101"}).out, "prime\n");
  EXPECT_EQ(run({"prime", "-7"}).out, "not prime\n");
  EXPECT_EQ(run({"prime", "62744"}).out, "composite (smallest factor 2)\n");
  EXPECT_EQ(run({"binom", "30", "15"}).out, "155117520\n");
  EXPECT_EQ(run({"pascal", "4"}).out, "1 4 6 4 1\n");
  EXPECT_EQ(run({"digits", "62744"}).out,
            "digits: 6 2 7 4 4\ndigit sum: 23\nlast digit: 4\n"
            "divisible by 2: yes (last digit 4)\ndivisible by 3: no (digit sum 23)\n");
}

TEST(Cli, DiagnosticsGoToStderr) {
  const Outcome parse = run({"eval", "x +"});
  EXPECT_EQ(parse.code, 2);
  EXPECT_TRUE(parse.out.empty());
  EXPECT_EQ(parse.err.rfind("error: 1:4: parse error: ", 0), 0u) << parse.err;

  const Outcome domain = run({"eval", "fact(-1)"});
  EXPECT_EQ(domain.code, 3);
  EXPECT_EQ(domain.err.rfind("error: 1:6: domain error: ", 0), 0u) << domain.err;
}

TEST(Cli, HelpExitsCleanly) { EXPECT_EQ(run({"--help"}).code, 0); }
