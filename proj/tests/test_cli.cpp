#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "z2cb/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = z2cb::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> lines(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(nlohmann::json::parse(line));
  return out;
}

const std::string kRemark = std::string(Z2CB_TEST_DATA_DIR) + "/remark_matrix.txt";

}  // namespace

TEST(Cli, MindistOnRemarkMatrix) {
  const Result r = run({"mindist", kRemark});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "11 5 4\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, Wdist) {
  const Result r = run({"wdist", kRemark});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "11 5\n1 0 0 0 8 14 0 0 7 2 0 0\n");
}

TEST(Cli, ShortenAndPuncture) {
  Result r = run({"shorten", kRemark, "--coord", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 4);
  r = run({"puncture", kRemark, "-c", "10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 11), "1111000000\n");
  r = run({"shorten", kRemark, "--coord", "11"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("OUT_OF_RANGE"), std::string::npos);
}

TEST(Cli, Bound) {
  const Result r = run({"bound", "--n", "23", "--k", "12"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("combined"), 7);
  EXPECT_EQ(j.at("per_bound").size(), 4u);
}

TEST(Cli, ConstructAndSearch) {
  Result r = run({"construct", "--name", "hamming(3)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 4);
  r = run({"construct", "--name", "nonsense"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("UNKNOWN_NAME"), std::string::npos);

  r = run({"search", "--n", "12", "--k", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("claimed 12 7 4"), std::string::npos);

  const std::string path = ::testing::TempDir() + "/recipe.txt";
  std::ofstream(path) << r.out;
  r = run({"construct", "--recipe", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 7);
}

TEST(Cli, AnalyzeRep) {
  const Result r = run({"analyze-rep", kRemark});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("min_codim"), 4);
  EXPECT_EQ(j.at("r"), 5);
}

TEST(Cli, VerifyRemarkMatrix) {
  const Result r = run({"verify", "remark-matrix"});
  EXPECT_EQ(r.code, 0);
  const auto reports = lines(r.out);
  ASSERT_EQ(reports.size(), 4u);
  for (const auto& j : reports) {
    EXPECT_EQ(j.at("verdict"), "PASS");
    EXPECT_EQ(j.at("runtime_ms"), 0);
  }
}

TEST(Cli, VerifyLemma12Scan) {
  const Result r = run({"verify", "lemma12", "--part", "1", "--scan", "69..111"});
  EXPECT_EQ(r.code, 0);
  const auto reports = lines(r.out);
  ASSERT_EQ(reports.size(), 43u);
  for (const auto& j : reports) {
    EXPECT_EQ(j.at("verdict"), "PASS");
    EXPECT_EQ(j.at("regime"), "exact");
  }
}

TEST(Cli, VerifyLemma12Parts) {
  Result r = run({"verify", "lemma12", "--part", "2", "--n", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).at(0).at("regime"), "table");
  r = run({"verify", "lemma12", "--part", "3"});
  EXPECT_EQ(r.code, 0);
  r = run({"verify", "lemma12", "--part", "2", "--scan", "5..54"});
  EXPECT_EQ(r.code, 0);
  int indeterminate = 0;
  for (const auto& j : lines(r.out)) indeterminate += j.at("verdict") == "INDETERMINATE";
  EXPECT_EQ(indeterminate, 6);
}

TEST(Cli, VerifyLemma14) {
  Result r = run({"verify", "lemma14", "--part", "2", "--sample", "5000", "--seed", "3",
                  "--workers", "2"});
  EXPECT_EQ(r.code, 0);
  const auto j = lines(r.out).at(0);
  EXPECT_EQ(j.at("evidence").at("matrices_examined"), 5000);
  EXPECT_EQ(j.at("evidence").at("workers"), 2);

  r = run({"verify", "lemma14", "--part", "1"});
  EXPECT_EQ(r.code, 0);
  r = run({"verify", "lemma14", "--part", "1", "--matrix", kRemark});
  EXPECT_EQ(r.code, 0);
  r = run({"verify", "lemma14", "--part", "2", "--matrix", kRemark});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).at(0).at("evidence").at("conclusion"), "b");
}

TEST(Cli, VerifyTablesSubset) {
  const Result r = run({"verify", "tables", "--table", "T3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).size(), 12u);
}

TEST(Cli, OutputIsDeterministic) {
  const auto args = std::vector<std::string>{"verify", "lemma14", "--part", "2",
                                             "--sample", "3000", "--workers", "3"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, TimingFlagKeepsMeasuredRuntime) {
  const Result r = run({"--timing", "verify", "remark-matrix"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).size(), 4u);
}

TEST(Cli, OutputFile) {
  const std::string path = ::testing::TempDir() + "/cli_out.txt";
  const Result r = run({"-o", path, "mindist", kRemark});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(text, "11 5 4\n");
}

TEST(Cli, FailVerdictExitsOne) {
  const std::string path = ::testing::TempDir() + "/bad_tables.txt";
  std::ofstream(path) << "T1 12 8 3 4 4\n";
  ::setenv("Z2CB_TABLE_PATH", path.c_str(), 1);
  const Result r = run({"verify", "tables"});
  ::unsetenv("Z2CB_TABLE_PATH");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(lines(r.out).at(0).at("verdict"), "FAIL");
}

TEST(Cli, UsageErrorsExitTwo) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"mindist", "/nonexistent/file"},
           {"bound", "--n", "5"},
           {"verify"},
           {"verify", "lemma12", "--part", "4", "--n", "5"},
           {"verify", "lemma12", "--part", "1"},
           {"verify", "lemma12", "--part", "1", "--scan", "9..3"},
           {"verify", "lemma12", "--part", "1", "--n", "2"},
           {"verify", "lemma14", "--part", "2", "--exhaustive", "--sample", "4"},
           {"verify", "tables", "--table", "T7"},
       }) {
    const Result r = run(args);
    EXPECT_EQ(r.code, 2) << testing::PrintToString(args);
    EXPECT_TRUE(r.out.empty()) << testing::PrintToString(args);
    EXPECT_FALSE(r.err.empty()) << testing::PrintToString(args);
  }
}

TEST(Cli, MissingTableFileIsAnError) {
  ::setenv("Z2CB_TABLE_PATH", "/nonexistent/tables.txt", 1);
  const Result r = run({"verify", "tables"});
  ::unsetenv("Z2CB_TABLE_PATH");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("IO"), std::string::npos);
}

TEST(Cli, Help) {
  const Result r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}
