// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "plm/analysis.hpp"
#include "plm/cli.hpp"
#include "plm/serialize.hpp"

using namespace plm;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test {
protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("plm_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

const std::vector<std::string> gen_umi = {"gen",   "--model", "ci",   "--n",    "3.4", "--sigma", "9.7",
                                          "--freq", "28",     "--count", "100", "--dmin", "61",    "--dmax",
                                          "186",  "--seed",  "7"};

std::vector<std::string> with(std::vector<std::string> base, std::initializer_list<std::string> extra) {
  base.insert(base.end(), extra);
  return base;
}

} // namespace

TEST_F(CliTest, GenIsByteDeterministic) {
  ASSERT_EQ(run(with(gen_umi, {"-o", path("a.csv")})).code, cli::ok);
  ASSERT_EQ(run(with(gen_umi, {"-o", path("b.csv")})).code, cli::ok);
  const auto a = slurp(path("a.csv"));
  EXPECT_EQ(a, slurp(path("b.csv")));

  std::istringstream in(a);
  const auto ds = load_csv(in);
  EXPECT_EQ(ds.size(), 100u);
  EXPECT_EQ(ds.metadata().at("seed"), "7");

  // Standard output carries the same bytes when -o is absent.
  EXPECT_EQ(run(gen_umi).out, a);
}

TEST_F(CliTest, FitEmitsTheLibrarySerialization) {
  ASSERT_EQ(run(with(gen_umi, {"-o", path("d.csv")})).code, cli::ok);
  const auto r = run({"fit", "--model", "ci", "--input", path("d.csv"), "--env", "nlos"});
  ASSERT_EQ(r.code, cli::ok) << r.err;

  std::ifstream in(path("d.csv"));
  const auto ds = load_csv(in);
  EXPECT_EQ(r.out, to_json(fit_ci(ds.samples())).dump(2) + "\n");

  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["model"], "CI");
  EXPECT_EQ(j["n_samples"], 100);
}

TEST_F(CliTest, GenThenFitRecoversParameters) {
  auto args = gen_umi;
  args[10] = "10000";
  ASSERT_EQ(run(with(args, {"-o", path("big.csv")})).code, cli::ok);
  const auto r = run({"fit", "--model", "ci", "--input", path("big.csv")});
  ASSERT_EQ(r.code, cli::ok);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["params"]["n"].get<double>(), 3.4, 0.05);
  EXPECT_NEAR(j["sigma_db"].get<double>(), 9.7, 0.2);
}

TEST_F(CliTest, FitAllAndCompareProduceReports) {
  const std::vector<std::string> gen = {"gen",  "--model", "abg",  "--alpha", "3.1",    "--beta", "1.3",
                                        "--gamma", "3.8", "--sigma", "10.3", "--freq",  "28",     "--freq", "73.5",
                                        "--count", "400", "--dmin", "3.9",  "--dmax",  "45.9",   "--seed", "11",
                                        "--scenario", "indoor_office", "--env", "nlos", "-o", path("m.csv")};
  ASSERT_EQ(run(gen).code, cli::ok);
  const auto all = run({"fit", "--model", "all", "--input", path("m.csv")});
  ASSERT_EQ(all.code, cli::ok) << all.err;
  std::ifstream in(path("m.csv"));
  const auto ds = load_csv(in);
  EXPECT_EQ(all.out, to_json(compare_models(ds, all_model_kinds)).dump(2) + "\n");

  const auto table = run({"compare", "--input", path("m.csv")});
  ASSERT_EQ(table.code, cli::ok);
  EXPECT_EQ(table.out, to_table(compare_models(ds, all_model_kinds)));
  EXPECT_EQ(table.out.find("\x1b["), std::string::npos);
}

TEST_F(CliTest, EvalMatchesHandComputation) {
  const auto r = run({"eval", "--model", "ci", "--n", "3.4", "--freq", "28", "--distance", "100", "--format", "json"});
  ASSERT_EQ(r.code, cli::ok);
  EXPECT_NE(r.out.find("129.391"), std::string::npos);
}

TEST_F(CliTest, RangeExamples) {
  const auto ok = run({"range", "--model", "ci", "--n", "2", "--freq", "28", "--max-pl", "121.39", "--format", "json"});
  ASSERT_EQ(ok.code, cli::ok);
  EXPECT_NEAR(nlohmann::json::parse(ok.out)["distance_m"].get<double>(), 1000.0, 1.0);

  const auto bad = run({"range", "--model", "fi", "--alpha", "-0.8", "--beta", "115.6", "--max-pl", "140"});
  EXPECT_EQ(bad.code, cli::validation_error);
  EXPECT_TRUE(bad.out.empty());
  EXPECT_NE(bad.err.find("does not increase"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::usage_error);
  EXPECT_EQ(run({"frobnicate"}).code, cli::usage_error);
  EXPECT_EQ(run({"registry", "--bogus"}).code, cli::usage_error);
  EXPECT_EQ(run({"fit", "--model", "ci"}).code, cli::usage_error);
  EXPECT_EQ(run({"fit", "--model", "xyz", "--input", "x.csv"}).code, cli::usage_error);
  const auto conflict = run({"fit", "--model", "cif", "--input", "x.csv", "--f0", "auto", "--f0-ghz", "51"});
  EXPECT_EQ(conflict.code, cli::usage_error);
  EXPECT_FALSE(conflict.err.empty());
  EXPECT_EQ(run({"eval", "--model", "ci", "--freq", "28", "--distance", "10"}).code, cli::usage_error);
  EXPECT_EQ(run({"eval", "--model", "ci", "--n", "2", "--alpha", "2", "--freq", "28", "--distance", "10"}).code,
            cli::usage_error);
}

TEST_F(CliTest, ValidationErrors) {
  EXPECT_EQ(run({"fit", "--model", "ci", "--input", path("missing.csv")}).code, cli::validation_error);

  std::ofstream(path("bad.csv")) << csv_header << "\numi_sc,nlos,28,0.5,100\n";
  const auto r = run({"fit", "--model", "ci", "--input", path("bad.csv")});
  EXPECT_EQ(r.code, cli::validation_error);
  EXPECT_NE(r.err.find('2'), std::string::npos);

  EXPECT_EQ(run({"eval", "--model", "ci", "--n", "2", "--freq", "28", "--distance", "0.5"}).code,
            cli::validation_error);
}

TEST_F(CliTest, RegistryCsvMatchesLibrary) {
  const auto r = run({"registry", "--format", "csv"});
  ASSERT_EQ(r.code, cli::ok);
  EXPECT_EQ(r.out, registry_csv());
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 29);
}

TEST_F(CliTest, PlotWritesSvg) {
  ASSERT_EQ(run(with(gen_umi, {"-o", path("d.csv")})).code, cli::ok);
  ASSERT_EQ(run({"plot", "--input", path("d.csv"), "--model", "ci", "-o", path("p.svg")}).code, cli::ok);
  const auto svg = slurp(path("p.svg"));
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("class=\"fit\""), std::string::npos);
}

TEST(CliHelp, EveryVerbDocumentsExactlyItsFlags) {
  const std::regex flag(R"((^|[\s,])(--?[a-z0-9][a-z0-9-]*))");
  for (const auto& [verb, documented] : cli::documented_flags()) {
    std::set<std::string> listed;
    std::istringstream help(cli::help_text(verb));
    for (std::string line; std::getline(help, line);) {
      // Option rows start with two spaces then a dash; the name list ends at the first space.
      if (line.rfind("  -", 0) != 0)
        continue;
      const std::string names = line.substr(2, line.find(' ', 2) - 2);
      for (auto it = std::sregex_iterator(names.begin(), names.end(), flag); it != std::sregex_iterator(); ++it)
        listed.insert((*it)[2]);
    }
    EXPECT_EQ(listed, documented) << verb;
  }
  const auto top = cli::help_text("");
  for (const auto& [verb, flags] : cli::documented_flags())
    EXPECT_NE(top.find(verb), std::string::npos) << verb;
}
