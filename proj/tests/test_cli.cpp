#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "noncomm/cli.hpp"
#include "noncomm/constructions.hpp"
#include "noncomm/matgroups.hpp"
#include "noncomm/report.hpp"

using namespace noncomm;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::ordered_json json_of(const Run& r) { return nlohmann::ordered_json::parse(r.out); }

}  // namespace

TEST(Cli, VerifySLTwoPasses) {
  const auto r = run({"verify", "sl", "--q", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j.at("verdict"), "pass");
  const std::vector<std::string> keys{"tool", "version", "config", "verdict", "assertions", "data"};
  std::vector<std::string> got;
  for (auto it = j.begin(); it != j.end(); ++it) got.push_back(it.key());
  EXPECT_EQ(got, keys);
  EXPECT_EQ(j.at("version"), kToolVersion);
  EXPECT_EQ(j.at("config").at("q"), 2);
}

TEST(Cli, VerifyGLThreeIsUsageError) {
  const auto r = run({"verify", "gl", "--q", "3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("q > 3"), std::string::npos);
}

TEST(Cli, CliqueSL25) {
  const auto r = run({"graph", "clique", "--sl2", "5", "--budget", "300"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j.at("data").at("omega"), 31);
  EXPECT_EQ(j.at("data").at("witness").size(), 31u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify", "sl", "--q", "2", "--bogus"}).code, 2);
  EXPECT_EQ(run({"graph", "clique", "--group", "S3", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"graph", "clique", "--group", "S3", "--budget", "-1"}).code, 2);
  EXPECT_EQ(run({"graph", "clique", "--group", "C6"}).code, 2);
  EXPECT_EQ(run({"classify", "--group", "nonsense("}).code, 2);
  EXPECT_EQ(run({"field", "--p", "4"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, FieldAndGroupBuild) {
  const auto f = run({"field", "--p", "3", "--n", "2"});
  ASSERT_EQ(f.code, 0) << f.err;
  EXPECT_EQ(json_of(f).at("data").at("modulus"), nlohmann::ordered_json::array({1, 0, 1}));

  const auto g = run({"group", "build", "--gl2", "4"});
  ASSERT_EQ(g.code, 0) << g.err;
  EXPECT_EQ(json_of(g).at("data").at("group").at("order"), 180);
}

TEST(Cli, DimacsExport) {
  const auto r = run({"graph", "export", "--group", "S3", "--format", "dimacs"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("p edge 5 9\n"), std::string::npos);
}

TEST(Cli, ClassifyAndRivals) {
  const auto c = run({"classify", "--group", "semidirect(C5,C4,x^2)"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(json_of(c).at("data").at("classification").at("schmidt_case"), "S2");

  const auto r = run({"rivals", "--order", "24", "--target", "SL2(3)"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json_of(r).at("data").at("rivals").at("matches").size(), 1u);
}

TEST(Cli, CompareGraphs) {
  const auto same = run({"graph", "compare", "D8", "Q8"});
  ASSERT_EQ(same.code, 0) << same.err;
  EXPECT_EQ(json_of(same).at("data").at("isomorphic"), true);
  const auto diff = run({"graph", "compare", "SL2(3)", "direct(C2,A4)"});
  ASSERT_EQ(diff.code, 0) << diff.err;
  EXPECT_EQ(json_of(diff).at("data").at("fingerprint_equal"), false);
  EXPECT_EQ(json_of(diff).at("data").at("isomorphic"), false);
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "noncomm_cli_test.json";
  const auto r = run({"verify", "sl", "--q", "2", "--output", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(nlohmann::ordered_json::parse(ss.str()).at("verdict"), "pass");
  std::filesystem::remove(path);
}

TEST(Cli, ResolveGroup) {
  EXPECT_EQ(resolve_group("GL2(4)").order(), 180u);
  EXPECT_EQ(resolve_group("PSL2(5)").order(), 60u);
  EXPECT_EQ(resolve_group("PGL2(5)").order(), 120u);
  EXPECT_EQ(resolve_group("S4").order(), 24u);
}

// Identical flags give byte-identical output.
TEST(CliProperties, Deterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{{"verify", "sl", "--q", "3"},
                                                                 {"graph", "profile", "--gl2", "4"},
                                                                 {"classify", "--group", "GL2(3)"},
                                                                 {"group", "partition", "--psl2", "5"}}) {
    const auto a = run(args);
    const auto b = run(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
}
