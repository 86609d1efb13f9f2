#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "twistrim/cli.hpp"
#include "twistrim/json_io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = twistrim::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, Alexander) {
  const Result r = run({"alexander", "T(2,5)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "t^4 - t^3 + t^2 - t + 1\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, Cover) {
  EXPECT_EQ(run({"cover", "T(2,3)", "--d", "2"}).out, "order 3\n");
  EXPECT_EQ(run({"cover", "T(2,3)", "--d", "6"}).out, "order infinite\n");
  EXPECT_EQ(run({"cover", "T(2,3)", "--d", "3", "--structure"}).out, "order 4\nstructure Z/2 ⊕ Z/2\n");
}

TEST(Cli, Pi1) {
  EXPECT_EQ(run({"pi1", "T(2,3)", "--d", "5", "--m", "4"}).out, "Z/5 (theorem)\n");
  EXPECT_EQ(run({"pi1", "T(2,3)", "--d", "5", "--m", "4", "--enumerate"}).out,
            "Z/5 (coset-enumeration)\n");
  EXPECT_EQ(run({"pi1", "T(2,3)", "--d", "2", "--m", "2"}).out,
            "finite of order 6 (coset-enumeration)\n");
  EXPECT_EQ(run({"pi1", "T(2,3)", "--d", "3", "--m", "-2"}).out, "Z/3 (theorem)\n");
}

TEST(Cli, ClassifyExample) {
  const Result r = run({"classify", "T(2,3)#mirror(T(2,3))", "--d", "5", "--m", "4", "--cp2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("topologically_standard: yes"), std::string::npos);
  EXPECT_NE(r.out.find("smoothly_knotted: yes"), std::string::npos);
  EXPECT_NE(r.out.find("genus 6"), std::string::npos);
}

TEST(Cli, ClassifyJsonMatchesGolden) {
  const Result r = run({"classify", "T(2,3)#mirror(T(2,3))", "--d", "5", "--m", "4", "--cp2", "--json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(std::string(TWISTRIM_GOLDEN_DIR) + "/classify_trefoil_sum_d5_m4.json"));
}

TEST(Cli, JsonRoundTripsAndAgreesWithText) {
  for (const std::vector<std::string> base :
       {std::vector<std::string>{"classify", "T(2,3)", "--d", "2", "--m", "2"},
        std::vector<std::string>{"classify", "T(2,3)#mirror(T(2,3))", "--d", "5", "--m", "4", "--cp2"},
        std::vector<std::string>{"classify", "braid(3; 1 -2 1 -2)", "--d", "6", "--m", "5", "--sw"}}) {
    const Result text = run(base);
    std::vector<std::string> with_json = base;
    with_json.push_back("--json");
    const Result js = run(with_json);
    ASSERT_EQ(text.code, 0);
    ASSERT_EQ(js.code, 0);
    const twistrim::Json j = twistrim::Json::parse(js.out);
    const twistrim::SurgeryReport rep = twistrim::report_from_json(j);
    EXPECT_EQ(twistrim::to_json(rep), j);
    auto has = [&text](const std::string& line) {
      return text.out.find(line + "\n") != std::string::npos ||
             text.out.find(line + " (") != std::string::npos;
    };
    EXPECT_TRUE(has("d: " + std::to_string(rep.params.d)));
    EXPECT_TRUE(has("m: " + std::to_string(rep.params.m)));
    EXPECT_TRUE(has("alexander: " + rep.alexander.to_string()));
    EXPECT_TRUE(has("branched_cover: " + rep.branched_cover.to_string()));
    if (rep.pi1.kind != twistrim::Pi1Kind::Undetermined)
      EXPECT_NE(text.out.find(std::to_string(rep.pi1.order)), std::string::npos);
    if (rep.cp2_genus) EXPECT_NE(text.out.find("genus " + std::to_string(*rep.cp2_genus)), std::string::npos);
  }
}

TEST(Cli, SearchStreamsRows) {
  const Result r = run({"search", "--pmax", "3", "--qmax", "5", "--dmax", "7", "--mmax", "8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("p=2 q=3 d=5 m=4 "), std::string::npos);
  const Result js = run({"search", "--pmax", "3", "--qmax", "5", "--dmax", "7", "--mmax", "8", "--json"});
  std::istringstream lines(js.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    const twistrim::Json j = twistrim::Json::parse(line);
    EXPECT_EQ(j["topologically_standard"]["verdict"], "yes");
    ++n;
  }
  EXPECT_EQ(n, static_cast<int>(std::count(r.out.begin(), r.out.end(), '\n')));
  EXPECT_GT(n, 0);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"alexander"}).code, 2);
  EXPECT_EQ(run({"alexander", "T(2,4)"}).code, 2);
  EXPECT_EQ(run({"alexander", "T(2,3"}).code, 2);
  EXPECT_EQ(run({"cover", "T(2,3)"}).code, 2);
  EXPECT_EQ(run({"cover", "T(2,3)", "--d", "0"}).code, 2);
  EXPECT_EQ(run({"classify", "T(2,3)", "--d", "2", "--m", "1", "--cp2"}).code, 2);
  EXPECT_EQ(run({"classify", "T(2,3)", "--d", "x", "--m", "1"}).code, 2);
  EXPECT_EQ(run({"search", "--pmax", "1", "--qmax", "3", "--dmax", "3", "--mmax", "3"}).code, 2);
  const Result r = run({"alexander", "T(2,3)#"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("byte"), std::string::npos);
}

TEST(Cli, StrictUndetermined) {
  const std::vector<std::string> starved{"pi1", "T(2,3)", "--d", "2", "--m", "2", "--budget", "3"};
  EXPECT_EQ(run(starved).code, 0);
  std::vector<std::string> strict = starved;
  strict.push_back("--strict");
  const Result r = run(strict);
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.out, "undetermined (coset budget exhausted)\n");
  EXPECT_EQ(run({"classify", "T(2,3)", "--d", "2", "--m", "2", "--budget", "3", "--strict"}).code, 3);
  EXPECT_EQ(run({"classify", "T(2,3)", "--d", "2", "--m", "2", "--strict"}).code, 0);
}

TEST(Cli, Help) {
  const Result r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("classify"), std::string::npos);
}
