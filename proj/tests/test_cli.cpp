#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult yosp_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = yosp::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("yosp_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const char* name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, BuildAndVerify) {
  const std::string f = path("l2.json");
  EXPECT_EQ(yosp_run({"elementary", "--alpha", "-2", "--beta", "0", "--out", f}).code, 0);
  const CliResult r = yosp_run({"verify", "rtt", f, "--samples", "20"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("rtt: pass"), std::string::npos);
  EXPECT_EQ(yosp_run({"verify", "central", f}).code, 0);
  EXPECT_EQ(yosp_run({"verify", "gauss", f}).code, 0);
}

TEST_F(CliTest, DrinfeldAndClassify) {
  const std::string f = path("l2.json");
  yosp_run({"elementary", "--alpha", "-2", "--beta", "0", "--out", f});
  EXPECT_EQ(yosp_run({"drinfeld", f}).out, "P(u) = (u-1)(u-2)\n");
  EXPECT_NE(yosp_run({"classify", "--in", f}).out.find("finite-dimensional"), std::string::npos);
  EXPECT_EQ(yosp_run({"irreducible", f}).code, 0);
}

TEST_F(CliTest, ReducibleTensorExitsOne) {
  const std::string a = path("a.json"), b = path("b.json"), t = path("t.json");
  yosp_run({"elementary", "--alpha", "-1", "--beta", "0", "--out", a});
  yosp_run({"elementary", "--alpha", "-5/2", "--beta", "-3/2", "--out", b});
  EXPECT_EQ(yosp_run({"tensor", a, b, "--out", t}).code, 0);
  EXPECT_EQ(yosp_run({"irreducible", t}).code, 1);
  const std::string q = path("q.json");
  EXPECT_EQ(yosp_run({"quotient", t, "--singular", "--out", q}).code, 0);
  EXPECT_EQ(yosp_run({"irreducible", q}).code, 0);
}

TEST_F(CliTest, RoundTripIsByteIdentical) {
  const std::string a = path("a.json"), b = path("b.json");
  yosp_run({"small-verma", "--alpha", "1/3", "--beta", "0", "--depth", "4", "--out", a});
  yosp_run({"tensor", a, a, "--out", b});
  const std::string first = slurp(b);
  const std::string c = path("c.json");
  yosp_run({"tensor", a, a, "--out", c});
  EXPECT_EQ(first, slurp(c));
  EXPECT_FALSE(first.empty());
}

TEST_F(CliTest, DemoOutput) {
  const CliResult r = yosp_run({"demo", "example-tpr"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dim 9"), std::string::npos);
  EXPECT_NE(r.out.find("zeta = -xi (x) xi_11 + 3*xi_01 (x) xi_01 + xi_11 (x) xi"), std::string::npos);
  EXPECT_NE(r.out.find("mu1(u) = (u-1/2)(u-5/2)/(u-3/2)^2"), std::string::npos);
  EXPECT_NE(r.out.find("quotient by K: dim 8, irreducible"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(yosp_run({"elementary", "--alpha", "x", "--beta", "0"}).code, 2);
  EXPECT_EQ(yosp_run({"small-verma", "--alpha", "1/3", "--beta", "0"}).code, 2);
  EXPECT_EQ(yosp_run({"elementary", "--alpha", "1/3", "--beta", "0"}).code, 2);
  EXPECT_EQ(yosp_run({"nonsense"}).code, 2);
  EXPECT_EQ(yosp_run({"verify", "rtt"}).code, 2);
}

TEST_F(CliTest, NegativeValuesParse) {
  const CliResult r = yosp_run({"elementary", "--alpha", "-1", "--beta", "0", "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"basis\""), std::string::npos);
}
