#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "cli_app.hpp"

namespace leavitt::cli {
namespace {

const std::string kData = LEAVITT_TEST_DATA_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, Normalize) {
  const Result r = invoke({"normalize", "--loops", "2", "e1 e1'"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "v - e2 e2'\n");
  EXPECT_EQ(invoke({"normalize", "--loops", "2", "e2 e1 e1' e1'"}).out, "e2 e1' - e2 e2 e2' e1'\n");
}

TEST(Cli, NormalizeJson) {
  const Result r = invoke({"--json", "normalize", "--loops", "2", "3/2*e2 e1' - v"});
  ASSERT_EQ(r.code, kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  const auto expected = nlohmann::json::parse(R"([[["v"],"-1","1"],[["e2","e1'"],"3","2"]])");
  EXPECT_EQ(doc["result"], expected);
}

TEST(Cli, Mul) {
  EXPECT_EQ(invoke({"mul", "--loops", "2", "e1'", "e1"}).out, "v\n");
  EXPECT_EQ(invoke({"mul", "--loops", "2", "e1 e1'", "e1 e1'"}).out, "v - e2 e2'\n");
}

TEST(Cli, Derive) {
  const Result r = invoke({"derive", "--deriv", kData + "/laurent_edge.json", "e1'"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "-e1' e1'\n");
  EXPECT_EQ(invoke({"derive", "--deriv", kData + "/laurent_sign_flipped.json", "e1"}).code,
            kExitUsage);
}

TEST(Cli, AdOnLaurentRingIsZero) {
  const Result r = invoke({"ad", "--loops", "1", "e1'"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "D(e1) = 0\nD(e1') = 0\n");
}

TEST(Cli, CheckExitCodesFollowReport) {
  EXPECT_EQ(invoke({"check", "--deriv", kData + "/laurent_edge.json"}).code, kExitOk);
  const Result bad = invoke({"check", "--deriv", kData + "/laurent_sign_flipped.json"});
  EXPECT_EQ(bad.code, kExitReport);
  EXPECT_NE(bad.out.find("rel-dual-edge"), std::string::npos);
  const Result js = invoke({"--json", "check", "--deriv", kData + "/laurent_sign_flipped.json"});
  EXPECT_EQ(js.code, kExitReport);
  EXPECT_FALSE(nlohmann::json::parse(js.out)["violations"].empty());
}

TEST(Cli, GenthCheck) {
  EXPECT_EQ(invoke({"genth-check", "--deriv", kData + "/two_loops_scalar.json"}).code, kExitOk);
  const Result r = invoke({"genth-check", "--deriv", kData + "/laurent_genth_invalid.json"});
  EXPECT_EQ(r.code, kExitReport);
  EXPECT_NE(r.out.find("genth-1"), std::string::npos);
}

TEST(Cli, Obstructions) {
  const Result r = invoke({"obstructions", "--deriv", kData + "/laurent_edge.json"});
  EXPECT_EQ(r.code, kExitReport);
  EXPECT_NE(r.out.find("outer (per paper)"), std::string::npos);
  const Result strict =
      invoke({"--json", "obstructions", "--strict-omega", "--deriv", kData + "/laurent_edge.json"});
  EXPECT_EQ(strict.code, kExitOk);
  const auto doc = nlohmann::json::parse(strict.out);
  EXPECT_EQ(doc["include_trivial_p"], false);
  EXPECT_EQ(doc["classification"], "inner-per-paper");
}

TEST(Cli, Witness) {
  const Result none = invoke({"witness", "--deriv", kData + "/laurent_edge.json", "--max-len", "6"});
  EXPECT_EQ(none.code, kExitReport);
  EXPECT_EQ(none.out, "none up to 6\n");
  const Result js =
      invoke({"--json", "witness", "--deriv", kData + "/laurent_edge.json", "--max-len", "2"});
  EXPECT_TRUE(nlohmann::json::parse(js.out)["witness"].is_null());
}

TEST(Cli, Selfcheck) {
  const Result r = invoke({"--json", "selfcheck", "--loops", "2", "--words", "50"});
  EXPECT_EQ(r.code, kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["words_checked"], 50);
  EXPECT_EQ(doc["overlap_violations"].size(), 0u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"normalize", "--loops", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"normalize", "--loops", "0", "v"}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  const Result parse = invoke({"normalize", "--loops", "2", "e1 +"});
  EXPECT_EQ(parse.code, kExitUsage);
  EXPECT_FALSE(parse.err.empty());
  EXPECT_EQ(invoke({"normalize", "--loops", "2", "e5"}).code, kExitUsage);
  EXPECT_EQ(invoke({"check", "--deriv", kData + "/missing.json"}).code, kExitUsage);
  EXPECT_EQ(invoke({"witness", "--deriv", kData + "/laurent_edge.json", "--max-len", "0"}).code,
            kExitUsage);
}

}  // namespace
}  // namespace leavitt::cli
