#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "valchain/io.hpp"
#include "valchain/report.hpp"
#include "valchain/scenarios.hpp"

using namespace valchain;

namespace {

std::string location_of(const Json& j, bool chain) {
  try {
    if (chain)
      chain_from_json(j);
    else
      sequence_from_json(j);
  } catch (const InputError& e) {
    return e.location();
  }
  return "no error";
}

Json two_step_json() { return to_json(scenarios::two_step()); }

}  // namespace

TEST(Io, ChainRoundTrips) {
  for (const auto& c : {scenarios::two_step(), scenarios::sqrt7(), scenarios::liouville(), scenarios::tower(),
                        scenarios::non_key_augmentation()})
    EXPECT_EQ(chain_from_json(to_json(c)), c);
}

TEST(Io, SequenceRoundTrips) {
  for (const auto& s : {mlv_to_abkp_unchecked(scenarios::sqrt7()), mlv_to_abkp_unchecked(scenarios::liouville()),
                        mlv_to_abkp_unchecked(scenarios::tower()), scenarios::undetermined_sequence(),
                        scenarios::decreasing_gamma()})
    EXPECT_EQ(sequence_from_json(to_json(s)), s);
}

TEST(Io, TwoStepLayout) {
  const Json j = two_step_json();
  EXPECT_EQ(j["format"], "valchain-chain");
  EXPECT_EQ(j["version"], kFormatVersion);
  EXPECT_EQ(j["seed"]["delta"], "1/2");
  EXPECT_EQ(j["steps"][0]["phi"], "X^2 - 2");
  EXPECT_EQ(j["steps"][0]["type"], "ordinary");
}

TEST(Io, ErrorLocations) {
  Json j = two_step_json();
  j["steps"][0]["gamma"] = "three halves";
  EXPECT_EQ(location_of(j, true), "/steps/0/gamma");
  j = two_step_json();
  j["steps"][0]["phi"] = "X^^2";
  EXPECT_EQ(location_of(j, true), "/steps/0/phi");
  j = two_step_json();
  j["version"] = 2;
  EXPECT_EQ(location_of(j, true), "/version");
  j = two_step_json();
  j.erase("seed");
  EXPECT_EQ(location_of(j, true), "/seed");
  j = two_step_json();
  j["steps"][0]["type"] = "sideways";
  EXPECT_EQ(location_of(j, true), "/steps/0/type");
  j = two_step_json();
  j["field"]["p"] = 6;
  EXPECT_EQ(location_of(j, true), "/field/p");
  EXPECT_EQ(location_of(two_step_json(), false), "/format");
}

TEST(Io, IntegersAcceptedForRationals) {
  Json j = two_step_json();
  j["steps"][0]["gamma"] = 2;
  EXPECT_EQ(chain_from_json(j).chain().key_value(), GroupValue(2));
}

TEST(Io, Files) {
  const auto dir = std::filesystem::temp_directory_path() / "valchain-io-test";
  std::filesystem::create_directories(dir);
  const auto good = dir / "two-step.chain";
  std::ofstream(good) << two_step_json().dump(2);
  EXPECT_EQ(read_chain_file(good), scenarios::two_step());
  const auto bad = dir / "broken.chain";
  std::ofstream(bad) << "{ \"format\": ";
  try {
    read_chain_file(bad);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_EQ(e.location(), bad.string());
  }
  EXPECT_THROW(read_chain_file(dir / "missing.chain"), InputError);
  std::filesystem::remove_all(dir);
}

TEST(Report, LinesAndEnvelope) {
  ValidationReport r;
  r.inspected_depth = 3;
  EXPECT_EQ(report_lines(r), std::vector<std::string>{"pass (inspected depth 3)"});
  r.findings.push_back({"gamma-increasing", "block 1", "1/4 <= 1/2"});
  const auto lines = report_lines(r);
  ASSERT_FALSE(lines.empty());
  EXPECT_NE(join_lines(lines).find("gamma-increasing violated at block 1"), std::string::npos);
  const Json env = report_envelope("validate", to_json(r));
  EXPECT_EQ(env["schema"], "valchain-report");
  EXPECT_EQ(env["version"], 1);
  EXPECT_EQ(env["command"], "validate");
  EXPECT_EQ(env["result"]["findings"][0]["axiom"], "gamma-increasing");
}
