#include <gtest/gtest.h>

#include "gf3/bench.hpp"
#include "gf3/formulas.hpp"

using namespace gf3;

namespace {

BenchConfig small_config() {
  BenchConfig cfg;
  cfg.m = 7;
  cfg.iterations = 200;
  cfg.seed = 42;
  return cfg;
}

ErrorCode validate_error(const BenchConfig& cfg) {
  try {
    cfg.validate();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "config accepted";
  return ErrorCode::kParseError;
}

}  // namespace

TEST(BenchConfig, Validation) {
  auto cfg = small_config();
  EXPECT_NO_THROW(cfg.validate());
  cfg.m = 8;
  EXPECT_EQ(validate_error(cfg), ErrorCode::kInvalidConfig);
  cfg = small_config();
  cfg.iterations = 0;
  EXPECT_EQ(validate_error(cfg), ErrorCode::kInvalidConfig);
  cfg = small_config();
  cfg.strategies.clear();
  EXPECT_EQ(validate_error(cfg), ErrorCode::kInvalidConfig);
  cfg = small_config();
  cfg.modulus = "2001";
  EXPECT_EQ(validate_error(cfg), ErrorCode::kInvalidConfig);
  cfg = small_config();
  cfg.m = 3;
  EXPECT_EQ(validate_error(cfg), ErrorCode::kInvalidConfig);
  cfg.strategies = {Strategy::kKara18};
  EXPECT_NO_THROW(cfg.validate());
}

TEST(BenchConfig, StrategyList) {
  EXPECT_EQ(parse_strategy_list("kara18,interp-flat"),
            (std::vector<Strategy>{Strategy::kKara18, Strategy::kInterpFlat}));
  EXPECT_THROW(parse_strategy_list("kara18,,interp-flat"), Error);
  EXPECT_THROW(parse_strategy_list("fft"), Error);
}

TEST(BenchCommands, InvalidConfigExitsWithTwo) {
  auto cfg = small_config();
  cfg.m = 4;
  EXPECT_EQ(cmd_verify(cfg).exit_code, kExitInvalidConfig);
  EXPECT_EQ(cmd_count(cfg).exit_code, kExitInvalidConfig);
  EXPECT_EQ(cmd_bench(cfg).exit_code, kExitInvalidConfig);
  cfg = small_config();
  cfg.modulus = "00000001";  // x^7, reducible
  EXPECT_EQ(cmd_verify(cfg).exit_code, kExitInvalidConfig);
}

TEST(BenchCommands, VerifyIsDeterministic) {
  const auto cfg = small_config();
  const auto first = cmd_verify(cfg);
  EXPECT_EQ(first.exit_code, kExitOk);
  EXPECT_EQ(first.output, cmd_verify(cfg).output);
  EXPECT_NE(first.output.find("PASS: 200 pairs (random), 5 strategies agree"), std::string::npos);
}

TEST(BenchCommands, VerifyHonoursModulusOverride) {
  auto cfg = small_config();
  cfg.modulus = "20100001";  // x^7 + x^2 + 2 spelled out
  const auto out = cmd_verify(cfg);
  EXPECT_EQ(out.exit_code, kExitOk);
  EXPECT_NE(out.output.find("modulus=x^7 + x^2 + 2"), std::string::npos);
}

TEST(BenchCommands, SingleStrategyWarns) {
  auto cfg = small_config();
  cfg.strategies = {Strategy::kKara18};
  const auto out = cmd_verify(cfg);
  EXPECT_EQ(out.exit_code, kExitOk);
  EXPECT_NE(out.output.find("single strategy"), std::string::npos);
}

TEST(BenchCommands, DisagreementGivesCounterexample) {
  const auto ctx = default_context(5);
  BenchConfig cfg = small_config();
  cfg.m = 5;
  const auto reference = reference_flat_formulas();
  const std::vector<NamedMultiplier> muls = {
      named_multiplier(Strategy::kKara18),
      {"reference-listing", [&](const SexticElem& a, const SexticElem& b, OpCounter& c) {
         return mul_flat_table(reference, a, b, c);
       }}};
  const auto result = check_agreement(muls, operand_pairs(*ctx, cfg));
  EXPECT_FALSE(result.counterexample.empty());
  EXPECT_NE(result.counterexample.find("reference-listing = "), std::string::npos);
}

TEST(BenchCommands, CountReportsExpectedValues) {
  auto cfg = small_config();
  cfg.format = OutputFormat::kJson;
  const auto report = run_count(cfg);
  EXPECT_FALSE(report.failed);
  ASSERT_EQ(report.rows.size(), 5u);
  for (const auto& row : report.rows) EXPECT_EQ(row.base_muls, row.expected_base_muls) << row.strategy;
  const auto out = cmd_count(cfg);
  EXPECT_EQ(out.exit_code, kExitOk);
  EXPECT_EQ(out.output, cmd_count(cfg).output);
  EXPECT_EQ(report_from_json(nlohmann::json::parse(out.output)), report);
}

TEST(BenchCommands, BenchJsonRoundTrips) {
  auto cfg = small_config();
  cfg.iterations = 300;
  cfg.strategies = {Strategy::kKara18, Strategy::kInterpMatrix};
  const auto report = run_bench(cfg);
  ASSERT_EQ(report.rows.size(), 2u);
  EXPECT_EQ(report.rows[0].speedup_vs_kara18_pct, 0.0);
  EXPECT_TRUE(report.rows[1].ns_per_op_median.has_value());
  const auto j = report_to_json(report);
  for (const char* key : {"strategy", "ns_per_op_median", "base_muls", "base_adds", "speedup_vs_kara18_pct"}) {
    EXPECT_TRUE(j["results"][0].contains(key)) << key;
  }
  EXPECT_EQ(report_from_json(nlohmann::json::parse(j.dump())), report);
}

TEST(BenchCommands, SpeedupAbsentWithoutKaratsuba) {
  auto cfg = small_config();
  cfg.iterations = 50;
  cfg.strategies = {Strategy::kInterpFlat};
  const auto report = run_bench(cfg);
  EXPECT_FALSE(report.rows[0].speedup_vs_kara18_pct.has_value());
  EXPECT_NE(render_table(report).find("interp-flat"), std::string::npos);
}

TEST(BenchCommands, EmitFormulas) {
  const auto out = cmd_emit_formulas(small_config());
  EXPECT_EQ(out.exit_code, kExitOk);
  std::size_t p_lines = 0, c_lines = 0;
  std::size_t pos = 0;
  while ((pos = out.output.find('\n', pos)) != std::string::npos) {
    ++pos;
    if (out.output.compare(pos, 2, "P_") == 0) ++p_lines;
    if (out.output.compare(pos, 2, "c_") == 0) ++c_lines;
  }
  EXPECT_EQ(p_lines + (out.output.rfind("P_0", 0) == 0 ? 1 : 0), 15u);
  EXPECT_EQ(c_lines, 6u);
  EXPECT_NE(out.output.find("P_9 a-factor: derived (a_0 + a_3 - a_4), reference (a_0 - a_3 - a_4)"),
            std::string::npos);
  EXPECT_NE(out.output.find("derived 0 mismatches"), std::string::npos);
}
