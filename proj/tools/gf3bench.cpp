// gf3bench: verify, count, bench and emit-formulas for F_{3^{6m}} products.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gf3/bench.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Strategy checks and timings for F_{3^{6m}} multiplication"};
  app.require_subcommand(1);

  gf3::BenchConfig cfg;
  std::string strategies = "oracle36,kara18,interp-matrix,interp-flat,direct-sextic";
  std::string format = "table";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--m", cfg.m, "Base field degree (odd)")->capture_default_str();
    sub->add_option("--modulus", cfg.modulus, "Modulus trit string, constant term first, length m+1");
    sub->add_option("--strategies", strategies, "Comma-separated strategy list")->capture_default_str();
    sub->add_option("--iters", cfg.iterations, "Random pairs or timed products")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "Seed for operand generation")->capture_default_str();
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}))->capture_default_str();
  };

  auto* verify = app.add_subcommand("verify", "Cross-check strategies (exhaustive at m=1)");
  auto* count = app.add_subcommand("count", "Base-field operations per product");
  auto* bench = app.add_subcommand("bench", "Median time per product and speedup vs kara18");
  auto* emit = app.add_subcommand("emit-formulas", "Print the derived 15-product formulas");
  for (auto* sub : {verify, count, bench, emit}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : gf3::kExitInvalidConfig;
  }

  gf3::CommandResult result;
  try {
    cfg.strategies = gf3::parse_strategy_list(strategies);
    cfg.format = format == "json" ? gf3::OutputFormat::kJson : gf3::OutputFormat::kTable;
    if (verify->parsed()) result = gf3::cmd_verify(cfg);
    if (count->parsed()) result = gf3::cmd_count(cfg);
    if (bench->parsed()) result = gf3::cmd_bench(cfg);
    if (emit->parsed()) result = gf3::cmd_emit_formulas(cfg);
  } catch (const gf3::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == gf3::ErrorCode::kInvalidConfig ? gf3::kExitInvalidConfig : 1;
  }
  std::fputs(result.output.c_str(), result.exit_code == gf3::kExitInvalidConfig ? stderr : stdout);
  return result.exit_code;
}
