#pragma once

// Driver behind the gf3bench tool: strategy agreement checks, operation
// count audits, timing, and formula export. Commands return their exit code
// and text instead of printing, so tests can call them directly.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "gf3/sextic.hpp"

namespace gf3 {

enum class OutputFormat { kTable, kJson };

struct BenchConfig {
  int m = 97;
  /// Trit string of length m + 1, constant term first. Empty: default modulus.
  std::string modulus;
  std::vector<Strategy> strategies{kAllStrategies.begin(), kAllStrategies.end()};
  std::uint64_t iterations = 1000;
  std::uint64_t seed = 42;
  OutputFormat format = OutputFormat::kTable;

  /// Throws Error(kInvalidConfig) on m even or out of range, empty strategy
  /// list, iterations == 0, a bad modulus string, or direct-sextic with 3 | m.
  void validate() const;
};

/// Parses "kara18,interp-flat"; throws kInvalidConfig.
std::vector<Strategy> parse_strategy_list(std::string_view csv);

/// Validates cfg and builds its field.
std::shared_ptr<const FieldContext> make_context(const BenchConfig& cfg);

struct StrategyRow {
  std::string strategy;
  std::optional<double> ns_per_op_median;
  std::optional<double> ops_per_sec;
  std::uint64_t base_muls = 0;
  std::uint64_t base_adds = 0;
  std::uint64_t expected_base_muls = 0;
  std::optional<double> speedup_vs_kara18_pct;

  friend bool operator==(const StrategyRow&, const StrategyRow&) = default;
};

struct BenchReport {
  int m = 0;
  std::string modulus;
  std::uint64_t seed = 0;
  std::uint64_t iterations = 0;
  std::vector<StrategyRow> rows;
  bool failed = false;

  friend bool operator==(const BenchReport&, const BenchReport&) = default;
};

nlohmann::json report_to_json(const BenchReport& report);
BenchReport report_from_json(const nlohmann::json& j);
std::string render_table(const BenchReport& report);

struct CommandResult {
  int exit_code = 0;
  std::string output;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInvalidConfig = 2;

using Multiplier = std::function<SexticElem(const SexticElem&, const SexticElem&, OpCounter&)>;

struct NamedMultiplier {
  std::string name;
  Multiplier mul;
};

NamedMultiplier named_multiplier(Strategy s);

/// Operand pairs for a run: every pair of the 729 elements when m == 1,
/// otherwise `iterations` pairs drawn from mt19937_64(seed).
std::vector<std::pair<SexticElem, SexticElem>> operand_pairs(const FieldContext& ctx, const BenchConfig& cfg);

struct AgreementResult {
  std::uint64_t pairs_checked = 0;
  /// Empty when all multipliers agree.
  std::string counterexample;
};

/// Compares every multiplier against the first one on each pair and stops
/// at the first disagreement.
AgreementResult check_agreement(const std::vector<NamedMultiplier>& muls,
                                const std::vector<std::pair<SexticElem, SexticElem>>& pairs);

CommandResult cmd_verify(const BenchConfig& cfg);
CommandResult cmd_count(const BenchConfig& cfg);
CommandResult cmd_bench(const BenchConfig& cfg);
CommandResult cmd_emit_formulas(const BenchConfig& cfg);

/// Timing only, for callers that want the numbers rather than text.
BenchReport run_bench(const BenchConfig& cfg);
BenchReport run_count(const BenchConfig& cfg);

}  // namespace gf3
