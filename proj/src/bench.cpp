#include "gf3/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "gf3/direct_sextic.hpp"
#include "gf3/formulas.hpp"

namespace gf3 {

namespace {

constexpr std::uint64_t kWarmupProducts = 100;
constexpr std::uint64_t kMaxBatches = 31;
constexpr std::size_t kFormulaCheckPairs = 200;

using Clock = std::chrono::steady_clock;
using Pairs = std::vector<std::pair<SexticElem, SexticElem>>;

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::kInvalidConfig, what); }

bool contains(const std::vector<Strategy>& v, Strategy s) { return std::find(v.begin(), v.end(), s) != v.end(); }

Pairs random_pairs(const FieldContext& ctx, std::uint64_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Pairs out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    auto a = sextic_random(ctx, rng);
    auto b = sextic_random(ctx, rng);
    out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

std::string header_line(const std::string& cmd, const BenchConfig& cfg, const FieldContext& ctx) {
  std::string names;
  for (auto s : cfg.strategies) names += (names.empty() ? "" : ",") + std::string(to_string(s));
  return cmd + " m=" + std::to_string(cfg.m) + " modulus=" + ctx.modulus_string() +
         " seed=" + std::to_string(cfg.seed) + " strategies=" + names + "\n";
}

std::string fmt_double(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  return buf;
}

std::string pad(const std::string& s, std::size_t width, bool right = false) {
  if (s.size() >= width) return s;
  const std::string fill(width - s.size(), ' ');
  return right ? fill + s : s + fill;
}

template <class F>
CommandResult guarded(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInvalidConfig) throw;
    return {kExitInvalidConfig, std::string("invalid config: ") + e.what() + "\n"};
  }
}

std::uint64_t sink_word(const SexticElem& x) { return x.a0.v.coeffs().lo()[0] ^ x.a2.u.coeffs().hi()[0]; }
std::uint64_t sink_word(const DirectSexticElem& x) { return x.c[0].coeffs().lo()[0] ^ x.c[5].coeffs().hi()[0]; }

// Runs products [lo, hi) of one strategy; returns a value that depends on
// every result so the loop cannot be elided.
using TimedLoop = std::function<std::uint64_t(std::size_t lo, std::size_t hi)>;

TimedLoop timed_loop(Strategy s, const Pairs& pairs, const std::vector<std::pair<DirectSexticElem, DirectSexticElem>>& direct) {
  if (s == Strategy::kDirectSextic) {
    return [&direct](std::size_t lo, std::size_t hi) {
      OpCounter c;
      std::uint64_t acc = 0;
      for (std::size_t i = lo; i < hi; ++i) acc ^= sink_word(mul_direct(direct[i].first, direct[i].second, c));
      return acc;
    };
  }
  return [&pairs, s](std::size_t lo, std::size_t hi) {
    OpCounter c;
    std::uint64_t acc = 0;
    for (std::size_t i = lo; i < hi; ++i) acc ^= sink_word(mul(pairs[i].first, pairs[i].second, s, c));
    return acc;
  };
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

}  // namespace

void BenchConfig::validate() const {
  if (m < 1 || m > kMaxDegree) invalid("m must be in [1, " + std::to_string(kMaxDegree) + "]");
  if (m % 2 == 0) invalid("m must be odd");
  if (strategies.empty()) invalid("no strategies selected");
  if (iterations == 0) invalid("iterations must be at least 1");
  if (!modulus.empty()) {
    if (modulus.size() != static_cast<std::size_t>(m) + 1) {
      invalid("modulus must have m + 1 = " + std::to_string(m + 1) + " trits");
    }
    if (modulus.find_first_not_of("012") != std::string::npos) invalid("modulus may only contain 0, 1, 2");
  }
  if (m % 3 == 0 && contains(strategies, Strategy::kDirectSextic)) {
    invalid("direct-sextic needs 3 not dividing m");
  }
}

std::vector<Strategy> parse_strategy_list(std::string_view csv) {
  std::vector<Strategy> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = std::min(csv.find(',', start), csv.size());
    const auto s = parse_strategy(csv.substr(start, comma - start));
    if (!contains(out, s)) out.push_back(s);
    start = comma + 1;
  }
  if (out.empty()) invalid("no strategies selected");
  return out;
}

std::shared_ptr<const FieldContext> make_context(const BenchConfig& cfg) {
  cfg.validate();
  if (cfg.modulus.empty()) return default_context(cfg.m);
  try {
    return FieldContext::create(TritVector::parse(cfg.modulus));
  } catch (const Error& e) {
    invalid(std::string("modulus rejected: ") + e.what());
  }
}

NamedMultiplier named_multiplier(Strategy s) {
  return {std::string(to_string(s)),
          [s](const SexticElem& a, const SexticElem& b, OpCounter& c) { return mul(a, b, s, c); }};
}

Pairs operand_pairs(const FieldContext& ctx, const BenchConfig& cfg) {
  if (ctx.degree() != 1) return random_pairs(ctx, cfg.iterations, cfg.seed);
  std::vector<SexticElem> all;
  all.reserve(729);
  for (int index = 0; index < 729; ++index) {
    std::array<Gf3mElem, 6> c;
    int rest = index;
    for (auto& x : c) {
      x = ctx.constant(static_cast<std::uint8_t>(rest % 3));
      rest /= 3;
    }
    all.push_back(SexticElem::from_coords(c));
  }
  Pairs out;
  out.reserve(all.size() * all.size());
  for (const auto& a : all) {
    for (const auto& b : all) out.emplace_back(a, b);
  }
  return out;
}

AgreementResult check_agreement(const std::vector<NamedMultiplier>& muls, const Pairs& pairs) {
  AgreementResult result;
  if (muls.empty()) return result;
  OpCounter counter;
  for (const auto& [a, b] : pairs) {
    const SexticElem ref = muls[0].mul(a, b, counter);
    for (std::size_t k = 1; k < muls.size(); ++k) {
      const SexticElem got = muls[k].mul(a, b, counter);
      if (got == ref) continue;
      std::ostringstream os;
      os << "a = " << a.to_string() << "\n"
         << "b = " << b.to_string() << "\n"
         << muls[0].name << " = " << ref.to_string() << "\n"
         << muls[k].name << " = " << got.to_string() << "\n";
      result.counterexample = os.str();
      return result;
    }
    ++result.pairs_checked;
  }
  return result;
}

nlohmann::json report_to_json(const BenchReport& report) {
  auto opt = [](const std::optional<double>& x) { return x ? nlohmann::json(*x) : nlohmann::json(nullptr); };
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"strategy", r.strategy},
                    {"ns_per_op_median", opt(r.ns_per_op_median)},
                    {"ops_per_sec", opt(r.ops_per_sec)},
                    {"base_muls", r.base_muls},
                    {"base_adds", r.base_adds},
                    {"expected_base_muls", r.expected_base_muls},
                    {"speedup_vs_kara18_pct", opt(r.speedup_vs_kara18_pct)}});
  }
  return {{"m", report.m},
          {"modulus", report.modulus},
          {"seed", report.seed},
          {"iterations", report.iterations},
          {"failed", report.failed},
          {"results", rows}};
}

BenchReport report_from_json(const nlohmann::json& j) {
  auto opt = [](const nlohmann::json& x) {
    return x.is_null() ? std::optional<double>{} : std::optional<double>{x.get<double>()};
  };
  try {
    BenchReport report;
    report.m = j.at("m").get<int>();
    report.modulus = j.at("modulus").get<std::string>();
    report.seed = j.at("seed").get<std::uint64_t>();
    report.iterations = j.at("iterations").get<std::uint64_t>();
    report.failed = j.at("failed").get<bool>();
    for (const auto& r : j.at("results")) {
      StrategyRow row;
      row.strategy = r.at("strategy").get<std::string>();
      row.ns_per_op_median = opt(r.at("ns_per_op_median"));
      row.ops_per_sec = opt(r.at("ops_per_sec"));
      row.base_muls = r.at("base_muls").get<std::uint64_t>();
      row.base_adds = r.at("base_adds").get<std::uint64_t>();
      row.expected_base_muls = r.at("expected_base_muls").get<std::uint64_t>();
      row.speedup_vs_kara18_pct = opt(r.at("speedup_vs_kara18_pct"));
      report.rows.push_back(std::move(row));
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("bad report: ") + e.what());
  }
}

std::string render_table(const BenchReport& report) {
  std::ostringstream os;
  os << "m=" << report.m << " modulus=" << report.modulus << " seed=" << report.seed
     << " iterations=" << report.iterations << "\n";
  os << pad("strategy", 15) << pad("base_muls", 11, true) << pad("expected", 10, true) << pad("base_adds", 11, true)
     << pad("ns/op", 13, true) << pad("ops/sec", 13, true) << pad("vs kara18", 11, true) << "\n";
  bool direct = false;
  for (const auto& r : report.rows) {
    direct = direct || r.strategy == to_string(Strategy::kDirectSextic);
    const std::string name = r.strategy + (r.strategy == to_string(Strategy::kDirectSextic) ? "*" : "");
    os << pad(name, 15) << pad(std::to_string(r.base_muls), 11, true)
       << pad(std::to_string(r.expected_base_muls), 10, true) << pad(std::to_string(r.base_adds), 11, true)
       << pad(r.ns_per_op_median ? fmt_double(*r.ns_per_op_median, 1) : "-", 13, true)
       << pad(r.ops_per_sec ? fmt_double(*r.ops_per_sec, 0) : "-", 13, true)
       << pad(r.speedup_vs_kara18_pct ? fmt_double(*r.speedup_vs_kara18_pct, 2) + "%" : "-", 11, true);
    if (r.base_muls != r.expected_base_muls) os << "  FAILED";
    os << "\n";
  }
  if (direct) {
    os << "* generic 6-term Karatsuba in F_{3^m}[y]/(y^6+y-1), timed on pre-converted operands;"
          " not Montgomery's original formulas\n";
  }
  if (report.failed) os << "FAILED: base multiplication counts differ from the expected values\n";
  return os.str();
}

BenchReport run_count(const BenchConfig& cfg) {
  const auto ctx = make_context(cfg);
  const auto pair = random_pairs(*ctx, 1, cfg.seed).front();
  BenchReport report{cfg.m, ctx->modulus_string(), cfg.seed, cfg.iterations, {}, false};
  for (auto s : cfg.strategies) {
    OpCounter c;
    mul(pair.first, pair.second, s, c);
    StrategyRow row;
    row.strategy = std::string(to_string(s));
    row.base_muls = c.base_muls;
    row.base_adds = c.base_adds;
    row.expected_base_muls = expected_base_muls(s);
    report.failed = report.failed || row.base_muls != row.expected_base_muls;
    report.rows.push_back(std::move(row));
  }
  return report;
}

BenchReport run_bench(const BenchConfig& cfg) {
  BenchReport report = run_count(cfg);
  const auto ctx = make_context(cfg);
  const Pairs pairs = random_pairs(*ctx, cfg.iterations, cfg.seed);
  std::vector<std::pair<DirectSexticElem, DirectSexticElem>> direct;
  if (contains(cfg.strategies, Strategy::kDirectSextic)) {
    direct.reserve(pairs.size());
    for (const auto& [a, b] : pairs) direct.emplace_back(to_direct(a), to_direct(b));
  }

  std::vector<TimedLoop> loops;
  for (auto s : cfg.strategies) loops.push_back(timed_loop(s, pairs, direct));

  volatile std::uint64_t sink = 0;
  for (auto& loop : loops) {
    for (std::uint64_t done = 0; done < kWarmupProducts; done += pairs.size()) {
      sink = sink ^ loop(0, std::min<std::size_t>(pairs.size(), kWarmupProducts - done));
    }
  }

  // Interleave strategies batch by batch and rotate the starting strategy so
  // slow drifts in machine state hit all of them alike.
  const std::uint64_t batches = std::min<std::uint64_t>(cfg.iterations, kMaxBatches);
  std::vector<std::vector<double>> samples(loops.size());
  for (std::uint64_t b = 0; b < batches; ++b) {
    const std::size_t lo = pairs.size() * b / batches;
    const std::size_t hi = pairs.size() * (b + 1) / batches;
    for (std::size_t k = 0; k < loops.size(); ++k) {
      const std::size_t idx = (k + b) % loops.size();
      const auto t0 = Clock::now();
      sink = sink ^ loops[idx](lo, hi);
      const auto t1 = Clock::now();
      samples[idx].push_back(std::chrono::duration<double, std::nano>(t1 - t0).count() / static_cast<double>(hi - lo));
    }
  }

  std::optional<double> kara;
  for (std::size_t k = 0; k < loops.size(); ++k) {
    const double ns = median(samples[k]);
    report.rows[k].ns_per_op_median = ns;
    report.rows[k].ops_per_sec = ns > 0 ? 1e9 / ns : 0.0;
    if (cfg.strategies[k] == Strategy::kKara18) kara = ns;
  }
  if (kara && *kara > 0) {
    for (auto& row : report.rows) row.speedup_vs_kara18_pct = (*kara - *row.ns_per_op_median) / *kara * 100.0;
  }
  return report;
}

CommandResult cmd_verify(const BenchConfig& cfg) {
  return guarded([&]() -> CommandResult {
    const auto ctx = make_context(cfg);
    std::vector<NamedMultiplier> muls;
    for (auto s : cfg.strategies) muls.push_back(named_multiplier(s));
    const auto pairs = operand_pairs(*ctx, cfg);
    std::string out = header_line("verify", cfg, *ctx);
    if (muls.size() == 1) out += "warning: single strategy, agreement is trivial\n";
    const auto result = check_agreement(muls, pairs);
    const std::string mode = ctx->degree() == 1 ? "exhaustive" : "random";
    if (!result.counterexample.empty()) {
      out += "FAIL after " + std::to_string(result.pairs_checked) + " agreeing pairs (" + mode + ")\n";
      out += result.counterexample;
      return {kExitMismatch, out};
    }
    out += "PASS: " + std::to_string(result.pairs_checked) + " pairs (" + mode + "), " +
           std::to_string(muls.size()) + " strategies agree\n";
    return {kExitOk, out};
  });
}

CommandResult cmd_count(const BenchConfig& cfg) {
  return guarded([&]() -> CommandResult {
    const BenchReport report = run_count(cfg);
    const std::string text =
        cfg.format == OutputFormat::kJson ? report_to_json(report).dump(2) + "\n" : render_table(report);
    return {report.failed ? kExitMismatch : kExitOk, text};
  });
}

CommandResult cmd_bench(const BenchConfig& cfg) {
  return guarded([&]() -> CommandResult {
    const BenchReport report = run_bench(cfg);
    const std::string text =
        cfg.format == OutputFormat::kJson ? report_to_json(report).dump(2) + "\n" : render_table(report);
    return {report.failed ? kExitMismatch : kExitOk, text};
  });
}

CommandResult cmd_emit_formulas(const BenchConfig& cfg) {
  return guarded([&]() -> CommandResult {
    const auto derived = derive_flat_formulas();
    const auto reference = reference_flat_formulas();
    const auto diffs = compare_formulas(derived, reference);

    const auto ctx = make_context(cfg);
    const Pairs pairs = random_pairs(*ctx, kFormulaCheckPairs, cfg.seed);
    std::size_t derived_bad = 0;
    std::size_t reference_bad = 0;
    OpCounter c;
    for (const auto& [a, b] : pairs) {
      const SexticElem want = mul_kara18(a, b, c);
      derived_bad += mul_flat_table(derived, a, b, c) != want;
      reference_bad += mul_flat_table(reference, a, b, c) != want;
    }

    if (cfg.format == OutputFormat::kJson) {
      nlohmann::json j;
      for (std::size_t i = 0; i < kFlatProducts; ++i) j["products"].push_back(format_product(i, derived.products[i]));
      for (std::size_t i = 0; i < kFlatOutputs; ++i) j["outputs"].push_back(format_output(i, derived.outputs[i]));
      j["differences"] = nlohmann::json::array();
      for (const auto& d : diffs) {
        j["differences"].push_back({{"item", d.item}, {"derived", d.derived}, {"reference", d.reference}});
      }
      j["check"] = {{"m", cfg.m}, {"pairs", pairs.size()}, {"derived_mismatches", derived_bad},
                    {"reference_mismatches", reference_bad}};
      return {derived_bad == 0 ? kExitOk : kExitMismatch, j.dump(2) + "\n"};
    }

    std::ostringstream os;
    for (std::size_t i = 0; i < kFlatProducts; ++i) os << format_product(i, derived.products[i]) << "\n";
    os << "\n";
    for (std::size_t i = 0; i < kFlatOutputs; ++i) os << format_output(i, derived.outputs[i]) << "\n";
    os << "\ndifferences from the reference listing (docs/flat-formulas.md):\n";
    if (diffs.empty()) os << "  none\n";
    for (const auto& d : diffs) {
      os << "  " << d.item << ": derived " << d.derived << ", reference " << d.reference << "\n";
    }
    os << "\nagainst kara18 on " << pairs.size() << " random pairs at m=" << cfg.m << ": derived " << derived_bad
       << " mismatches, reference " << reference_bad << " mismatches\n";
    return {derived_bad == 0 ? kExitOk : kExitMismatch, os.str()};
  });
}

}  // namespace gf3
