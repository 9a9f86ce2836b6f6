#pragma once

// Seeded instance generation and sweeps comparing independence of S_1 with
// independence of S_k.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadforms/independence.hpp"
#include "quadforms/io.hpp"

namespace quadforms {

enum class SampleMode { generic, dependent_constructed, degenerate };

[[nodiscard]] std::string_view to_string(SampleMode mode);
/// "generic", "dependent-constructed", "degenerate".
[[nodiscard]] std::optional<SampleMode> parse_sample_mode(std::string_view name);

struct TrialConfig {
  std::size_t r = 2;
  std::size_t m = 1;
  std::size_t k = 2;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  /// Integer entries are drawn uniformly from [-bound, bound].
  long bound = 10;
  SampleMode mode = SampleMode::generic;
  /// Permits (r, m, k) outside the proven regimes; such sweeps only observe.
  bool allow_exploratory = false;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// Theorem regimes: r = 2 with k = 2, m = 2 with k = 2, r = m = 3 with k = 3.
enum class Regime { rank_two, corank_two, three_three, exploratory };

[[nodiscard]] std::string_view to_string(Regime regime);
[[nodiscard]] Regime regime_of(std::size_t r, std::size_t m, std::size_t k);

/// Throws Error on invalid fields, on an exploratory regime without
/// allow_exploratory, and on dependent-constructed mode outside r = m = 3.
void validate(const TrialConfig& cfg);

/// Deterministic in (cfg.seed, trial_index, r, m, bound, mode).
[[nodiscard]] LinearFormSystem gen_instance(const TrialConfig& cfg, std::uint64_t trial_index);

/// c2 making the pair determinant of rows a, b, (c1, c2, 1) vanish; nullopt
/// when the constraint does not involve c2.
[[nodiscard]] std::optional<Rational> solve_pair_det_for_c2(std::span<const Rational> a,
                                                             std::span<const Rational> b,
                                                             const Rational& c1);

/// r = m = 3 instance with a vanishing pair determinant. Throws Error after
/// 64 degenerate draws.
[[nodiscard]] LinearFormSystem gen_dependent_r3m3(std::uint64_t seed, std::uint64_t trial_index,
                                                  long bound = 10);

struct TrialRecord {
  std::uint64_t index = 0;
  std::string digest;
  Verdict s1 = Verdict::independent;
  Verdict sk = Verdict::independent;
  /// Every dependency witness produced for this trial annihilates its set.
  bool witnesses_valid = true;
  [[nodiscard]] bool ok() const { return s1 == sk && witnesses_valid; }
};

struct TrialFailure {
  TrialRecord record;
  LinearFormSystem instance;
};

struct TrialCounts {
  std::size_t trials = 0;
  std::size_t s1_dependent = 0;
  std::size_t sk_dependent = 0;
  std::size_t agreements = 0;
  std::size_t violations = 0;
};

struct TrialReport {
  TrialConfig config;
  Regime regime = Regime::exploratory;
  /// False for exploratory sweeps, whose disagreements are not failures.
  bool asserted = true;
  std::vector<TrialRecord> records;
  TrialCounts counts;
  std::vector<TrialFailure> failures;

  [[nodiscard]] bool passed() const { return !asserted || failures.empty(); }
};

[[nodiscard]] TrialRecord run_trial(const LinearFormSystem& sys, std::size_t k,
                                    std::uint64_t index);

[[nodiscard]] TrialReport run_theorem_sweep(const TrialConfig& cfg);

[[nodiscard]] json config_to_json(const TrialConfig& cfg);
/// Includes a "generated_at" timestamp unless `timestamp` is empty.
[[nodiscard]] json trial_report_to_json(const TrialReport& report, const std::string& timestamp);
/// Current UTC time, ISO 8601.
[[nodiscard]] std::string utc_timestamp();

}  // namespace quadforms
