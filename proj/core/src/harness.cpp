#include "quadforms/harness.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <exception>
#include <limits>
#include <random>
#include <thread>

#include "quadforms/linalg.hpp"
#include "quadforms/version.hpp"

namespace quadforms {

std::string_view to_string(SampleMode mode) {
  switch (mode) {
    case SampleMode::generic:
      return "generic";
    case SampleMode::dependent_constructed:
      return "dependent-constructed";
    case SampleMode::degenerate:
      return "degenerate";
  }
  return "unknown";
}

std::optional<SampleMode> parse_sample_mode(std::string_view name) {
  for (auto m : {SampleMode::generic, SampleMode::dependent_constructed, SampleMode::degenerate}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::rank_two:
      return "rank-two";
    case Regime::corank_two:
      return "corank-two";
    case Regime::three_three:
      return "three-three";
    case Regime::exploratory:
      return "exploratory";
  }
  return "unknown";
}

Regime regime_of(std::size_t r, std::size_t m, std::size_t k) {
  if (r == 2 && k == 2) return Regime::rank_two;
  if (m == 2 && k == 2) return Regime::corank_two;
  if (r == 3 && m == 3 && k == 3) return Regime::three_three;
  return Regime::exploratory;
}

void validate(const TrialConfig& cfg) {
  if (cfg.r < 2) throw Error("r must be at least 2");
  if (cfg.m < 1) throw Error("m must be at least 1");
  if (cfg.k < 1 || cfg.k > cfg.r + cfg.m) throw Error("k must satisfy 1 <= k <= r + m");
  if (cfg.trials < 1) throw Error("trials must be at least 1");
  if (cfg.bound < 1) throw Error("bound must be at least 1");
  if (cfg.mode == SampleMode::dependent_constructed && (cfg.r != 3 || cfg.m != 3)) {
    throw Error("dependent-constructed sampling needs r = m = 3");
  }
  if (regime_of(cfg.r, cfg.m, cfg.k) == Regime::exploratory && !cfg.allow_exploratory) {
    throw Error("(r, m, k) = (" + std::to_string(cfg.r) + ", " + std::to_string(cfg.m) + ", " +
                std::to_string(cfg.k) + ") is outside the proven regimes; pass the exploratory flag");
  }
}

namespace {

// Integers from mt19937_64 by rejection, so sequences do not depend on the
// standard library's distribution implementation.
class Sampler {
 public:
  Sampler(std::uint64_t seed, std::uint64_t index, std::uint32_t salt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                      salt};
    gen_.seed(seq);
  }

  long uniform(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t u;
    do {
      u = gen_();
    } while (u >= limit);
    return lo + static_cast<long>(u % span);
  }

  long nonzero(long bound) {
    const long v = uniform(-bound, bound - 1);
    return v >= 0 ? v + 1 : v;
  }

 private:
  std::mt19937_64 gen_;
};

std::uint32_t mode_salt(SampleMode mode) { return static_cast<std::uint32_t>(mode) + 1; }

RationalMatrix random_matrix(Sampler& s, std::size_t rows, std::size_t cols, long bound) {
  RationalMatrix a(rows, cols, Rational(0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = Rational(s.uniform(-bound, bound));
  }
  return a;
}

void make_single_variable(Sampler& s, RationalMatrix& a, std::size_t row, long bound) {
  const auto j = static_cast<std::size_t>(s.uniform(0, static_cast<long>(a.cols()) - 1));
  for (std::size_t t = 0; t < a.cols(); ++t) a(row, t) = Rational(0);
  a(row, j) = Rational(s.nonzero(bound));
}

RationalMatrix degenerate_matrix(Sampler& s, const TrialConfig& cfg, std::uint64_t index) {
  RationalMatrix a = random_matrix(s, cfg.m, cfg.r, cfg.bound);
  const auto row = static_cast<std::size_t>(s.uniform(0, static_cast<long>(cfg.m) - 1));
  switch (index % 4) {
    case 0:
      for (std::size_t j = 0; j < cfg.r; ++j) a(row, j) = Rational(0);
      break;
    case 1:
      if (cfg.m >= 2) {
        for (std::size_t j = 0; j < cfg.r; ++j) a(1, j) = a(0, j);
      } else {
        make_single_variable(s, a, 0, cfg.bound);
      }
      break;
    case 2: {
      const auto mm = static_cast<std::size_t>(s.uniform(0, static_cast<long>(cfg.r) - 2));
      const auto nn = static_cast<std::size_t>(
          s.uniform(static_cast<long>(mm) + 1, static_cast<long>(cfg.r) - 1));
      for (std::size_t i = 0; i < cfg.m; ++i) {
        for (std::size_t j = 0; j < cfg.r; ++j) {
          a(i, j) = (j == mm || j == nn) ? Rational(s.nonzero(cfg.bound)) : Rational(0);
        }
      }
      break;
    }
    default:
      make_single_variable(s, a, row, cfg.bound);
      break;
  }
  return a;
}

Rational det_columns(const RationalVector& x, const RationalVector& y, const RationalVector& z) {
  RationalMatrix m(3, 3, Rational(0));
  for (std::size_t i = 0; i < 3; ++i) {
    m(i, 0) = x[i];
    m(i, 1) = y[i];
    m(i, 2) = z[i];
  }
  return det(m);
}

RationalVector pair_column(std::span<const Rational> f) {
  return {f[0] * f[1], f[0] * f[2], f[1] * f[2]};
}

}  // namespace

std::optional<Rational> solve_pair_det_for_c2(std::span<const Rational> a,
                                              std::span<const Rational> b, const Rational& c1) {
  if (a.size() != 3 || b.size() != 3) throw Error("rows must have three entries");
  // With c3 = 1 the c column of the pair matrix is c2 * (c1, 0, 1) + (0, c1, 0).
  const RationalVector pa = pair_column(a);
  const RationalVector pb = pair_column(b);
  const Rational slope = det_columns(pa, pb, {c1, Rational(0), Rational(1)});
  if (slope.is_zero()) return std::nullopt;
  const Rational offset = det_columns(pa, pb, {Rational(0), c1, Rational(0)});
  return -offset / slope;
}

LinearFormSystem gen_dependent_r3m3(std::uint64_t seed, std::uint64_t trial_index, long bound) {
  constexpr std::uint32_t kRetries = 64;
  for (std::uint32_t attempt = 0; attempt < kRetries; ++attempt) {
    Sampler s(seed, trial_index, 0x100 + attempt);
    RationalMatrix a = random_matrix(s, 3, 3, bound);
    a(2, 0) = Rational(s.uniform(-bound, bound));
    a(2, 2) = Rational(1);
    const auto c2 = solve_pair_det_for_c2(a.row(0), a.row(1), a(2, 0));
    if (!c2) continue;
    a(2, 1) = *c2;
    return LinearFormSystem(3, 3, std::move(a));
  }
  throw Error("no non-degenerate draw after 64 attempts");
}

LinearFormSystem gen_instance(const TrialConfig& cfg, std::uint64_t trial_index) {
  if (cfg.mode == SampleMode::dependent_constructed) {
    if (cfg.r != 3 || cfg.m != 3) throw Error("dependent-constructed sampling needs r = m = 3");
    return gen_dependent_r3m3(cfg.seed, trial_index, cfg.bound);
  }
  Sampler s(cfg.seed, trial_index, mode_salt(cfg.mode));
  if (cfg.mode == SampleMode::degenerate) {
    return LinearFormSystem(cfg.r, cfg.m, degenerate_matrix(s, cfg, trial_index));
  }
  return LinearFormSystem(cfg.r, cfg.m, random_matrix(s, cfg.m, cfg.r, cfg.bound));
}

TrialRecord run_trial(const LinearFormSystem& sys, std::size_t k, std::uint64_t index) {
  TrialRecord rec;
  rec.index = index;
  rec.digest = instance_digest(sys);
  const std::vector<Polynomial> s1 = squares(sys);
  const IndependenceReport r1 = s1_independent(sys);
  const std::vector<Polynomial> products = k_products(s1, k);
  const IndependenceReport rk = generic_independent(products);
  rec.s1 = r1.verdict;
  rec.sk = rk.verdict;
  if (r1.witness) rec.witnesses_valid = rec.witnesses_valid && witness_annihilates(s1, *r1.witness);
  if (rk.witness) {
    rec.witnesses_valid = rec.witnesses_valid && witness_annihilates(products, *rk.witness);
  }
  return rec;
}

TrialReport run_theorem_sweep(const TrialConfig& cfg) {
  validate(cfg);
  TrialReport report;
  report.config = cfg;
  report.regime = regime_of(cfg.r, cfg.m, cfg.k);
  report.asserted = report.regime != Regime::exploratory;
  report.records.resize(cfg.trials);

  unsigned threads = cfg.threads ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, cfg.trials));
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](unsigned t) {
    try {
      for (std::size_t i = t; i < cfg.trials; i += threads) {
        report.records[i] = run_trial(gen_instance(cfg, i), cfg.k, i);
      }
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  report.counts.trials = cfg.trials;
  for (const auto& rec : report.records) {
    report.counts.s1_dependent += rec.s1 == Verdict::dependent;
    report.counts.sk_dependent += rec.sk == Verdict::dependent;
    if (rec.ok()) {
      ++report.counts.agreements;
    } else {
      ++report.counts.violations;
      report.failures.push_back({rec, gen_instance(cfg, rec.index)});
    }
  }
  return report;
}

json config_to_json(const TrialConfig& cfg) {
  json j;
  j["r"] = cfg.r;
  j["m"] = cfg.m;
  j["k"] = cfg.k;
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  j["bound"] = cfg.bound;
  j["mode"] = std::string(to_string(cfg.mode));
  j["allow_exploratory"] = cfg.allow_exploratory;
  j["sampling"] = cfg.mode == SampleMode::dependent_constructed
                      ? "rows a, b and c1 uniform integers in [-bound, bound], c3 = 1, c2 solved"
                      : "uniform integers in [-bound, bound]";
  return j;
}

namespace {

json record_to_json(const TrialRecord& rec) {
  json j;
  j["index"] = rec.index;
  j["digest"] = rec.digest;
  j["s1"] = std::string(to_string(rec.s1));
  j["sk"] = std::string(to_string(rec.sk));
  j["ok"] = rec.ok();
  return j;
}

}  // namespace

json trial_report_to_json(const TrialReport& report, const std::string& timestamp) {
  json j;
  j["schema"] = kSchemaVersion;
  j["version"] = std::string(kVersion);
  if (!timestamp.empty()) j["generated_at"] = timestamp;
  j["config"] = config_to_json(report.config);
  j["regime"] = std::string(to_string(report.regime));
  j["asserted"] = report.asserted;
  j["passed"] = report.passed();
  json counts;
  counts["trials"] = report.counts.trials;
  counts["s1_dependent"] = report.counts.s1_dependent;
  counts["sk_dependent"] = report.counts.sk_dependent;
  counts["agreements"] = report.counts.agreements;
  counts["violations"] = report.counts.violations;
  j["counts"] = std::move(counts);
  json records = json::array();
  for (const auto& rec : report.records) records.push_back(record_to_json(rec));
  j["records"] = std::move(records);
  json failures = json::array();
  for (const auto& f : report.failures) {
    json item = record_to_json(f.record);
    item["witnesses_valid"] = f.record.witnesses_valid;
    item["instance"] = instance_to_json(f.instance);
    failures.push_back(std::move(item));
  }
  j["failures"] = std::move(failures);
  return j;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace quadforms
