#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chains.hpp"
#include "gen.hpp"
#include "json.hpp"

namespace roe {

inline constexpr const char* kToolVersion = "1.0.0";

// Parameter grids sampled per trial when a parameter is not pinned.
inline constexpr double kAlphaGrid[] = {0.0, 0.5, 1.0, 2.0};
inline constexpr double kBetaGrid[] = {0.5, 1.0, 2.0};
inline constexpr double kDeltaGridUp[] = {1.0, 1.5, 3.0};
inline constexpr double kDeltaGridDown[] = {1.0, 1.0 / 1.5, 1.0 / 3.0};
inline constexpr std::size_t kMaxSampledDim = 8;

struct RunConfig {
  std::string suite;
  std::uint64_t trials = 100;
  double tol = 1e-8;
  std::optional<std::size_t> dim;  // unset: sampled from 1..8 per trial
  Field field = Field::Real;
  double spectrum_lo = 0.25;
  double spectrum_hi = 4.0;
  std::uint64_t seed = 0;
  std::optional<double> alpha, beta, delta, lambda;
  unsigned threads = 0;  // 0: hardware concurrency; never affects results

  void validate() const;  // throws InvalidArgument
};

struct LinkSummary {
  std::string lhs;
  std::string rhs;
  double worst_margin = 0.0;           // most negative raw margin
  double worst_relative_margin = 0.0;  // most negative margin / scale
  std::uint64_t failures = 0;
};

struct SuiteReport {
  RunConfig config;
  std::vector<ChainReport> trials;  // indexed by trial
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t precondition_failed = 0;
  std::uint64_t boundary_trials = 0;
  std::vector<LinkSummary> links;

  bool all_passed() const { return failed == 0 && precondition_failed == 0; }
};

// The parameters of trial `trial` under `cfg` (pinned values, else sampled).
ChainParams trial_params(const SuiteDef& suite, const RunConfig& cfg, std::uint64_t trial);

// Runs cfg.trials hypothesis-satisfying instances through chain_check.
// Trials may run on several threads; every trial depends only on
// (seed, trial index), so the report is independent of cfg.threads.
SuiteReport run_suite(const RunConfig& cfg);

// Top-level {tool_version, config, summary, trials}. cfg.threads is omitted
// so reports are byte-identical across thread counts.
nlohmann::json suite_report_to_json(const SuiteReport& report);
std::string suite_report_table(const SuiteReport& report);

// Single user-supplied instance: a one-trial report around chain_check.
SuiteReport check_instance(const std::string& suite, const SymMatrix& a, const SymMatrix& b,
                           const ChainParams& params, double tol);

struct OracleConfig {
  std::uint64_t trials = 100;
  std::optional<std::size_t> dim;
  Field field = Field::Real;
  double spectrum_lo = 0.25;
  double spectrum_hi = 4.0;
  std::uint64_t seed = 0;
  std::optional<double> alpha, beta, delta, lambda;
  double threshold = 1e-10;

  void validate() const;
};

struct OracleEntry {
  std::string expr;
  double max_deviation = 0.0;
};

struct OracleReport {
  OracleConfig config;
  std::vector<OracleEntry> entries;
  double max_deviation = 0.0;

  bool passed() const { return max_deviation <= config.threshold; }
};

// Evaluates every operator expression on simultaneously diagonal pairs through
// the matrix path and through the scalar closed forms. Deviation of a matrix X
// from scalar values s_i is max_ij |X_ij - [i==j] s_i| / max(1, |s_i|).
OracleReport oracle_compare(const OracleConfig& cfg);

nlohmann::json oracle_report_to_json(const OracleReport& report);
std::string oracle_report_table(const OracleReport& report);

}  // namespace roe
