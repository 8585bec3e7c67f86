#include "runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

#include "entropy.hpp"
#include "error.hpp"
#include "perspective.hpp"
#include "rng.hpp"

namespace roe {

namespace {

// Stream id for parameter draws; disjoint from the GenStream ids.
constexpr std::uint64_t kParamStream = 100;

constexpr double kDeltaGridBoth[] = {1.0 / 3.0, 1.0 / 1.5, 1.0, 1.5, 3.0};

using nlohmann::json;

json opt_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::string sci(double v, int precision = 3) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(precision) << v;
  return os.str();
}

template <std::size_t N>
double pick(const double (&grid)[N], std::uint64_t draw) {
  return grid[draw % N];
}

std::size_t trial_dim(const std::optional<std::size_t>& dim, std::uint64_t seed,
                      std::uint64_t trial) {
  CounterStream rng(trial_seed(seed, trial), kParamStream + 1);
  const std::uint64_t draw = rng.below(kMaxSampledDim);
  return dim ? *dim : static_cast<std::size_t>(1 + draw);
}

GenConfig gen_config(std::size_t dim, Field field, double lo, double hi, std::uint64_t seed) {
  GenConfig g;
  g.dim = dim;
  g.field = field;
  g.spectrum_lo = lo;
  g.spectrum_hi = hi;
  g.master_seed = seed;
  return g;
}

void check_spectrum(double lo, double hi) {
  gen_config(1, Field::Real, lo, hi, 0).validate();
}

// Runs body(i) for i in [0, n) on `threads` workers. Exceptions are rethrown
// in index order, so the error surfaced does not depend on scheduling.
template <typename Body>
void parallel_for(std::uint64_t n, unsigned threads, Body body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(n, 1)));
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i = next++; i < n; i = next++) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

void summarize(SuiteReport& report) {
  std::map<std::pair<std::string, std::string>, std::size_t> index;
  for (const ChainReport& t : report.trials) {
    switch (t.verdict) {
      case Verdict::Pass: ++report.passed; break;
      case Verdict::Fail: ++report.failed; break;
      case Verdict::PreconditionFailed: ++report.precondition_failed; break;
    }
    for (const LinkResult& l : t.links) {
      auto key = std::make_pair(l.lhs, l.rhs);
      auto it = index.find(key);
      const double scale = l.threshold / report.config.tol;
      const double rel = l.margin / scale;
      if (it == index.end()) {
        index.emplace(key, report.links.size());
        report.links.push_back({l.lhs, l.rhs, l.margin, rel, l.holds ? 0u : 1u});
        continue;
      }
      LinkSummary& s = report.links[it->second];
      s.worst_margin = std::min(s.worst_margin, l.margin);
      s.worst_relative_margin = std::min(s.worst_relative_margin, rel);
      if (!l.holds) ++s.failures;
    }
  }
}

json run_config_json(const RunConfig& c) {
  return json{{"command", "verify"},
              {"suite", c.suite},
              {"trials", c.trials},
              {"tol", c.tol},
              {"dim", c.dim ? json(*c.dim) : json(nullptr)},
              {"field", field_name(c.field)},
              {"spectrum_lo", c.spectrum_lo},
              {"spectrum_hi", c.spectrum_hi},
              {"seed", c.seed},
              {"alpha", opt_json(c.alpha)},
              {"beta", opt_json(c.beta)},
              {"delta", opt_json(c.delta)},
              {"lambda", opt_json(c.lambda)}};
}

// max_ij |X_ij - [i==j] s_i| / max(1, |s_i|, |s_j|)
double diagonal_deviation(const Matrix& x, const std::vector<double>& s) {
  double worst = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < x.dim(); ++j) {
      const double target = i == j ? s[i] : 0.0;
      const double scale = std::max({1.0, std::abs(s[i]), std::abs(s[j])});
      worst = std::max(worst, std::abs(x(i, j) - target) / scale);
    }
  return worst;
}

}  // namespace

void RunConfig::validate() const {
  find_suite(suite);
  if (!(tol > 0.0) || !std::isfinite(tol)) throw InvalidArgument("tol must be a positive real");
  if (dim && (*dim < 1 || *dim > 32)) throw InvalidArgument("dim must lie in 1..32");
  check_spectrum(spectrum_lo, spectrum_hi);
}

ChainParams trial_params(const SuiteDef& suite, const RunConfig& cfg, std::uint64_t trial) {
  // Every draw is taken whether or not it is used, so pinning one parameter
  // leaves the others unchanged.
  CounterStream rng(trial_seed(cfg.seed, trial), kParamStream);
  const std::uint64_t d_alpha = rng.below(4);
  const std::uint64_t d_beta = rng.below(3);
  const std::uint64_t d_delta = rng.below(15);
  const std::uint64_t d_lambda = rng.below(11);

  ChainParams p;
  p.alpha = cfg.alpha.value_or(pick(kAlphaGrid, d_alpha));
  p.beta = cfg.beta.value_or(pick(kBetaGrid, d_beta));
  if (suite.entropy_only || suite.uses_lambda) {
    p.alpha = cfg.alpha.value_or(0.0);
    p.beta = cfg.beta.value_or(1.0);
  }
  if (suite.uses_lambda) p.lambda = cfg.lambda.value_or(static_cast<double>(d_lambda) / 10.0);
  if (!suite.uses_delta) {
    p.delta = cfg.delta.value_or(1.0);
  } else if (cfg.delta) {
    p.delta = *cfg.delta;
  } else {
    switch (suite.hypothesis) {
      case Hypothesis::Dominating: p.delta = pick(kDeltaGridUp, d_delta); break;
      case Hypothesis::Dominated: p.delta = pick(kDeltaGridDown, d_delta); break;
      default: p.delta = pick(kDeltaGridBoth, d_delta); break;
    }
  }
  return p;
}

SuiteReport run_suite(const RunConfig& cfg) {
  cfg.validate();
  const SuiteDef& suite = find_suite(cfg.suite);
  if (std::string err = validate_params(suite, trial_params(suite, cfg, 0)); !err.empty()) {
    throw InvalidArgument("suite " + cfg.suite + ": " + err);
  }

  SuiteReport report;
  report.config = cfg;
  report.trials.resize(cfg.trials);

  parallel_for(cfg.trials, cfg.threads, [&](std::uint64_t trial) {
    const ChainParams p = trial_params(suite, cfg, trial);
    const GenConfig g = gen_config(trial_dim(cfg.dim, cfg.seed, trial), cfg.field,
                                   cfg.spectrum_lo, cfg.spectrum_hi, cfg.seed);
    const SymMatrix a = random_spd(g, trial, GenStream::First);
    const Hypothesis hyp = effective_hypothesis(suite, p.delta);
    const SymMatrix b =
        hyp == Hypothesis::None
            ? random_spd(g, trial, GenStream::Second)
            : random_partner(a, p.beta, p.delta,
                             hyp == Hypothesis::Dominating ? Direction::Dominating
                                                           : Direction::Dominated,
                             g, trial);
    report.trials[trial] = chain_check(suite, a, b, p, cfg.tol, trial_seed(cfg.seed, trial));
  });

  if (suite.hypothesis != Hypothesis::None) {
    const GenConfig g = gen_config(1, cfg.field, cfg.spectrum_lo, cfg.spectrum_hi, cfg.seed);
    for (std::uint64_t t = 0; t < cfg.trials; ++t)
      if (is_boundary_trial(g, t)) ++report.boundary_trials;
  }
  summarize(report);
  return report;
}

SuiteReport check_instance(const std::string& suite_name, const SymMatrix& a, const SymMatrix& b,
                           const ChainParams& params, double tol) {
  const SuiteDef& suite = find_suite(suite_name);
  if (!(tol > 0.0)) throw InvalidArgument("tol must be a positive real");
  SuiteReport report;
  report.config.suite = suite_name;
  report.config.trials = 1;
  report.config.tol = tol;
  report.config.dim = a.dim();
  report.config.field = join(a.field(), b.field());
  report.config.alpha = params.alpha;
  report.config.beta = params.beta;
  report.config.delta = params.delta;
  report.config.lambda = params.lambda;
  report.trials.push_back(chain_check(suite, a, b, params, tol));
  summarize(report);
  return report;
}

json suite_report_to_json(const SuiteReport& r) {
  json links = json::array();
  for (const LinkSummary& l : r.links) {
    links.push_back(json{{"lhs", l.lhs},
                         {"rhs", l.rhs},
                         {"worst_margin", l.worst_margin},
                         {"worst_relative_margin", l.worst_relative_margin},
                         {"failures", l.failures}});
  }
  json summary{{"trials", r.trials.size()},
               {"passed", r.passed},
               {"failed", r.failed},
               {"precondition_failed", r.precondition_failed},
               {"boundary_trials", r.boundary_trials},
               {"links", std::move(links)},
               {"verdict", r.all_passed() ? "pass" : "fail"}};
  if (r.trials.empty()) summary["note"] = "0 trials";
  json trials = json::array();
  for (const ChainReport& t : r.trials) trials.push_back(chain_report_to_json(t));
  return json{{"tool_version", kToolVersion},
              {"config", run_config_json(r.config)},
              {"summary", std::move(summary)},
              {"trials", std::move(trials)}};
}

std::string suite_report_table(const SuiteReport& r) {
  std::ostringstream os;
  os << "suite " << r.config.suite << "  seed " << r.config.seed << "  tol " << sci(r.config.tol, 1)
     << "\n";
  if (r.trials.empty()) {
    os << "0 trials: nothing to check\nverdict: pass\n";
    return os.str();
  }
  os << "trials " << r.trials.size() << "  passed " << r.passed << "  failed " << r.failed
     << "  precondition_failed " << r.precondition_failed << "  boundary " << r.boundary_trials
     << "\n\n";
  os << std::left << std::setw(24) << "link" << std::right << std::setw(14) << "worst margin"
     << std::setw(14) << "relative" << std::setw(10) << "failures" << "\n";
  for (const LinkSummary& l : r.links) {
    os << std::left << std::setw(24) << (l.lhs + " <= " + l.rhs) << std::right << std::setw(14)
       << sci(l.worst_margin) << std::setw(14) << sci(l.worst_relative_margin) << std::setw(10)
       << l.failures << "\n";
  }
  for (std::size_t t = 0; t < r.trials.size(); ++t) {
    const ChainReport& c = r.trials[t];
    if (c.verdict == Verdict::Pass) continue;
    os << "trial " << t << ": " << verdict_name(c.verdict);
    if (!c.note.empty()) os << " (" << c.note << ")";
    os << "\n";
  }
  os << "verdict: " << (r.all_passed() ? "pass" : "fail") << "\n";
  return os.str();
}

void OracleConfig::validate() const {
  if (dim && (*dim < 1 || *dim > 32)) throw InvalidArgument("dim must lie in 1..32");
  check_spectrum(spectrum_lo, spectrum_hi);
  if (!(threshold > 0.0)) throw InvalidArgument("threshold must be positive");
  if (beta && !(*beta > 0.0)) throw InvalidArgument("beta must be > 0");
  if (delta && !(*delta > 0.0)) throw InvalidArgument("delta must be > 0");
  if (lambda && !(*lambda >= 0.0 && *lambda <= 1.0)) throw InvalidArgument("lambda must lie in [0, 1]");
  if (alpha && !std::isfinite(*alpha)) throw InvalidArgument("alpha must be finite");
}

OracleReport oracle_compare(const OracleConfig& cfg) {
  cfg.validate();
  OracleReport report;
  report.config = cfg;
  std::vector<std::string> order;
  std::map<std::string, double> worst;
  auto record = [&](const std::string& expr, const Matrix& x, const std::vector<double>& s) {
    auto [it, inserted] = worst.emplace(expr, 0.0);
    if (inserted) order.push_back(expr);
    it->second = std::max(it->second, diagonal_deviation(x, s));
  };

  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    CounterStream rng(trial_seed(cfg.seed, trial), kParamStream);
    const double alpha = cfg.alpha.value_or(pick(kAlphaGrid, rng.below(4)));
    const double beta = cfg.beta.value_or(pick(kBetaGrid, rng.below(3)));
    const double delta = cfg.delta.value_or(pick(kDeltaGridBoth, rng.below(5)));
    const double lambda = cfg.lambda.value_or(static_cast<double>(rng.below(11)) / 10.0);
    const GenConfig g = gen_config(trial_dim(cfg.dim, cfg.seed, trial), cfg.field,
                                   cfg.spectrum_lo, cfg.spectrum_hi, cfg.seed);
    const auto [A, B] = random_diagonal_pair(g, trial);
    const std::size_t n = A.dim();
    std::vector<double> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = A(i, i).real();
      b[i] = B(i, i).real();
    }
    auto scalar = [&](auto fn) {
      std::vector<double> s(n);
      for (std::size_t i = 0; i < n; ++i) s[i] = fn(a[i], b[i]);
      return s;
    };

    ChainParams p{alpha, beta, delta, lambda};
    const PerspectiveFrame frame(B, A, ScalarFn::power(beta));
    const PerspectiveFrame frame_one(B, A, ScalarFn::identity());
    for (BoundKind k : all_bound_kinds()) {
      const ScalarFn gen = scalar_generator(k, alpha, delta);
      const auto s = scalar([&](double x, double y) {
        const double h = std::pow(x, beta);
        return h * gen(y / h);
      });
      const std::string name(bound_name(k));
      record(name, frame(gen), s);
      record("explicit " + name, bound_explicit(k, A, B, alpha, beta, delta), s);
    }
    for (Term::Kind kind : {Term::Kind::Harmonic, Term::Kind::Geometric, Term::Kind::Arithmetic}) {
      const Term t{kind};
      const ScalarFn gen = term_generator(t, p);
      record("perspective " + std::string(t.name()), frame_one(gen),
             scalar([&](double x, double y) { return x * gen(y / x); }));
    }

    record("S", rel_entropy(A, B), scalar([](double x, double y) { return x * std::log(y / x); }));
    record("S_a", rel_entropy_alpha(A, B, alpha), scalar([&](double x, double y) {
             return x * std::pow(y / x, alpha) * std::log(y / x);
           }));
    record("S_ab", rel_entropy_alpha_beta(A, B, alpha, beta), scalar([&](double x, double y) {
             const double h = std::pow(x, beta);
             return h * std::pow(y / h, alpha) * std::log(y / h);
           }));
    record("geomean", geo_mean(A, B, alpha, beta), scalar([&](double x, double y) {
             return std::pow(x, beta * (1.0 - alpha)) * std::pow(y, alpha);
           }));
    const WeightedMeans m = weighted_means(A, B, lambda);
    record("harmonic", m.harmonic, scalar([&](double x, double y) {
             return 1.0 / ((1.0 - lambda) / x + lambda / y);
           }));
    record("geometric", m.geometric, scalar([&](double x, double y) {
             return std::pow(x, 1.0 - lambda) * std::pow(y, lambda);
           }));
    record("arithmetic", m.arithmetic,
           scalar([&](double x, double y) { return (1.0 - lambda) * x + lambda * y; }));
  }

  for (const std::string& e : order) {
    report.entries.push_back({e, worst[e]});
    report.max_deviation = std::max(report.max_deviation, worst[e]);
  }
  return report;
}

json oracle_report_to_json(const OracleReport& r) {
  const OracleConfig& c = r.config;
  json entries = json::array();
  for (const OracleEntry& e : r.entries)
    entries.push_back(json{{"expr", e.expr}, {"max_deviation", e.max_deviation}});
  return json{{"tool_version", kToolVersion},
              {"config",
               json{{"command", "oracle"},
                    {"trials", c.trials},
                    {"dim", c.dim ? json(*c.dim) : json(nullptr)},
                    {"field", field_name(c.field)},
                    {"spectrum_lo", c.spectrum_lo},
                    {"spectrum_hi", c.spectrum_hi},
                    {"seed", c.seed},
                    {"alpha", opt_json(c.alpha)},
                    {"beta", opt_json(c.beta)},
                    {"delta", opt_json(c.delta)},
                    {"lambda", opt_json(c.lambda)},
                    {"threshold", c.threshold}}},
              {"summary",
               json{{"max_deviation", r.max_deviation},
                    {"verdict", r.passed() ? "pass" : "fail"}}},
              {"entries", std::move(entries)}};
}

std::string oracle_report_table(const OracleReport& r) {
  std::ostringstream os;
  os << "oracle  trials " << r.config.trials << "  seed " << r.config.seed << "  threshold "
     << sci(r.config.threshold, 1) << "\n\n";
  os << std::left << std::setw(26) << "expression" << std::right << std::setw(14)
     << "max deviation" << "\n";
  for (const OracleEntry& e : r.entries)
    os << std::left << std::setw(26) << e.expr << std::right << std::setw(14)
       << sci(e.max_deviation) << "\n";
  os << "verdict: " << (r.passed() ? "pass" : "fail") << "\n";
  return os.str();
}

}  // namespace roe
