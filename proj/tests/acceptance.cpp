// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "entropy.hpp"
#include "gen.hpp"
#include "hermite.hpp"
#include "oracles.hpp"
#include "perspective.hpp"
#include "rng.hpp"
#include "roe/roe.h"
#include "runner.hpp"

using namespace roe;

namespace {

constexpr double kAlphas[] = {0.0, 0.5, 1.0, 2.0};
constexpr double kBetas[] = {0.5, 1.0, 2.0};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::ostringstream failures;
  int failure_lines = 0;

  // Records a failed check; the first few are kept for the report line.
  void fail(const std::string& what) {
    pass = false;
    if (failure_lines++ < 3) failures << (failure_lines > 1 ? "; " : "") << what;
  }
  void require(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

GenConfig gen(std::size_t dim, Field field, std::uint64_t seed) {
  GenConfig g;
  g.dim = dim;
  g.field = field;
  g.master_seed = seed;
  return g;
}

// min eigenvalue of (hi - lo) relative to max(1, ||lo||, ||hi||), via Eigen.
double relative_margin(const oracle::MatrixXc& lo, const oracle::MatrixXc& hi) {
  return oracle::min_eig(hi - lo) / std::max({1.0, lo.norm(), hi.norm()});
}

SuiteReport run(const std::string& suite, std::uint64_t trials, std::uint64_t seed, Field field,
                std::optional<double> delta = std::nullopt,
                std::optional<double> lambda = std::nullopt) {
  RunConfig c;
  c.suite = suite;
  c.trials = trials;
  c.seed = seed;
  c.field = field;
  c.delta = delta;
  c.lambda = lambda;
  return run_suite(c);
}

// Zero failures and zero precondition failures; returns the worst relative
// link margin seen.
double expect_clean(Outcome& o, const SuiteReport& r, const std::string& label) {
  if (r.trials.size() != r.config.trials) o.fail(label + ": missing trials");
  if (!r.all_passed()) {
    o.fail(label + ": " + std::to_string(r.failed) + " failed, " +
           std::to_string(r.precondition_failed) + " precondition failures");
  }
  double worst = 0.0;
  for (const LinkSummary& l : r.links) worst = std::min(worst, l.worst_relative_margin);
  return worst;
}

// 1. P_r <= P_q <= P_k for r, q, k the generators of I, S and V, on pairs
// whose inner matrix is >= I (reversed when <= I).
void perspective_monotonicity(Outcome& o) {
  int trials = 0;
  double worst = 0.0;
  for (Field field : {Field::Real, Field::Complex}) {
    for (std::uint64_t t = 0; t < 500; ++t) {
      CounterStream rng(trial_seed(101, t), 0);
      const double alpha = kAlphas[rng.below(4)], beta = kBetas[rng.below(3)];
      const GenConfig g = gen(1 + t % 8, field, 101);
      const SymMatrix a = random_spd(g, t);
      const bool up = t % 2 == 0;
      const SymMatrix b =
          random_partner(a, beta, 1.0, up ? Direction::Dominating : Direction::Dominated, g, t);
      const PerspectiveFrame frame(b, a, ScalarFn::power(beta));
      const oracle::MatrixXc pr = oracle::to_eigen(frame(scalar_generator(BoundKind::I, alpha)));
      const oracle::MatrixXc pq = oracle::to_eigen(frame(ScalarFn::power_log(alpha)));
      const oracle::MatrixXc pk = oracle::to_eigen(frame(scalar_generator(BoundKind::V, alpha)));
      const double m1 = up ? relative_margin(pr, pq) : relative_margin(pq, pr);
      const double m2 = up ? relative_margin(pq, pk) : relative_margin(pk, pq);
      worst = std::min({worst, m1, m2});
      o.require(m1 >= -1e-8 && m2 >= -1e-8, "trial " + std::to_string(t) + " link below -1e-8");
      ++trials;
    }
  }
  o.detail << trials << " trials (real+complex, dims 1-8), worst relative margin " << sci(worst);
}

// 2. thm-main1 / thm-main2, with boundary trials B = A^beta.
void main_sandwich(Outcome& o) {
  double worst = 0.0;
  std::uint64_t boundary = 0, total = 0;
  double worst_boundary = 0.0;
  for (const char* suite : {"thm-main1", "thm-main2"}) {
    for (Field field : {Field::Real, Field::Complex}) {
      const SuiteReport r = run(suite, 500, 202, field);
      worst = std::min(worst, expect_clean(o, r, suite));
      total += r.trials.size();
      boundary += r.boundary_trials;
      const GenConfig g = gen(1, field, 202);
      for (std::uint64_t t = 0; t < r.trials.size(); ++t) {
        if (!is_boundary_trial(g, t)) continue;
        for (const LinkResult& l : r.trials[t].links) {
          const double rel = std::abs(l.margin) / (l.threshold / r.config.tol);
          worst_boundary = std::max(worst_boundary, rel);
          o.require(rel <= 1e-9, std::string(suite) + " boundary trial " + std::to_string(t) +
                                     " margin " + sci(l.margin));
        }
      }
    }
  }
  o.require(boundary * 20 >= total, "fewer than 5% boundary trials");

  // Every term vanishes on B = A^beta.
  double worst_zero = 0.0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    const GenConfig g = gen(1 + t % 8, t % 2 ? Field::Complex : Field::Real, 203);
    const SymMatrix a = random_spd(g, t);
    const double alpha = kAlphas[t % 4], beta = kBetas[t % 3];
    const SymMatrix b = apply_fn(a, ScalarFn::power(beta));
    const double scale = std::max({1.0, a.frobenius_norm(), b.frobenius_norm()});
    for (BoundKind k : {BoundKind::I, BoundKind::II, BoundKind::III, BoundKind::V}) {
      worst_zero = std::max(worst_zero, bound(k, a, b, alpha, beta).frobenius_norm() / scale);
    }
    worst_zero = std::max(
        worst_zero, rel_entropy_alpha_beta(a, b, alpha, beta).frobenius_norm() / scale);
  }
  o.require(worst_zero <= 1e-9, "term at B = A^beta not zero: " + sci(worst_zero));
  o.detail << total << " trials, " << boundary << " boundary (" << (100 * boundary / total)
           << "%), worst margin " << sci(worst) << ", boundary |margin| " << sci(worst_boundary)
           << ", zero terms " << sci(worst_zero);
}

// 3. Seven-term entropy corollaries, plus per-eigenvalue agreement on
// commuting instances.
void entropy_corollaries(Outcome& o) {
  double worst = 0.0;
  std::uint64_t total = 0;
  for (const char* suite : {"cor-entropy-le", "cor-entropy-ge"}) {
    for (Field field : {Field::Real, Field::Complex}) {
      const SuiteReport r = run(suite, 500, 303, field);
      worst = std::min(worst, expect_clean(o, r, suite));
      total += r.trials.size();
    }
  }

  double worst_dev = 0.0;
  for (std::uint64_t t = 0; t < 500; ++t) {
    const bool le = t % 2 == 0;
    CounterStream rng(trial_seed(304, t), 0);
    const std::size_t n = 1 + rng.below(8);
    std::vector<double> av(n), bv(n);
    for (std::size_t i = 0; i < n; ++i) {
      av[i] = rng.log_uniform(0.25, 4.0);
      const double ratio = t % 10 == 0 ? 1.0 : rng.log_uniform(1.0, 16.0);
      bv[i] = le ? av[i] * ratio : av[i] / ratio;
    }
    const SymMatrix a = SymMatrix::diagonal(av), b = SymMatrix::diagonal(bv);
    const SuiteDef& suite = find_suite(le ? "cor-entropy-le" : "cor-entropy-ge");
    const ChainReport rep = chain_check(suite, a, b, {});
    o.require(rep.verdict == Verdict::Pass, std::string(suite.name) + " commuting trial failed");

    auto scalar = [&](const std::string& name, std::size_t i) {
      const oracle::ScalarTerms s{av[i], bv[i], 0.0, 1.0, 1.0};
      if (name == "lower_shift") return s.lower_shift();
      if (name == "upper_shift") return s.upper_shift();
      if (name == "I") return s.I();
      if (name == "II") return s.II();
      if (name == "III") return s.III();
      if (name == "V") return s.V();
      return s.S();
    };
    const PerspectiveFrame frame(b, a, ScalarFn::identity());
    const ChainParams p;
    for (const auto& chain : suite.chains) {
      for (const Term& term : chain) {
        const SymMatrix m = frame(term_generator(term, p));
        for (std::size_t i = 0; i < n; ++i) {
          const double s = scalar(std::string(term.name()), i);
          const double dev = std::abs(m(i, i).real() - s) / std::max(1.0, std::abs(s));
          worst_dev = std::max(worst_dev, dev);
        }
      }
    }
    for (const LinkResult& l : rep.links) {
      double gap = INFINITY;
      for (std::size_t i = 0; i < n; ++i) gap = std::min(gap, scalar(l.rhs, i) - scalar(l.lhs, i));
      o.require(gap >= -1e-12, "scalar chain itself violated");
      const double dev = std::abs(l.margin - gap) / std::max(1.0, l.threshold / 1e-8);
      worst_dev = std::max(worst_dev, dev);
    }
  }
  o.require(worst_dev <= 1e-10, "commuting deviation " + sci(worst_dev));
  o.detail << total << " trials, worst margin " << sci(worst)
           << "; 500 commuting instances, max scalar deviation " << sci(worst_dev);
}

// 4. Delta refinements for delta in {1, 1.5, 3} (reciprocals when reversed),
// and primed = unprimed at delta = 1.
void delta_refinements(Outcome& o) {
  double worst = 0.0;
  std::uint64_t total = 0;
  const double ups[] = {1.0, 1.5, 3.0};
  for (double d : ups) {
    for (const char* suite : {"thm-primed-le", "cor-delta-le", "prop-tighten"}) {
      const SuiteReport r = run(suite, 500, 404, d == 1.5 ? Field::Complex : Field::Real, d);
      worst = std::min(worst, expect_clean(o, r, std::string(suite) + " delta " + sci(d)));
      total += r.trials.size();
    }
    for (const char* suite : {"thm-primed-ge", "cor-delta-ge", "prop-tighten"}) {
      if (d == 1.0 && std::string(suite) == "prop-tighten") continue;
      const SuiteReport r = run(suite, 500, 405, d == 3.0 ? Field::Complex : Field::Real, 1.0 / d);
      worst = std::min(worst, expect_clean(o, r, std::string(suite) + " delta 1/" + sci(d)));
      total += r.trials.size();
    }
  }

  double worst_eq = 0.0;
  const std::pair<BoundKind, BoundKind> pairs[] = {{BoundKind::I, BoundKind::IPrime},
                                                   {BoundKind::II, BoundKind::IIPrime},
                                                   {BoundKind::III, BoundKind::IIIPrime},
                                                   {BoundKind::V, BoundKind::VPrime}};
  for (std::uint64_t t = 0; t < 200; ++t) {
    const GenConfig g = gen(1 + t % 8, t % 2 ? Field::Complex : Field::Real, 406);
    const SymMatrix a = random_spd(g, t, GenStream::First);
    const SymMatrix b = random_spd(g, t, GenStream::Second);
    const double alpha = kAlphas[t % 4], beta = kBetas[t % 3];
    for (auto [plain, primed] : pairs) {
      const SymMatrix x = bound(plain, a, b, alpha, beta);
      const SymMatrix y = bound(primed, a, b, alpha, beta, 1.0);
      const double scale = std::max({1.0, x.frobenius_norm(), y.frobenius_norm()});
      worst_eq = std::max(worst_eq, frobenius_distance(x, y) / scale);
    }
  }
  o.require(worst_eq <= 1e-10, "primed != unprimed at delta = 1: " + sci(worst_eq));
  o.detail << total << " trials over 5 suites, worst margin " << sci(worst)
           << "; delta = 1 collapse " << sci(worst_eq);
}

// 5. Weighted means over the 11-point lambda grid and the scalar lambda = 1/2
// case.
void weighted_means_chain(Outcome& o) {
  double worst = 0.0;
  std::uint64_t total = 0;
  for (int k = 0; k <= 10; ++k) {
    const SuiteReport r =
        run("prop-means", 500, 505 + k, k % 2 ? Field::Complex : Field::Real, std::nullopt, k / 10.0);
    worst = std::min(worst, expect_clean(o, r, "prop-means lambda " + std::to_string(k) + "/10"));
    total += r.trials.size();
  }
  double worst_scalar = 0.0;
  CounterStream rng(506, 0);
  for (int i = 0; i < 1000; ++i) {
    const double a = rng.log_uniform(1e-3, 1e3), b = rng.log_uniform(1e-3, 1e3);
    const WeightedMeans m = weighted_means(SymMatrix::diagonal(std::vector<double>{a}),
                                           SymMatrix::diagonal(std::vector<double>{b}), 0.5);
    const double h = 2 * a * b / (a + b), g = std::sqrt(a * b), ar = (a + b) / 2;
    worst_scalar = std::max({worst_scalar, std::abs(m.harmonic(0, 0).real() - h) / h,
                             std::abs(m.geometric(0, 0).real() - g) / g,
                             std::abs(m.arithmetic(0, 0).real() - ar) / ar});
    o.require(h <= g * (1 + 1e-15) && g <= ar * (1 + 1e-15), "scalar mean ordering");
  }
  o.require(worst_scalar <= 1e-12, "scalar lambda = 1/2 deviation " + sci(worst_scalar));
  o.detail << total << " trials over 11 lambda values, worst margin " << sci(worst)
           << "; scalar deviation " << sci(worst_scalar);
}

// 6. Refined Hermite-Hadamard chain.
void hermite_hadamard(Outcome& o) {
  CounterStream rng(606, 0);
  double worst_closed = 0.0, worst_quad = 0.0;
  int below = 0, above = 0;
  for (int i = 0; i < 1000; ++i) {
    const double alpha = rng.uniform(0.0, 3.0);
    const double x = i % 2 ? rng.log_uniform(1e-2, 1.0) : rng.log_uniform(1.0, 1e2);
    (x < 1.0 ? below : above)++;
    const HHRecord r = hh_record(alpha, x);
    const std::string at = "alpha " + sci(alpha) + " x " + sci(x);
    o.require(hh_ordered(r), "record not ordered at " + at);
    const GridVerdict g = grid_verify(alpha, x, 1001);
    o.require(g.pass, "grid check failed at " + at + ": " + g.failure);
    const double ls = extremizer(x);
    const double scale = hh_scale(alpha, x);
    worst_closed = std::max({worst_closed, std::abs(l_of_lambda(alpha, x, ls) - r.sup_l) / scale,
                             std::abs(L_of_lambda(alpha, x, ls) - r.inf_L) / scale});
    if (std::abs(x - 1.0) > 1e-6) {
      const double ref = oracle::hh_integral_avg(alpha, x);
      worst_quad = std::max(worst_quad, std::abs(r.integral_avg - ref) / std::max(1.0, std::abs(ref)));
    }
  }
  o.require(worst_closed <= 1e-10, "l, L at lambda* vs closed forms " + sci(worst_closed));
  o.require(worst_quad <= 1e-9, "quadrature deviation " + sci(worst_quad));
  const HHRecord ref = hh_record(0.0, 4.0);
  const double expect[] = {-0.6, -5.0 / 9.0, -0.537902, -0.5, -0.375};
  const double got[] = {ref.midpoint, ref.sup_l, ref.integral_avg, ref.inf_L, ref.endpoint_avg};
  double worst_ref = 0.0;
  for (int k = 0; k < 5; ++k) worst_ref = std::max(worst_ref, std::abs(got[k] - expect[k]));
  o.require(worst_ref <= 1e-6, "reference point deviation " + sci(worst_ref));
  o.detail << "1000 (alpha, x): " << below << " with x < 1, " << above
           << " with x > 1; closed forms " << sci(worst_closed) << ", quadrature "
           << sci(worst_quad) << ", reference point " << sci(worst_ref);
}

// 7. ABA = 2 (A o B) o A - A^2 o B on real symmetric pairs.
void jordan_identity(Outcome& o) {
  double worst = 0.0;
  for (std::uint64_t t = 0; t < 1000; ++t) {
    CounterStream rng(trial_seed(707, t), 0);
    const std::size_t n = 1 + rng.below(8);
    const double spread = rng.log_uniform(0.1, 10.0);
    std::vector<double> x(n * n), y(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        x[i * n + j] = x[j * n + i] = spread * rng.normal();
        y[i * n + j] = y[j * n + i] = rng.normal();
      }
    const SymMatrix a = SymMatrix::from_real(n, x), b = SymMatrix::from_real(n, y);
    const double na = a.frobenius_norm(), nb = b.frobenius_norm();
    const double rel = jordan_check(a, b) / (1.0 + na * na * nb);
    worst = std::max(worst, rel);
    o.require(rel <= 1e-10, "trial " + std::to_string(t) + " residual " + sci(rel));
  }
  o.detail << "1000 pairs, worst residual / (1 + |A|^2 |B|) " << sci(worst);
}

// 8. Perspective route vs explicit geometric-mean route.
void dual_route(Outcome& o) {
  double worst = 0.0;
  const double deltas[] = {1.0 / 3.0, 1.0 / 1.5, 1.0, 1.5, 3.0};
  for (BoundKind k : all_bound_kinds()) {
    for (std::uint64_t t = 0; t < 200; ++t) {
      CounterStream rng(trial_seed(808, t), static_cast<std::uint64_t>(k));
      const GenConfig g = gen(1 + rng.below(8), t % 2 ? Field::Complex : Field::Real, 808);
      const SymMatrix a = random_spd(g, t, GenStream::First);
      const SymMatrix b = random_spd(g, t, GenStream::Second);
      const double alpha = kAlphas[rng.below(4)], beta = kBetas[rng.below(3)];
      const double delta = deltas[rng.below(5)];
      const SymMatrix r1 = bound(k, a, b, alpha, beta, delta);
      const SymMatrix r2 = bound_explicit(k, a, b, alpha, beta, delta);
      const double scale = std::max({1.0, a.frobenius_norm(), b.frobenius_norm(),
                                     r1.frobenius_norm(), r2.frobenius_norm()});
      const double rel = frobenius_distance(r1, r2) / scale;
      worst = std::max(worst, rel);
      o.require(rel <= 1e-9, std::string(bound_name(k)) + " trial " + std::to_string(t) + " " + sci(rel));
    }
  }
  o.detail << all_bound_kinds().size() << " kinds x 200 trials, worst relative difference "
           << sci(worst);
}

// 9. Byte-identical reports across runs and thread counts, through the C API
// used by the command-line tool.
void determinism(Outcome& o) {
  auto report = [&](const char* suite, unsigned threads) {
    roe_run_config c = roe_run_config_default();
    c.suite = suite;
    c.trials = 200;
    c.seed = 909;
    c.field = ROE_FIELD_COMPLEX;
    c.threads = threads;
    roe_report* r = nullptr;
    if (roe_run_suite(&c, &r) != ROE_OK) {
      o.fail(std::string(suite) + ": " + roe_last_error());
      return std::string();
    }
    std::string json = roe_report_json(r);
    roe_report_free(r);
    return json;
  };
  std::size_t bytes = 0;
  int suites = 0;
  for (std::size_t i = 0; i < roe_suite_count(); ++i) {
    const char* suite = roe_suite_name(i);
    const std::string first = report(suite, 1);
    const std::string second = report(suite, 1);
    const std::string parallel = report(suite, 4);
    o.require(!first.empty() && first == second, std::string(suite) + ": reruns differ");
    o.require(first == parallel, std::string(suite) + ": 1 vs 4 threads differ");
    bytes += first.size();
    ++suites;
  }
  o.detail << suites << " suites x 200 trials, 3 runs each (1, 1, 4 threads), " << bytes
           << " bytes compared per run set";
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"perspective monotonicity", perspective_monotonicity},
      {"main sandwich and reverse", main_sandwich},
      {"seven-term entropy corollaries", entropy_corollaries},
      {"delta refinements", delta_refinements},
      {"weighted means", weighted_means_chain},
      {"Hermite-Hadamard refinement", hermite_hadamard},
      {"Jordan identity", jordan_identity},
      {"dual-route bound equality", dual_route},
      {"determinism", determinism},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, body] : criteria) {
    ++index;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      body(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d %s: %s (%.1f s)%s%s\n", o.pass ? "PASS" : "FAIL", index, name,
                o.detail.str().c_str(), secs, o.pass ? "" : " -- ", o.failures.str().c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
