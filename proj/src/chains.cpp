#include "chains.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "error.hpp"
#include "matrix_io.hpp"
#include "perspective.hpp"

namespace roe {

namespace {

constexpr Term B(BoundKind k) { return Term{Term::Kind::Bound, k}; }
constexpr Term kS{Term::Kind::Entropy};
constexpr Term kHarmonic{Term::Kind::Harmonic};
constexpr Term kGeometric{Term::Kind::Geometric};
constexpr Term kArithmetic{Term::Kind::Arithmetic};

const std::vector<SuiteDef>& suite_table() {
  using K = BoundKind;
  const Term I = B(K::I), II = B(K::II), III = B(K::III), V = B(K::V);
  const Term Ip = B(K::IPrime), IIp = B(K::IIPrime), IIIp = B(K::IIIPrime), Vp = B(K::VPrime);
  const Term lo = B(K::LowerShift), up = B(K::UpperShift), base = B(K::BaseLower);

  static const std::vector<SuiteDef> table = {
      {"prop-means", Hypothesis::None, false, false, true, {{kHarmonic, kGeometric, kArithmetic}}},
      {"prop-bounds", Hypothesis::None, false, false, false, {{lo, I, up}, {lo, V, up}, {base, lo}}},
      {"thm-main1", Hypothesis::Dominating, false, false, false, {{I, II, kS, III, V}}},
      {"thm-main2", Hypothesis::Dominated, false, false, false, {{V, III, kS, II, I}}},
      {"cor-main-le", Hypothesis::Dominating, false, false, false, {{lo, I, II, kS, III, V, up}}},
      {"cor-main-ge", Hypothesis::Dominated, false, false, false, {{lo, V, III, kS, II, I, up}}},
      {"cor-entropy-le", Hypothesis::Dominating, false, true, false, {{lo, I, II, kS, III, V, up}}},
      {"cor-entropy-ge", Hypothesis::Dominated, false, true, false, {{lo, V, III, kS, II, I, up}}},
      {"thm-primed-le", Hypothesis::Dominating, true, false, false, {{Ip, IIp, kS, IIIp, Vp}}},
      {"thm-primed-ge", Hypothesis::Dominated, true, false, false, {{Vp, IIIp, kS, IIp, Ip}}},
      {"prop-tighten", Hypothesis::ByDelta, true, false, false, {{II, IIp}, {IIIp, III}}},
      {"cor-primed-le", Hypothesis::Dominating, true, false, false, {{I, II, IIp, kS, IIIp, Vp, V}}},
      {"cor-primed-ge", Hypothesis::Dominated, true, false, false, {{V, Vp, IIIp, kS, IIp, II, I}}},
      {"cor-delta-le", Hypothesis::Dominating, true, true, false,
       {{lo, I, Ip, IIp, kS, IIIp, Vp, V, up}}},
      {"cor-delta-ge", Hypothesis::Dominated, true, true, false,
       {{lo, V, Vp, IIIp, kS, IIp, Ip, I, up}}},
  };
  return table;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

std::string validate_params(const SuiteDef& suite, const ChainParams& p) {
  if (!std::isfinite(p.alpha) || !std::isfinite(p.beta) || !std::isfinite(p.delta)) {
    return "parameters must be finite";
  }
  if (suite.uses_lambda) {
    if (!p.lambda || !(*p.lambda >= 0.0 && *p.lambda <= 1.0)) return "lambda must lie in [0, 1]";
    if (p.beta != 1.0) return "weighted means use beta = 1";
  } else if (!(p.alpha >= 0.0)) {
    return "alpha must be >= 0, got " + fmt(p.alpha);
  }
  if (!(p.beta > 0.0)) return "beta must be > 0, got " + fmt(p.beta);
  if (suite.entropy_only && (p.alpha != 0.0 || p.beta != 1.0)) {
    return "suite " + std::string(suite.name) + " requires alpha = 0 and beta = 1";
  }
  if (!suite.uses_delta && p.delta != 1.0) {
    return "suite " + std::string(suite.name) + " does not take delta (must be 1)";
  }
  if (!(p.delta > 0.0)) return "delta must be > 0";
  switch (suite.hypothesis) {
    case Hypothesis::Dominating:
      if (p.delta < 1.0) return "delta must be >= 1, got " + fmt(p.delta);
      break;
    case Hypothesis::Dominated:
      if (p.delta > 1.0) return "delta must be <= 1, got " + fmt(p.delta);
      break;
    default:
      break;
  }
  return {};
}

std::string_view Term::name() const {
  switch (kind) {
    case Kind::Bound: return bound_name(bound);
    case Kind::Entropy: return "S";
    case Kind::Harmonic: return "harmonic";
    case Kind::Geometric: return "geometric";
    case Kind::Arithmetic: return "arithmetic";
  }
  return "?";
}

ScalarFn term_generator(const Term& term, const ChainParams& p) {
  const double lambda = p.lambda.value_or(0.0);
  switch (term.kind) {
    case Term::Kind::Bound: return scalar_generator(term.bound, p.alpha, p.delta);
    case Term::Kind::Entropy: return ScalarFn::power_log(p.alpha);
    case Term::Kind::Harmonic: return ScalarFn{FnKind::MeanHarmonic, 0.0, 1.0, lambda};
    case Term::Kind::Geometric: return ScalarFn{FnKind::MeanGeometric, 0.0, 1.0, lambda};
    case Term::Kind::Arithmetic: return ScalarFn{FnKind::MeanArithmetic, 0.0, 1.0, lambda};
  }
  throw InvalidArgument("unknown term");
}

std::span<const SuiteDef> all_suites() { return suite_table(); }

const SuiteDef& find_suite(std::string_view name) {
  for (const SuiteDef& s : suite_table())
    if (s.name == name) return s;
  throw InvalidArgument("unknown suite '" + std::string(name) + "'");
}

bool is_suite(std::string_view name) {
  return std::any_of(suite_table().begin(), suite_table().end(),
                     [&](const SuiteDef& s) { return s.name == name; });
}

Hypothesis effective_hypothesis(const SuiteDef& suite, double delta) {
  if (suite.hypothesis != Hypothesis::ByDelta) return suite.hypothesis;
  return delta >= 1.0 ? Hypothesis::Dominating : Hypothesis::Dominated;
}

std::vector<std::vector<Term>> effective_chains(const SuiteDef& suite, double delta) {
  std::vector<std::vector<Term>> chains = suite.chains;
  if (suite.hypothesis == Hypothesis::ByDelta && delta < 1.0) {
    for (auto& chain : chains) std::reverse(chain.begin(), chain.end());
  }
  return chains;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::PreconditionFailed: return "precondition_failed";
  }
  return "?";
}

ChainReport chain_check(const SuiteDef& suite, const SymMatrix& a, const SymMatrix& b,
                        const ChainParams& params, double tol, std::uint64_t trial_seed) {
  require_same_dim(a, b, "chain_check");
  ChainReport report;
  report.suite = std::string(suite.name);
  report.trial_seed = trial_seed;
  report.params = params;

  auto precondition_failed = [&](std::string note) {
    report.verdict = Verdict::PreconditionFailed;
    report.note = std::move(note);
    report.inputs.emplace(a, b);
    return report;
  };

  if (std::string err = validate_params(suite, params); !err.empty()) {
    return precondition_failed(std::move(err));
  }

  EigenPair a_eig;
  try {
    a_eig = require_strictly_positive(a, "A");
    require_strictly_positive(b, "B");
  } catch (const DomainError& e) {
    return precondition_failed(e.what());
  }

  const Hypothesis hyp = effective_hypothesis(suite, params.delta);
  if (hyp != Hypothesis::None) {
    const SymMatrix a_pow =
        params.beta == 1.0 ? a : apply_fn(a_eig, ScalarFn::power(params.beta));
    const SymMatrix scaled = params.delta * a_pow;
    const bool dominating = hyp == Hypothesis::Dominating;
    const LoewnerVerdict v = dominating ? loewner_leq(scaled, b, tol) : loewner_leq(b, scaled, tol);
    if (!v.holds) {
      return precondition_failed(std::string("hypothesis ") +
                                 (dominating ? "delta*A^beta <= B" : "B <= delta*A^beta") +
                                 " violated: margin " + fmt(v.margin) + " below -" +
                                 fmt(v.threshold));
    }
  }

  const PerspectiveFrame frame(b, a, ScalarFn::power(params.beta));
  std::map<std::string, SymMatrix, std::less<>> terms;
  auto term_value = [&](const Term& t) -> const SymMatrix& {
    auto it = terms.find(t.name());
    if (it == terms.end()) {
      it = terms.emplace(std::string(t.name()), frame(term_generator(t, params))).first;
    }
    return it->second;
  };

  bool all_hold = true;
  for (const auto& chain : effective_chains(suite, params.delta)) {
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      const SymMatrix& lhs = term_value(chain[k]);
      const SymMatrix& rhs = term_value(chain[k + 1]);
      const LoewnerVerdict v = loewner_leq(lhs, rhs, tol);
      report.links.push_back({std::string(chain[k].name()), std::string(chain[k + 1].name()),
                              v.margin, v.threshold, v.holds});
      all_hold = all_hold && v.holds;
    }
  }
  report.verdict = all_hold ? Verdict::Pass : Verdict::Fail;
  if (!all_hold) report.inputs.emplace(a, b);
  return report;
}

nlohmann::json chain_report_to_json(const ChainReport& report) {
  using nlohmann::json;
  json links = json::array();
  for (const LinkResult& l : report.links) {
    links.push_back(json{{"lhs", l.lhs}, {"rhs", l.rhs}, {"margin", l.margin}});
  }
  json params{{"alpha", report.params.alpha},
              {"beta", report.params.beta},
              {"delta", report.params.delta},
              {"lambda", report.params.lambda ? json(*report.params.lambda) : json(nullptr)}};
  json j{{"suite", report.suite},
         {"trial_seed", report.trial_seed},
         {"params", std::move(params)},
         {"links", std::move(links)},
         {"verdict", verdict_name(report.verdict)}};
  if (!report.note.empty()) j["note"] = report.note;
  if (report.inputs) {
    j["matrices"] = json{{"A", matrix_to_json(report.inputs->first)},
                         {"B", matrix_to_json(report.inputs->second)}};
  }
  return j;
}

}  // namespace roe
