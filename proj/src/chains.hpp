#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bounds.hpp"
#include "json.hpp"

namespace roe {

// One operator expression in an inequality chain. Every term is a
// perspective (h(t) = t^beta, at (B, A)) of a scalar function, so all terms of
// one trial are evaluated from a single shared inner matrix.
struct Term {
  enum class Kind { Bound, Entropy, Harmonic, Geometric, Arithmetic };
  Kind kind = Kind::Bound;
  BoundKind bound = BoundKind::I;

  std::string_view name() const;
};

struct ChainParams {
  double alpha = 0.0;
  double beta = 1.0;
  double delta = 1.0;
  std::optional<double> lambda;
};

ScalarFn term_generator(const Term& term, const ChainParams& params);

// Hypothesis of a suite, relating B to delta * A^beta.
enum class Hypothesis {
  None,        // A, B strictly positive
  Dominating,  // delta A^beta <= B, delta >= 1
  Dominated,   // B <= delta A^beta, delta <= 1
  ByDelta,     // Dominating when delta >= 1, otherwise Dominated with every chain reversed
};

// A suite is data: a hypothesis plus chains of terms; every adjacent pair in a
// chain is one Loewner link lhs <= rhs.
struct SuiteDef {
  std::string_view name;
  Hypothesis hypothesis = Hypothesis::None;
  bool uses_delta = false;     // otherwise delta is pinned to 1
  bool entropy_only = false;   // alpha = 0, beta = 1 (the S(A|B) corollaries)
  bool uses_lambda = false;    // weighted means; beta pinned to 1
  std::vector<std::vector<Term>> chains;
};

std::span<const SuiteDef> all_suites();
const SuiteDef& find_suite(std::string_view name);  // throws InvalidArgument
bool is_suite(std::string_view name);

// Empty when the parameters are admissible for the suite, otherwise the
// reason they are not (alpha >= 0, beta > 0, delta side, pinned values).
std::string validate_params(const SuiteDef& suite, const ChainParams& params);

// Resolved orientation for a given delta (only differs for ByDelta).
Hypothesis effective_hypothesis(const SuiteDef& suite, double delta);
std::vector<std::vector<Term>> effective_chains(const SuiteDef& suite, double delta);

struct LinkResult {
  std::string lhs;
  std::string rhs;
  double margin = 0.0;     // min eigenvalue of rhs - lhs
  double threshold = 0.0;  // tol * max(1, ||lhs||_F, ||rhs||_F)
  bool holds = false;
};

enum class Verdict { Pass, Fail, PreconditionFailed };
std::string_view verdict_name(Verdict v);

struct ChainReport {
  std::string suite;
  std::uint64_t trial_seed = 0;
  ChainParams params;
  std::vector<LinkResult> links;
  Verdict verdict = Verdict::Pass;
  std::string note;  // precondition diagnostics
  std::optional<std::pair<SymMatrix, SymMatrix>> inputs;  // embedded for non-passing trials
};

// Checks the suite's parameter constraints and hypothesis (with the same
// tolerance as the links), then every link. A violated precondition yields
// Verdict::PreconditionFailed with no links. Inputs are embedded in the report
// whenever the verdict is not Pass.
ChainReport chain_check(const SuiteDef& suite, const SymMatrix& a, const SymMatrix& b,
                        const ChainParams& params, double tol = 1e-8,
                        std::uint64_t trial_seed = 0);

// {suite, trial_seed, params{alpha,beta,delta,lambda}, links[{lhs,rhs,margin}],
//  verdict} plus "matrices" {A, B} when inputs are embedded.
nlohmann::json chain_report_to_json(const ChainReport& report);

}  // namespace roe
