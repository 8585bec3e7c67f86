#pragma once

#include <string>
#include <string_view>

namespace roe {

// Where a scalar function may be evaluated.
enum class Domain {
  All,          // every real x
  NonNegative,  // x >= 0
  Positive,     // x > 0
};

// Closed-form real functions used by the functional calculus. The bound
// generators (I ... V', shifts) and the weighted-mean family are the scalar
// functions whose perspectives produce the operator bounds and means.
enum class FnKind {
  Identity,
  Power,       // x^alpha
  Log,         // ln x
  PowerLog,    // x^alpha ln x
  GenI,        // 2(1 - 2/(x+1)) x^alpha
  GenII,       // 4x^alpha - 8x^alpha/(sqrt(x)+1)
  GenIII,      // x^alpha (x-1)/sqrt(x)
  GenV,        // (x^(alpha+1) - x^(alpha-1)) / 2
  GenIPrime,   // (ln d + 2(1 - 2d/(x+d))) x^alpha
  GenIIPrime,  // (ln d + 4 - 8 sqrt(d)/(sqrt(x)+sqrt(d))) x^alpha
  GenIIIPrime, // x^(alpha+1/2)/sqrt(d) - x^(alpha-1/2) sqrt(d) + x^alpha ln d
  GenVPrime,   // x^(alpha+1)/(2d) - x^(alpha-1) d/2 + x^alpha ln d
  LowerShift,  // x^alpha - x^(alpha-1)
  UpperShift,  // x^(alpha+1) - x^alpha
  BaseLower,   // 1 - 1/x
  MeanHarmonic,   // ((1-lambda) + lambda/x)^-1
  MeanGeometric,  // x^lambda
  MeanArithmetic, // (1-lambda) + lambda x
};

// A named, parameterized real function. `delta` is only read by the primed
// generators and `lambda` only by the mean family.
struct ScalarFn {
  FnKind kind = FnKind::Identity;
  double alpha = 0.0;
  double delta = 1.0;
  double lambda = 0.0;

  static ScalarFn identity() { return {FnKind::Identity}; }
  static ScalarFn power(double p) { return {FnKind::Power, p}; }
  static ScalarFn sqrt() { return power(0.5); }
  static ScalarFn inverse() { return power(-1.0); }
  static ScalarFn log() { return {FnKind::Log}; }
  static ScalarFn power_log(double alpha) { return {FnKind::PowerLog, alpha}; }

  double operator()(double x) const;
  Domain domain() const;
  bool in_domain(double x) const;

  // Canonical name, e.g. "pow", "II'".
  std::string_view name() const;
  // Name plus parameters, for diagnostics.
  std::string describe() const;
};

// Parses a function name as accepted on the command line and in the C API:
// identity|id, pow, sqrt, inv, log, xlog, I, II, III, V, I', II', III', V',
// lower_shift, upper_shift, base_lower, harmonic, geometric, arithmetic.
// The parameters are copied into the returned function.
ScalarFn scalar_fn_from_name(std::string_view name, double alpha, double delta, double lambda);

}  // namespace roe
