#pragma once

#include <cstddef>
#include <string>

namespace roe {

// Refined Hermite-Hadamard chain for the convex function f(t) = x^alpha/t - 1
// on [1, x] (x >= 1) or [x, 1] (x <= 1):
//   f(midpoint) <= sup l <= average of f <= inf L <= (f(a) + f(b))/2
struct HHRecord {
  double x = 1.0;
  double alpha = 0.0;
  double midpoint = 0.0;      // 2x^a/(x+1) - 1
  double sup_l = 0.0;         // 4x^a/(sqrt(x)+1)^2 - 1
  double integral_avg = 0.0;  // (x^a ln x - (x-1)) / (x-1)
  double inf_L = 0.0;         // x^a/sqrt(x) - 1
  double endpoint_avg = 0.0;  // (x^a + x^(a-1))/2 - 1
  double lambda_star = 0.5;
};

// l(lambda) and L(lambda) of the refinement, in the branch selected by x >= 1
// (interval [1, x]) or x < 1 (interval [x, 1]). lambda must lie in [0, 1].
double l_of_lambda(double alpha, double x, double lambda);
double L_of_lambda(double alpha, double x, double lambda);

// Maximizer of l and minimizer of L: 1/(sqrt(x)+1) for x >= 1,
// sqrt(x)/(sqrt(x)+1) for x <= 1.
double extremizer(double x);

// Closed forms of the five chain terms. Within 1e-12 of x = 1 the record is
// all zeros (the continuous limit).
HHRecord hh_record(double alpha, double x);

// Scale for absolute comparisons of record terms: max(1, x^a, x^(a-1)).
double hh_scale(double alpha, double x);

// True when the five terms are ordered to within 1e-12 * hh_scale.
bool hh_ordered(const HHRecord& r);

struct GridVerdict {
  bool pass = false;
  double max_l = 0.0;  // max of l over the grid
  double min_L = 0.0;  // min of L over the grid
  std::string failure;  // first violated condition, empty on pass
};

// Evaluates l and L on the n-point uniform grid of [0, 1] and checks
//   max l <= l(lambda*) + 1e-10,  min L >= L(lambda*) - 1e-10,
//   l(lambda_i) <= integral_avg <= L(lambda_i) for every grid point.
GridVerdict grid_verify(double alpha, double x, std::size_t n);

}  // namespace roe
