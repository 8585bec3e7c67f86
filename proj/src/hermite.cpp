#include "hermite.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "error.hpp"

namespace roe {

namespace {

constexpr double kUnitCutoff = 1e-12;

void require_x(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw InvalidArgument("x must be a positive finite real");
}

void require_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw InvalidArgument("lambda must lie in [0, 1]");
}

}  // namespace

double l_of_lambda(double alpha, double x, double lambda) {
  require_x(x);
  require_lambda(lambda);
  const double xa = std::pow(x, alpha);
  if (x >= 1.0) {
    // f on [1, x]
    return xa * 2.0 * lambda / (lambda * (x - 1.0) + 2.0) +
           xa * (2.0 - 2.0 * lambda) / (lambda * (x - 1.0) + (x + 1.0)) - 1.0;
  }
  // f on [x, 1]
  return xa * 2.0 * lambda / (lambda * (1.0 - x) + 2.0 * x) +
         xa * 2.0 * (1.0 - lambda) / (lambda * (1.0 - x) + (x + 1.0)) - 1.0;
}

double L_of_lambda(double alpha, double x, double lambda) {
  require_x(x);
  require_lambda(lambda);
  const double xa = std::pow(x, alpha);
  const double xa1 = std::pow(x, alpha - 1.0);
  if (x >= 1.0) {
    return 0.5 * (xa / (lambda * (x - 1.0) + 1.0) + lambda * xa + (1.0 - lambda) * xa1) - 1.0;
  }
  return 0.5 * (xa / (lambda * (1.0 - x) + x) + lambda * xa1 + (1.0 - lambda) * xa) - 1.0;
}

double extremizer(double x) {
  require_x(x);
  const double s = std::sqrt(x);
  return x >= 1.0 ? 1.0 / (s + 1.0) : s / (s + 1.0);
}

HHRecord hh_record(double alpha, double x) {
  require_x(x);
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw InvalidArgument("alpha must be >= 0");
  HHRecord r;
  r.x = x;
  r.alpha = alpha;
  r.lambda_star = extremizer(x);
  const double u = x - 1.0;
  if (std::abs(u) < kUnitCutoff) return r;

  const double xa = std::pow(x, alpha);
  const double s = std::sqrt(x);
  r.midpoint = 2.0 * xa / (x + 1.0) - 1.0;
  r.sup_l = 4.0 * xa / ((s + 1.0) * (s + 1.0)) - 1.0;
  // (x^a ln x - (x - 1)) / (x - 1), with ln x / (x - 1) via log1p.
  r.integral_avg = xa * (std::log1p(u) / u) - 1.0;
  r.inf_L = xa / s - 1.0;
  r.endpoint_avg = 0.5 * (xa + std::pow(x, alpha - 1.0)) - 1.0;
  return r;
}

double hh_scale(double alpha, double x) {
  return std::max({1.0, std::pow(x, alpha), std::pow(x, alpha - 1.0)});
}

bool hh_ordered(const HHRecord& r) {
  const double tol = 1e-12 * hh_scale(r.alpha, r.x);
  return r.midpoint <= r.sup_l + tol && r.sup_l <= r.integral_avg + tol &&
         r.integral_avg <= r.inf_L + tol && r.inf_L <= r.endpoint_avg + tol;
}

GridVerdict grid_verify(double alpha, double x, std::size_t n) {
  if (n < 3) throw InvalidArgument("grid needs at least 3 points");
  const HHRecord rec = hh_record(alpha, x);
  const double l_star = l_of_lambda(alpha, x, rec.lambda_star);
  const double L_star = L_of_lambda(alpha, x, rec.lambda_star);
  const double pointwise_tol = 1e-12 * hh_scale(alpha, x);

  GridVerdict v;
  v.max_l = -INFINITY;
  v.min_L = INFINITY;
  std::ostringstream why;
  why.precision(17);
  for (std::size_t i = 0; i < n; ++i) {
    const double lambda = static_cast<double>(i) / static_cast<double>(n - 1);
    const double l = l_of_lambda(alpha, x, lambda);
    const double L = L_of_lambda(alpha, x, lambda);
    v.max_l = std::max(v.max_l, l);
    v.min_L = std::min(v.min_L, L);
    if (why.tellp() == 0 && l > rec.integral_avg + pointwise_tol) {
      why << "l(" << lambda << ") = " << l << " exceeds the integral average " << rec.integral_avg;
    }
    if (why.tellp() == 0 && L < rec.integral_avg - pointwise_tol) {
      why << "L(" << lambda << ") = " << L << " is below the integral average "
          << rec.integral_avg;
    }
  }
  if (why.tellp() == 0 && v.max_l > l_star + 1e-10) {
    why << "grid max of l " << v.max_l << " exceeds l(lambda*) = " << l_star;
  }
  if (why.tellp() == 0 && v.min_L < L_star - 1e-10) {
    why << "grid min of L " << v.min_L << " is below L(lambda*) = " << L_star;
  }
  v.failure = why.str();
  v.pass = v.failure.empty();
  return v;
}

}  // namespace roe
