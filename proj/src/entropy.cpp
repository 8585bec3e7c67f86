#include "entropy.hpp"

#include "error.hpp"
#include "perspective.hpp"

namespace roe {

SymMatrix geo_mean(const SymMatrix& a, const SymMatrix& b, double alpha, double beta) {
  require_same_dim(a, b, "geo_mean");
  const EigenPair a_eig = require_strictly_positive(a, "geo_mean: A");
  require_strictly_positive(b, "geo_mean: B");
  const SymMatrix a_half = apply_fn(a_eig, ScalarFn::power(0.5 * beta));
  const SymMatrix a_neg_half = apply_fn(a_eig, ScalarFn::power(-0.5 * beta));
  const SymMatrix inner = sandwich(a_neg_half, b);
  return sandwich(a_half, apply_fn(inner, ScalarFn::power(alpha)));
}

SymMatrix rel_entropy(const SymMatrix& a, const SymMatrix& b) {
  require_strictly_positive(b, "rel_entropy: B");
  return perspective({ScalarFn::log(), ScalarFn::identity()}, b, a);
}

SymMatrix rel_entropy_alpha(const SymMatrix& a, const SymMatrix& b, double alpha) {
  require_strictly_positive(b, "rel_entropy_alpha: B");
  return perspective({ScalarFn::power_log(alpha), ScalarFn::identity()}, b, a);
}

SymMatrix rel_entropy_alpha_beta(const SymMatrix& a, const SymMatrix& b, double alpha,
                                 double beta) {
  require_strictly_positive(b, "rel_entropy_alpha_beta: B");
  return perspective({ScalarFn::power_log(alpha), ScalarFn::power(beta)}, b, a);
}

WeightedMeans weighted_means(const SymMatrix& a, const SymMatrix& b, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw InvalidArgument("lambda must lie in [0, 1]");
  require_same_dim(a, b, "weighted_means");
  const EigenPair a_eig = require_strictly_positive(a, "weighted_means: A");
  const EigenPair b_eig = require_strictly_positive(b, "weighted_means: B");

  const SymMatrix mix = (1.0 - lambda) * apply_fn(a_eig, ScalarFn::inverse()) +
                        lambda * apply_fn(b_eig, ScalarFn::inverse());
  return WeightedMeans{
      apply_fn(mix, ScalarFn::inverse()),
      geo_mean(a, b, lambda, 1.0),
      (1.0 - lambda) * a + lambda * b,
  };
}

}  // namespace roe
