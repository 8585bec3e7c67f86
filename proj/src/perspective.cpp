#include "perspective.hpp"

#include <cmath>
#include <sstream>

#include "error.hpp"

namespace roe {

PerspectiveFrame::PerspectiveFrame(const SymMatrix& a, const SymMatrix& b, const ScalarFn& h) {
  require_same_dim(a, b, "perspective");
  const EigenPair b_eig = require_strictly_positive(b, "perspective: second argument");

  std::vector<double> half(b_eig.dim());
  std::vector<double> neg_half(b_eig.dim());
  for (std::size_t k = 0; k < b_eig.dim(); ++k) {
    const double lambda = b_eig.values[k];
    const double hv = h.in_domain(lambda) ? h(lambda) : std::nan("");
    if (!(hv > 0.0) || !std::isfinite(hv)) {
      std::ostringstream os;
      os.precision(17);
      os << "perspective: " << h.describe() << " must be strictly positive on the spectrum,"
         << " fails at eigenvalue " << lambda;
      throw DomainError(os.str(), lambda);
    }
    half[k] = std::sqrt(hv);
    neg_half[k] = 1.0 / half[k];
  }
  outer_ = EigenPair{std::move(half), b_eig.vectors}.reconstruct();
  const SymMatrix inv_outer = EigenPair{std::move(neg_half), b_eig.vectors}.reconstruct();

  // sandwich() re-symmetrizes, so the Jacobi input is exactly self-adjoint.
  inner_ = sandwich(inv_outer, a);
  inner_eig_ = sym_eig(inner_);
}

SymMatrix PerspectiveFrame::operator()(const ScalarFn& f) const {
  return sandwich(outer_, apply_fn(inner_eig_, f));
}

SymMatrix perspective(const PerspectiveSpec& spec, const SymMatrix& a, const SymMatrix& b) {
  return PerspectiveFrame(a, b, spec.h)(spec.f);
}

SymMatrix congruence(const SymMatrix& x, const SymMatrix& b, double exponent) {
  require_same_dim(x, b, "congruence");
  const EigenPair b_eig = require_strictly_positive(b, "congruence: base");
  return sandwich(apply_fn(b_eig, ScalarFn::power(0.5 * exponent)), x);
}

}  // namespace roe
