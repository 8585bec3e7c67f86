#pragma once

#include "matcore.hpp"

namespace roe {

// alpha and beta are arbitrary reals here; the inequality suites impose
// alpha >= 0, beta > 0 themselves.
struct EntropyParams {
  double alpha = 0.0;
  double beta = 1.0;
  double lambda = 0.5;  // weighted means only, in [0, 1]
};

// A #_(alpha,beta) B = A^{beta/2} (A^{-beta/2} B A^{-beta/2})^alpha A^{beta/2}.
// Evaluated directly from powers of A and of the inner matrix, independently
// of the perspective machinery.
SymMatrix geo_mean(const SymMatrix& a, const SymMatrix& b, double alpha, double beta = 1.0);

// Relative operator entropies, each a perspective with h(t) = t^beta taken at
// (B, A):
//   S(A|B)           = A^{1/2} log(C) A^{1/2},            C = A^{-1/2} B A^{-1/2}
//   S_alpha(A|B)     = A^{1/2} C^alpha log(C) A^{1/2}
//   S_alpha,beta(A|B)= A^{beta/2} C^alpha log(C) A^{beta/2}, C = A^{-beta/2} B A^{-beta/2}
SymMatrix rel_entropy(const SymMatrix& a, const SymMatrix& b);
SymMatrix rel_entropy_alpha(const SymMatrix& a, const SymMatrix& b, double alpha);
SymMatrix rel_entropy_alpha_beta(const SymMatrix& a, const SymMatrix& b, double alpha,
                                 double beta);

struct WeightedMeans {
  SymMatrix harmonic;    // ((1-l) A^-1 + l B^-1)^-1
  SymMatrix geometric;   // A #_l B
  SymMatrix arithmetic;  // (1-l) A + l B
};

WeightedMeans weighted_means(const SymMatrix& a, const SymMatrix& b, double lambda);

}  // namespace roe
