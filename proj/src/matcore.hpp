#pragma once

#include <vector>

#include "matrix.hpp"
#include "scalar_fn.hpp"

namespace roe {

// Spectral decomposition M = U diag(values) U*.
struct EigenPair {
  std::vector<double> values;  // ascending
  Matrix vectors;              // orthonormal columns

  std::size_t dim() const { return values.size(); }
  double min() const { return values.front(); }
  double max() const { return values.back(); }
  // U diag(values) U*
  SymMatrix reconstruct() const;
};

// Cyclic Jacobi eigensolver (complex rotations in the Hermitian case).
// Sweeps until the off-diagonal Frobenius norm is at most 1e-13 ||M||_F,
// at most 64 sweeps. Eigenvector columns are normalized so that their
// largest-magnitude component is real and positive.
EigenPair sym_eig(const SymMatrix& m);

// Validates self-adjointness first and reports the max asymmetry on failure.
EigenPair sym_eig(const Matrix& m);

// f(M) = U f(L) U*. Throws DomainError naming the first eigenvalue outside
// f's domain.
SymMatrix apply_fn(const SymMatrix& m, const ScalarFn& f);
SymMatrix apply_fn(const EigenPair& eig, const ScalarFn& f);

double min_eigenvalue(const SymMatrix& m);

// Throws DomainError unless every eigenvalue is strictly positive.
EigenPair require_strictly_positive(const SymMatrix& m, const char* what);

struct LoewnerVerdict {
  bool holds = false;
  double margin = 0.0;     // min eigenvalue of (B - A)
  double threshold = 0.0;  // holds iff margin >= -threshold

  explicit operator bool() const { return holds; }
};

// Scale used by the relative Loewner tolerance: max(1, ||A||_F, ||B||_F).
double loewner_scale(const Matrix& a, const Matrix& b);

// A <= B in the Loewner order, i.e. B - A positive semidefinite, up to
// tol * max(1, ||A||_F, ||B||_F).
LoewnerVerdict loewner_leq(const SymMatrix& a, const SymMatrix& b, double tol = 1e-8);

// ||ABA - (2 (A o B) o A - A^2 o B)||_F with X o Y = (XY + YX)/2.
double jordan_check(const SymMatrix& a, const SymMatrix& b);

}  // namespace roe
