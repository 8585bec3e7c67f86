#pragma once

#include "matcore.hpp"

namespace roe {

// Noncommutative perspective of f with respect to h:
//   P_{f,h}(A, B) = h(B)^{1/2} f(h(B)^{-1/2} A h(B)^{-1/2}) h(B)^{1/2}
// for self-adjoint A and strictly positive B (h > 0 on the spectrum of B).
struct PerspectiveSpec {
  ScalarFn f;
  ScalarFn h;
};

// The congruence data of one (A, B, h) triple: h(B)^{1/2} and the
// eigendecomposition of the inner matrix h(B)^{-1/2} A h(B)^{-1/2}. Every
// perspective of the same pair reuses it, so all terms of an inequality chain
// see the same rounding in the inner matrix.
class PerspectiveFrame {
 public:
  PerspectiveFrame(const SymMatrix& a, const SymMatrix& b, const ScalarFn& h);

  // P_{f,h}(A, B)
  SymMatrix operator()(const ScalarFn& f) const;

  const SymMatrix& inner() const { return inner_; }
  const EigenPair& inner_eig() const { return inner_eig_; }
  // h(B)^{1/2}
  const SymMatrix& outer() const { return outer_; }

 private:
  SymMatrix outer_;
  SymMatrix inner_;
  EigenPair inner_eig_;
};

SymMatrix perspective(const PerspectiveSpec& spec, const SymMatrix& a, const SymMatrix& b);

// B^{e/2} X B^{e/2} for strictly positive B.
SymMatrix congruence(const SymMatrix& x, const SymMatrix& b, double exponent);

}  // namespace roe
