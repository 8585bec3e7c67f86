#pragma once

#include <span>
#include <string_view>

#include "matcore.hpp"

namespace roe {

// The bound operators around S_{alpha,beta}(A|B). Labels follow the usual
// numbering, which has no IV.
enum class BoundKind {
  I,
  II,
  III,
  V,
  IPrime,
  IIPrime,
  IIIPrime,
  VPrime,
  LowerShift,  // A#_(a,b)B - A#_(a-1,b)B
  UpperShift,  // A#_(a+1,b)B - A#_(a,b)B
  BaseLower,   // A#_(0,b)B - A#_(-1,b)B
};

std::span<const BoundKind> all_bound_kinds();
std::string_view bound_name(BoundKind kind);
BoundKind bound_from_name(std::string_view name);
bool is_primed(BoundKind kind);

// Registry: the scalar function whose perspective (h(t) = t^beta, taken at
// (B, A)) is the bound operator. Total over BoundKind.
ScalarFn scalar_generator(BoundKind kind, double alpha, double delta = 1.0);

// Perspective route: A^{beta/2} g(C) A^{beta/2}, C = A^{-beta/2} B A^{-beta/2}.
SymMatrix bound(BoundKind kind, const SymMatrix& a, const SymMatrix& b, double alpha,
                double beta, double delta = 1.0);

// Explicit route: the closed operator expression of each bound, assembled from
// geo_mean and congruence calls (e.g. III = A#_(a+1/2,b)B - A#_(a-1/2,b)B).
SymMatrix bound_explicit(BoundKind kind, const SymMatrix& a, const SymMatrix& b, double alpha,
                         double beta, double delta = 1.0);

}  // namespace roe
