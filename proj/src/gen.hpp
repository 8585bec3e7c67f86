#pragma once

#include <cstdint>

#include "matcore.hpp"

namespace roe {

struct GenConfig {
  std::size_t dim = 4;  // 1..32
  Field field = Field::Real;
  double spectrum_lo = 0.25;
  double spectrum_hi = 4.0;  // hi / lo <= 1e4
  std::uint64_t master_seed = 0;
  // Every boundary_period-th trial (trial % period == 0) uses the equality
  // construction of random_partner; 0 disables boundary trials.
  std::uint64_t boundary_period = 10;

  void validate() const;  // throws InvalidArgument
};

// Independent sub-streams of one trial.
enum class GenStream : std::uint64_t { First = 1, Second = 2, Partner = 3 };

// Strictly positive matrix with log-uniform eigenvalues in
// [spectrum_lo, spectrum_hi] and a Haar-like eigenvector frame
// (Gram-Schmidt of a Gaussian ensemble). Bit-identical for identical
// (cfg, trial, stream).
SymMatrix random_spd(const GenConfig& cfg, std::uint64_t trial,
                     GenStream stream = GenStream::First);

enum class Direction {
  Dominating,  // B = A^{b/2} (delta I + W) A^{b/2}, W >= 0, so delta A^b <= B
  Dominated,   // B = A^{b/2} D A^{b/2}, spec(D) in (0, delta], so B <= delta A^b
};

bool is_boundary_trial(const GenConfig& cfg, std::uint64_t trial);

// Partner B of A with the requested Loewner relation to delta * A^beta. On
// boundary trials W = 0 (resp. D = delta I), i.e. B = delta A^beta. The
// relation is confirmed with loewner_leq at tol 1e-9 before returning; a
// failure there is a generator bug and throws NumericalFailure.
SymMatrix random_partner(const SymMatrix& a, double beta, double delta, Direction direction,
                         const GenConfig& cfg, std::uint64_t trial);

// Commuting diagonal pair with entries log-uniform in the configured spectrum.
std::pair<SymMatrix, SymMatrix> random_diagonal_pair(const GenConfig& cfg, std::uint64_t trial);

}  // namespace roe
