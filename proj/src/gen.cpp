#include "gen.hpp"

#include <cmath>
#include <utility>

#include "error.hpp"
#include "rng.hpp"

namespace roe {

namespace {

// Columns of a Gaussian matrix orthonormalized by modified Gram-Schmidt,
// applied twice.
Matrix random_unitary(std::size_t n, Field field, CounterStream& rng) {
  Matrix q(n, field);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double re = rng.normal();
      const double im = field == Field::Complex ? rng.normal() : 0.0;
      q(i, j) = Complex(re, im);
    }
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < j; ++k) {
        Complex dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += std::conj(q(i, k)) * q(i, j);
        for (std::size_t i = 0; i < n; ++i) q(i, j) -= dot * q(i, k);
      }
      double norm = 0.0;
      for (std::size_t i = 0; i < n; ++i) norm += std::norm(q(i, j));
      norm = std::sqrt(norm);
      if (!(norm > 1e-8)) throw NumericalFailure("degenerate Gaussian sample in random_unitary");
      for (std::size_t i = 0; i < n; ++i) q(i, j) /= norm;
    }
  }
  return q;
}

SymMatrix from_spectrum(const Matrix& u, std::vector<double> values) {
  return EigenPair{std::move(values), u}.reconstruct();
}

std::uint64_t stream_id(GenStream s) { return static_cast<std::uint64_t>(s); }

}  // namespace

void GenConfig::validate() const {
  if (dim < 1 || dim > 32) throw InvalidArgument("dim must lie in 1..32");
  if (!(spectrum_lo > 0.0) || !std::isfinite(spectrum_hi) || !(spectrum_hi >= spectrum_lo)) {
    throw InvalidArgument("spectrum bounds must satisfy 0 < lo <= hi");
  }
  if (spectrum_hi / spectrum_lo > 1e4) {
    throw InvalidArgument("spectrum condition hi/lo exceeds the 1e4 cap");
  }
}

bool is_boundary_trial(const GenConfig& cfg, std::uint64_t trial) {
  return cfg.boundary_period != 0 && trial % cfg.boundary_period == 0;
}

SymMatrix random_spd(const GenConfig& cfg, std::uint64_t trial, GenStream stream) {
  cfg.validate();
  CounterStream rng(trial_seed(cfg.master_seed, trial), stream_id(stream));
  std::vector<double> values(cfg.dim);
  for (double& v : values) v = rng.log_uniform(cfg.spectrum_lo, cfg.spectrum_hi);
  return from_spectrum(random_unitary(cfg.dim, cfg.field, rng), std::move(values));
}

SymMatrix random_partner(const SymMatrix& a, double beta, double delta, Direction direction,
                         const GenConfig& cfg, std::uint64_t trial) {
  cfg.validate();
  if (!(delta > 0.0)) throw InvalidArgument("delta must be positive");
  const std::size_t n = a.dim();
  const Field field = join(a.field(), cfg.field);
  const EigenPair a_eig = require_strictly_positive(a, "random_partner: A");
  const SymMatrix a_half = apply_fn(a_eig, ScalarFn::power(0.5 * beta));
  const bool boundary = is_boundary_trial(cfg, trial);
  CounterStream rng(trial_seed(cfg.master_seed, trial), stream_id(GenStream::Partner));

  SymMatrix core;
  if (direction == Direction::Dominating) {
    core = delta * SymMatrix::identity(n, field);
    if (!boundary) {
      // W = G G*, G of random rank, scaled to ||W||_F <= spectrum_hi.
      const std::size_t rank = 1 + rng.below(n);
      Matrix g(n, field);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < rank; ++j)
          g(i, j) = Complex(rng.normal(), field == Field::Complex ? rng.normal() : 0.0);
      const SymMatrix w = SymMatrix::from_hermitian_part(g * g.adjoint());
      const double scale = rng.uniform() * cfg.spectrum_hi / w.frobenius_norm();
      core += scale * w;
    }
  } else {
    std::vector<double> values(n, delta);
    if (!boundary) {
      const double ratio = cfg.spectrum_hi / cfg.spectrum_lo;
      for (double& v : values) v = delta * rng.log_uniform(1.0 / ratio, 1.0);
    }
    core = from_spectrum(random_unitary(n, field, rng), std::move(values));
  }
  const SymMatrix b = sandwich(a_half, core);

  const SymMatrix a_pow = beta == 1.0 ? a : apply_fn(a_eig, ScalarFn::power(beta));
  const SymMatrix scaled = delta * a_pow;
  const LoewnerVerdict check = direction == Direction::Dominating ? loewner_leq(scaled, b, 1e-9)
                                                                   : loewner_leq(b, scaled, 1e-9);
  if (!check.holds) {
    throw NumericalFailure("random_partner produced a pair violating its own Loewner relation");
  }
  return b;
}

std::pair<SymMatrix, SymMatrix> random_diagonal_pair(const GenConfig& cfg, std::uint64_t trial) {
  cfg.validate();
  CounterStream rng(trial_seed(cfg.master_seed, trial), stream_id(GenStream::First));
  std::vector<double> a(cfg.dim), b(cfg.dim);
  for (double& v : a) v = rng.log_uniform(cfg.spectrum_lo, cfg.spectrum_hi);
  for (double& v : b) v = rng.log_uniform(cfg.spectrum_lo, cfg.spectrum_hi);
  return {SymMatrix::diagonal(a, cfg.field), SymMatrix::diagonal(b, cfg.field)};
}

}  // namespace roe
