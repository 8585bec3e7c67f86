#include <cmath>
#include <numbers>

#include "doctest.h"
#include "entropy.hpp"
#include "error.hpp"
#include "gen.hpp"
#include "oracles.hpp"

using namespace roe;

namespace {

SymMatrix scalar(double v) { return SymMatrix::diagonal(std::vector<double>{v}); }
double value(const SymMatrix& m) { return m(0, 0).real(); }

std::pair<SymMatrix, SymMatrix> random_pair(Field field, std::uint64_t t) {
  GenConfig g;
  g.dim = 1 + t % 7;
  g.field = field;
  g.master_seed = 11;
  return {random_spd(g, t, GenStream::First), random_spd(g, t, GenStream::Second)};
}

}  // namespace

TEST_CASE("scalar values") {
  const double e = std::numbers::e;
  CHECK(value(rel_entropy(scalar(2), scalar(2 * e * e))) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(value(rel_entropy_alpha_beta(scalar(1), scalar(e), 2.0, 1.0)) ==
        doctest::Approx(e * e).epsilon(1e-14));
  CHECK(value(geo_mean(scalar(4), scalar(2), 0.5)) == doctest::Approx(2.828427).epsilon(1e-7));
  const WeightedMeans m = weighted_means(scalar(1), scalar(4), 0.5);
  CHECK(value(m.harmonic) == doctest::Approx(1.6).epsilon(1e-14));
  CHECK(value(m.geometric) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(value(m.arithmetic) == doctest::Approx(2.5).epsilon(1e-14));
}

TEST_CASE("geometric mean special cases") {
  for (Field field : {Field::Real, Field::Complex}) {
    for (std::uint64_t t = 0; t < 10; ++t) {
      const auto [a, b] = random_pair(field, t);
      const double scale = std::max(a.frobenius_norm(), b.frobenius_norm());
      const SymMatrix a_beta = apply_fn(a, ScalarFn::power(1.5));
      CHECK(frobenius_distance(geo_mean(a, a_beta, 0.7, 1.5), a_beta) <= 1e-12 * scale * scale);
      CHECK(frobenius_distance(geo_mean(SymMatrix::identity(a.dim(), field), b, 0.3),
                               apply_fn(b, ScalarFn::power(0.3))) <= 1e-12 * scale);
      CHECK(frobenius_distance(geo_mean(a, b, 0.0), a) <= 1e-12 * scale);
      CHECK(frobenius_distance(geo_mean(a, b, 1.0), b) <= 1e-12 * scale);
      // A #_l B = B #_{1-l} A
      CHECK(frobenius_distance(geo_mean(a, b, 0.3), geo_mean(b, a, 0.7)) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("entropies against Eigen") {
  for (Field field : {Field::Real, Field::Complex}) {
    for (std::uint64_t t = 0; t < 12; ++t) {
      const auto [a, b] = random_pair(field, t);
      const oracle::MatrixXc ea = oracle::to_eigen(a), eb = oracle::to_eigen(b);
      const double alpha = 0.25 * (t % 5), beta = 0.5 + 0.5 * (t % 3);
      const oracle::MatrixXc s_ref = oracle::perspective(
          [](double x) { return std::log(x); }, [](double x) { return x; }, eb, ea);
      CHECK(oracle::rel_diff(oracle::to_eigen(rel_entropy(a, b)), s_ref) <= 1e-11);
      const oracle::MatrixXc sab_ref = oracle::perspective(
          [alpha](double x) { return std::pow(x, alpha) * std::log(x); },
          [beta](double x) { return std::pow(x, beta); }, eb, ea);
      CHECK(oracle::rel_diff(oracle::to_eigen(rel_entropy_alpha_beta(a, b, alpha, beta)), sab_ref) <=
            1e-11);
      CHECK(oracle::rel_diff(oracle::to_eigen(geo_mean(a, b, alpha, beta)),
                             oracle::geo_mean(ea, eb, alpha, beta)) <= 1e-11);
    }
  }
}

TEST_CASE("entropy family reductions") {
  for (std::uint64_t t = 0; t < 10; ++t) {
    const auto [a, b] = random_pair(Field::Complex, t);
    const double scale = std::max(1.0, rel_entropy(a, b).frobenius_norm());
    CHECK(rel_entropy(a, a).frobenius_norm() <= 1e-13 * a.frobenius_norm());
    CHECK(frobenius_distance(rel_entropy_alpha(a, b, 0.0), rel_entropy(a, b)) <= 1e-12 * scale);
    CHECK(frobenius_distance(rel_entropy_alpha_beta(a, b, 0.6, 1.0), rel_entropy_alpha(a, b, 0.6)) <=
          1e-12 * scale);
  }
}

TEST_CASE("weighted means endpoints and ordering") {
  for (Field field : {Field::Real, Field::Complex}) {
    for (std::uint64_t t = 0; t < 10; ++t) {
      const auto [a, b] = random_pair(field, t);
      const double scale = std::max(a.frobenius_norm(), b.frobenius_norm());
      const WeightedMeans m0 = weighted_means(a, b, 0.0);
      const WeightedMeans m1 = weighted_means(a, b, 1.0);
      for (const SymMatrix* x : {&m0.harmonic, &m0.geometric, &m0.arithmetic})
        CHECK(frobenius_distance(*x, a) <= 1e-12 * scale);
      for (const SymMatrix* x : {&m1.harmonic, &m1.geometric, &m1.arithmetic})
        CHECK(frobenius_distance(*x, b) <= 1e-12 * scale);
      const WeightedMeans m = weighted_means(a, b, 0.1 * (t % 11));
      CHECK(loewner_leq(m.harmonic, m.geometric).holds);
      CHECK(loewner_leq(m.geometric, m.arithmetic).holds);
    }
  }
  CHECK_THROWS_AS(weighted_means(scalar(1), scalar(2), 1.5), InvalidArgument);
  CHECK_THROWS_AS(weighted_means(scalar(1), scalar(2), -0.1), InvalidArgument);
}

TEST_CASE("non-positive inputs are domain errors") {
  const SymMatrix bad = SymMatrix::diagonal(std::vector<double>{1.0, -1.0});
  const SymMatrix good = SymMatrix::identity(2);
  CHECK_THROWS_AS(rel_entropy(bad, good), DomainError);
  CHECK_THROWS_AS(rel_entropy(good, bad), DomainError);
  CHECK_THROWS_AS(geo_mean(bad, good, 0.5), DomainError);
  CHECK_THROWS_AS(weighted_means(good, bad, 0.5), DomainError);
}
