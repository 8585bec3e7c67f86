#include <cmath>

#include "doctest.h"
#include "error.hpp"
#include "gen.hpp"
#include "oracles.hpp"
#include "rng.hpp"

using namespace roe;

TEST_CASE("counter streams are pure functions of (seed, stream, counter)") {
  CounterStream a(7, 1), b(7, 1), c(7, 2), d(8, 1);
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t x = a.next_u64();
    CHECK(x == b.next_u64());
    CHECK(x != c.next_u64());
    CHECK(x != d.next_u64());
  }
  CHECK(trial_seed(1, 2) != trial_seed(2, 1));
  CHECK(trial_seed(0, 0) == trial_seed(0, 0));
}

TEST_CASE("uniform and normal draws have the expected moments") {
  CounterStream rng(3, 0);
  const int n = 200000;
  double su = 0, sn = 0, sn2 = 0;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    CHECK_UNARY(u > 0.0 && u < 1.0);
    su += u;
    const double z = rng.normal();
    sn += z;
    sn2 += z * z;
  }
  CHECK(su / n == doctest::Approx(0.5).epsilon(0.01));
  CHECK(std::abs(sn / n) < 0.01);
  CHECK(sn2 / n == doctest::Approx(1.0).epsilon(0.02));
  for (int i = 0; i < 1000; ++i) {
    const double v = rng.log_uniform(0.25, 4.0);
    CHECK_UNARY(v >= 0.25 && v <= 4.0);
    CHECK(rng.below(5) < 5);
  }
}

TEST_CASE("random_spd is deterministic and respects the spectrum") {
  GenConfig g;
  g.dim = 4;
  g.master_seed = 123;
  for (Field field : {Field::Real, Field::Complex}) {
    g.field = field;
    for (std::uint64_t t = 0; t < 20; ++t) {
      const SymMatrix a = random_spd(g, t), b = random_spd(g, t);
      CHECK(frobenius_distance(a, b) == 0.0);
      CHECK(a.field() == field);
      CHECK(frobenius_distance(a, random_spd(g, t, GenStream::Second)) > 0.0);
      const Eigen::VectorXd ev = oracle::eigenvalues(oracle::to_eigen(a));
      CHECK(ev(0) >= g.spectrum_lo * (1 - 1e-10));
      CHECK(ev(ev.size() - 1) <= g.spectrum_hi * (1 + 1e-10));
    }
  }
  g.dim = 1;
  g.spectrum_lo = g.spectrum_hi = 1.0;
  CHECK(random_spd(g, 0)(0, 0) == Complex(1.0, 0.0));
}

TEST_CASE("config validation") {
  GenConfig g;
  g.dim = 0;
  CHECK_THROWS_AS(g.validate(), InvalidArgument);
  g.dim = 33;
  CHECK_THROWS_AS(g.validate(), InvalidArgument);
  g.dim = 32;
  CHECK_NOTHROW(g.validate());
  g.spectrum_lo = 1e-3;
  g.spectrum_hi = 1e2;
  CHECK_THROWS_AS(g.validate(), InvalidArgument);
  g.spectrum_lo = 0.0;
  CHECK_THROWS_AS(g.validate(), InvalidArgument);
  g.spectrum_lo = 2.0;
  g.spectrum_hi = 1.0;
  CHECK_THROWS_AS(g.validate(), InvalidArgument);
}

TEST_CASE("partners satisfy their Loewner relation") {
  GenConfig g;
  for (Field field : {Field::Real, Field::Complex}) {
    g.field = field;
    for (std::uint64_t t = 0; t < 40; ++t) {
      g.dim = 1 + t % 8;
      const SymMatrix a = random_spd(g, t);
      const double beta = 0.5 + 0.5 * (t % 3);
      const oracle::MatrixXc a_beta = oracle::power(oracle::to_eigen(a), beta);
      for (double delta : {1.0, 2.0}) {
        const oracle::MatrixXc d = oracle::to_eigen(random_partner(a, beta, delta, Direction::Dominating, g, t));
        const double scale = std::max({1.0, d.norm(), delta * a_beta.norm()});
        CHECK(oracle::min_eig(d - delta * a_beta) >= -1e-10 * scale);
      }
      for (double delta : {1.0, 0.5}) {
        const oracle::MatrixXc d = oracle::to_eigen(random_partner(a, beta, delta, Direction::Dominated, g, t));
        const double scale = std::max({1.0, d.norm(), delta * a_beta.norm()});
        CHECK(oracle::min_eig(delta * a_beta - d) >= -1e-10 * scale);
        CHECK(oracle::min_eig(d) > 0.0);
      }
    }
  }
}

TEST_CASE("boundary trials produce the equality case") {
  GenConfig g;
  g.dim = 3;
  CHECK(is_boundary_trial(g, 0));
  CHECK(is_boundary_trial(g, 20));
  CHECK_FALSE(is_boundary_trial(g, 21));
  const SymMatrix a = random_spd(g, 10);
  const SymMatrix expect = 2.0 * apply_fn(a, ScalarFn::power(1.5));
  for (Direction d : {Direction::Dominating, Direction::Dominated}) {
    const SymMatrix b = random_partner(a, 1.5, 2.0, d, g, 10);
    CHECK(frobenius_distance(b, expect) <= 1e-12 * expect.frobenius_norm());
  }
  g.boundary_period = 0;
  CHECK_FALSE(is_boundary_trial(g, 0));
}

TEST_CASE("identity base gives I + W") {
  GenConfig g;
  g.dim = 4;
  const SymMatrix id = SymMatrix::identity(4);
  const SymMatrix b = random_partner(id, 1.0, 1.0, Direction::Dominating, g, 3);
  CHECK(loewner_leq(id, b).holds);
  CHECK(frobenius_distance(b, id) > 0.0);
}

TEST_CASE("diagonal pairs") {
  GenConfig g;
  g.dim = 5;
  const auto [a, b] = random_diagonal_pair(g, 2);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      if (i == j) continue;
      CHECK(a(i, j) == 0.0);
      CHECK(b(i, j) == 0.0);
    }
}
