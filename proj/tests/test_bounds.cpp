#include <cmath>
#include <set>

#include "bounds.hpp"
#include "doctest.h"
#include "entropy.hpp"
#include "error.hpp"
#include "gen.hpp"
#include "oracles.hpp"

using namespace roe;

namespace {

SymMatrix scalar(double v) { return SymMatrix::diagonal(std::vector<double>{v}); }

double term(const oracle::ScalarTerms& s, BoundKind k) {
  switch (k) {
    case BoundKind::I: return s.I();
    case BoundKind::II: return s.II();
    case BoundKind::III: return s.III();
    case BoundKind::V: return s.V();
    case BoundKind::IPrime: return s.Ip();
    case BoundKind::IIPrime: return s.IIp();
    case BoundKind::IIIPrime: return s.IIIp();
    case BoundKind::VPrime: return s.Vp();
    case BoundKind::LowerShift: return s.lower_shift();
    case BoundKind::UpperShift: return s.upper_shift();
    case BoundKind::BaseLower: return s.base_lower();
  }
  return NAN;
}

}  // namespace

TEST_CASE("registry is total and names round trip") {
  std::set<std::string_view> names;
  for (BoundKind k : all_bound_kinds()) {
    names.insert(bound_name(k));
    CHECK(bound_from_name(bound_name(k)) == k);
    CHECK(std::isfinite(scalar_generator(k, 0.5, 2.0)(1.7)));
  }
  CHECK(names.size() == 11);
  CHECK(is_primed(BoundKind::IIIPrime));
  CHECK_FALSE(is_primed(BoundKind::III));
  CHECK_THROWS_AS(bound_from_name("IV"), InvalidArgument);
}

TEST_CASE("generator examples") {
  for (double alpha : {0.0, 0.5, 2.0}) CHECK(scalar_generator(BoundKind::I, alpha)(1.0) == 0.0);
  CHECK(scalar_generator(BoundKind::V, 0.0)(2.0) == doctest::Approx(0.75).epsilon(1e-15));
  for (double x : {0.2, 1.0, 3.5}) {
    CHECK(scalar_generator(BoundKind::IIPrime, 0.5, 1.0)(x) ==
          doctest::Approx(scalar_generator(BoundKind::II, 0.5)(x)).epsilon(1e-15));
  }
}

TEST_CASE("generators match the closed forms away from and near x = 1") {
  for (BoundKind k : all_bound_kinds()) {
    for (double alpha : {0.0, 0.5, 1.0, 2.0}) {
      for (double delta : {1.0 / 3.0, 1.0, 3.0}) {
        for (double x : {0.05, 0.5, 0.999, 1.0, 1.001, 2.0, 40.0}) {
          const oracle::ScalarTerms s{1.0, x, alpha, 1.0, delta};
          const double expect = term(s, k);
          const double got = scalar_generator(k, alpha, delta)(x);
          CHECK(std::abs(got - expect) <= 1e-13 * std::max(1.0, std::abs(expect)));
        }
      }
    }
  }
}

TEST_CASE("generators keep relative accuracy next to x = 1") {
  // Near x = 1 the unprimed generators behave like c (x - 1); the naive form
  // 2(1 - 2/(x+1)) loses every digit there.
  const double x = 1.0 + 1e-12;
  const double u = x - 1.0;
  CHECK(scalar_generator(BoundKind::I, 0.0)(x) == doctest::Approx(u).epsilon(1e-6));
  CHECK(scalar_generator(BoundKind::II, 0.0)(x) == doctest::Approx(u).epsilon(1e-6));
  CHECK(scalar_generator(BoundKind::III, 0.0)(x) == doctest::Approx(u).epsilon(1e-6));
  CHECK(scalar_generator(BoundKind::V, 0.0)(x) == doctest::Approx(u).epsilon(1e-6));
}

TEST_CASE("scalar bound values at a = 1, b = 4") {
  const SymMatrix a = scalar(1), b = scalar(4);
  auto at = [&](BoundKind k) { return bound(k, a, b, 0.0, 1.0)(0, 0).real(); };
  CHECK(at(BoundKind::I) == doctest::Approx(1.2).epsilon(1e-15));
  CHECK(at(BoundKind::II) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(rel_entropy(a, b)(0, 0).real() == doctest::Approx(std::log(4.0)).epsilon(1e-15));
  CHECK(at(BoundKind::III) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(at(BoundKind::V) == doctest::Approx(1.875).epsilon(1e-15));
}

TEST_CASE("B = A^beta makes every unprimed bound vanish") {
  GenConfig g;
  g.dim = 5;
  g.field = Field::Complex;
  const SymMatrix a = random_spd(g, 4);
  for (double beta : {0.5, 1.0, 2.0}) {
    const SymMatrix b = apply_fn(a, ScalarFn::power(beta));
    const double scale = std::max(1.0, b.frobenius_norm());
    for (BoundKind k : {BoundKind::I, BoundKind::II, BoundKind::III, BoundKind::V}) {
      CHECK(bound(k, a, b, 1.0, beta).frobenius_norm() <= 1e-12 * scale * scale);
    }
    CHECK(rel_entropy_alpha_beta(a, b, 1.0, beta).frobenius_norm() <= 1e-12 * scale * scale);
  }
}

TEST_CASE("primed bounds collapse to unprimed at delta = 1") {
  GenConfig g;
  g.dim = 4;
  const SymMatrix a = random_spd(g, 1, GenStream::First);
  const SymMatrix b = random_spd(g, 1, GenStream::Second);
  const std::pair<BoundKind, BoundKind> pairs[] = {{BoundKind::I, BoundKind::IPrime},
                                                   {BoundKind::II, BoundKind::IIPrime},
                                                   {BoundKind::III, BoundKind::IIIPrime},
                                                   {BoundKind::V, BoundKind::VPrime}};
  for (auto [plain, primed] : pairs) {
    const SymMatrix x = bound(plain, a, b, 0.5, 2.0), y = bound(primed, a, b, 0.5, 2.0, 1.0);
    CHECK(frobenius_distance(x, y) <= 1e-12 * std::max(1.0, x.frobenius_norm()));
  }
}

TEST_CASE("perspective and explicit routes agree") {
  for (Field field : {Field::Real, Field::Complex}) {
    GenConfig g;
    g.field = field;
    for (std::uint64_t t = 0; t < 8; ++t) {
      g.dim = 1 + t;
      const SymMatrix a = random_spd(g, t, GenStream::First);
      const SymMatrix b = random_spd(g, t, GenStream::Second);
      for (BoundKind k : all_bound_kinds()) {
        const SymMatrix r1 = bound(k, a, b, 0.5 * (t % 5), 0.5 + 0.5 * (t % 3), 1.5);
        const SymMatrix r2 = bound_explicit(k, a, b, 0.5 * (t % 5), 0.5 + 0.5 * (t % 3), 1.5);
        const double scale = std::max({1.0, a.frobenius_norm(), b.frobenius_norm(),
                                       r1.frobenius_norm(), r2.frobenius_norm()});
        CHECK_MESSAGE(frobenius_distance(r1, r2) <= 1e-9 * scale, bound_name(k));
      }
    }
  }
}

TEST_CASE("matrix bounds against Eigen evaluation of the explicit expressions") {
  GenConfig g;
  g.dim = 4;
  g.field = Field::Complex;
  const SymMatrix a = random_spd(g, 8, GenStream::First);
  const SymMatrix b = random_spd(g, 8, GenStream::Second);
  const oracle::MatrixXc ea = oracle::to_eigen(a), eb = oracle::to_eigen(b);
  const double alpha = 1.0, beta = 0.5, delta = 3.0;
  auto G = [&](double p) { return oracle::geo_mean(ea, eb, p, beta); };
  const double ld = std::log(delta), sd = std::sqrt(delta);
  CHECK(oracle::rel_diff(oracle::to_eigen(bound(BoundKind::III, a, b, alpha, beta)),
                         G(alpha + 0.5) - G(alpha - 0.5)) <= 1e-11);
  CHECK(oracle::rel_diff(oracle::to_eigen(bound(BoundKind::V, a, b, alpha, beta)),
                         0.5 * (G(alpha + 1) - G(alpha - 1))) <= 1e-11);
  CHECK(oracle::rel_diff(oracle::to_eigen(bound(BoundKind::IIIPrime, a, b, alpha, beta, delta)),
                         G(alpha + 0.5) / sd - sd * G(alpha - 0.5) + ld * G(alpha)) <= 1e-11);
  CHECK(oracle::rel_diff(oracle::to_eigen(bound(BoundKind::UpperShift, a, b, alpha, beta)),
                         G(alpha + 1) - G(alpha)) <= 1e-11);
}

TEST_CASE("invalid delta is rejected for primed kinds") {
  const SymMatrix a = scalar(1), b = scalar(2);
  CHECK_THROWS_AS(bound(BoundKind::IPrime, a, b, 0.0, 1.0, 0.0), InvalidArgument);
  CHECK_THROWS_AS(bound_explicit(BoundKind::VPrime, a, b, 0.0, 1.0, -1.0), InvalidArgument);
  CHECK_THROWS_AS(bound(BoundKind::I, a, scalar(-1), 0.0, 1.0), DomainError);
}
