#include "bounds.hpp"

#include <array>
#include <cmath>
#include <string>

#include "entropy.hpp"
#include "error.hpp"
#include "perspective.hpp"

namespace roe {

namespace {

constexpr std::array kAllKinds = {
    BoundKind::I,          BoundKind::II,         BoundKind::III,       BoundKind::V,
    BoundKind::IPrime,     BoundKind::IIPrime,    BoundKind::IIIPrime,  BoundKind::VPrime,
    BoundKind::LowerShift, BoundKind::UpperShift, BoundKind::BaseLower,
};

void require_delta(BoundKind kind, double delta) {
  if (is_primed(kind) && !(delta > 0.0)) {
    throw InvalidArgument("bound " + std::string(bound_name(kind)) + " requires delta > 0");
  }
}

// Product of two commuting functions of the same matrix.
SymMatrix commuting_product(const SymMatrix& x, const SymMatrix& y) {
  return SymMatrix::from_hermitian_part(x.matrix() * y.matrix());
}

}  // namespace

std::span<const BoundKind> all_bound_kinds() { return kAllKinds; }

std::string_view bound_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::I: return "I";
    case BoundKind::II: return "II";
    case BoundKind::III: return "III";
    case BoundKind::V: return "V";
    case BoundKind::IPrime: return "I'";
    case BoundKind::IIPrime: return "II'";
    case BoundKind::IIIPrime: return "III'";
    case BoundKind::VPrime: return "V'";
    case BoundKind::LowerShift: return "lower_shift";
    case BoundKind::UpperShift: return "upper_shift";
    case BoundKind::BaseLower: return "base_lower";
  }
  return "?";
}

BoundKind bound_from_name(std::string_view name) {
  for (BoundKind k : kAllKinds)
    if (bound_name(k) == name) return k;
  throw InvalidArgument("unknown bound kind '" + std::string(name) + "'");
}

bool is_primed(BoundKind kind) {
  return kind == BoundKind::IPrime || kind == BoundKind::IIPrime ||
         kind == BoundKind::IIIPrime || kind == BoundKind::VPrime;
}

ScalarFn scalar_generator(BoundKind kind, double alpha, double delta) {
  require_delta(kind, delta);
  auto make = [&](FnKind fk) { return ScalarFn{fk, alpha, delta, 0.0}; };
  switch (kind) {
    case BoundKind::I: return make(FnKind::GenI);
    case BoundKind::II: return make(FnKind::GenII);
    case BoundKind::III: return make(FnKind::GenIII);
    case BoundKind::V: return make(FnKind::GenV);
    case BoundKind::IPrime: return make(FnKind::GenIPrime);
    case BoundKind::IIPrime: return make(FnKind::GenIIPrime);
    case BoundKind::IIIPrime: return make(FnKind::GenIIIPrime);
    case BoundKind::VPrime: return make(FnKind::GenVPrime);
    case BoundKind::LowerShift: return make(FnKind::LowerShift);
    case BoundKind::UpperShift: return make(FnKind::UpperShift);
    case BoundKind::BaseLower: return make(FnKind::BaseLower);
  }
  throw InvalidArgument("unknown bound kind");
}

SymMatrix bound(BoundKind kind, const SymMatrix& a, const SymMatrix& b, double alpha,
                double beta, double delta) {
  const ScalarFn g = scalar_generator(kind, alpha, delta);
  return PerspectiveFrame(b, a, ScalarFn::power(beta))(g);
}

SymMatrix bound_explicit(BoundKind kind, const SymMatrix& a, const SymMatrix& b, double alpha,
                         double beta, double delta) {
  require_delta(kind, delta);
  auto G = [&](double p) { return geo_mean(a, b, p, beta); };
  // Functions of C = A^{-beta/2} B A^{-beta/2}, conjugated back by A^{beta/2}.
  auto inner = [&] { return congruence(b, a, -beta); };
  auto outer = [&](const SymMatrix& x) { return congruence(x, a, beta); };
  const SymMatrix id = SymMatrix::identity(a.dim(), a.field());
  const double ld = std::log(delta);
  const double sd = std::sqrt(delta);

  switch (kind) {
    case BoundKind::I: {
      // 2 A^{b/2} [(1 - 2 (1 + C)^{-1}) C^a] A^{b/2}
      const SymMatrix c = inner();
      const SymMatrix resolvent = apply_fn(id + c, ScalarFn::inverse());
      return 2.0 * G(alpha) -
             4.0 * outer(commuting_product(resolvent, apply_fn(c, ScalarFn::power(alpha))));
    }
    case BoundKind::II: {
      // 4 A#_(a,b)B - 8 A^{b/2} [C^a (C^{1/2} + 1)^{-1}] A^{b/2}
      const SymMatrix c = inner();
      const SymMatrix resolvent = apply_fn(apply_fn(c, ScalarFn::sqrt()) + id, ScalarFn::inverse());
      return 4.0 * G(alpha) -
             8.0 * outer(commuting_product(apply_fn(c, ScalarFn::power(alpha)), resolvent));
    }
    case BoundKind::III:
      return G(alpha + 0.5) - G(alpha - 0.5);
    case BoundKind::V:
      return 0.5 * (G(alpha + 1.0) - G(alpha - 1.0));
    case BoundKind::IPrime: {
      // (ln d + 2) A#_(a,b)B - 4d A^{b/2} [(C + d)^{-1} C^a] A^{b/2}
      const SymMatrix c = inner();
      const SymMatrix resolvent = apply_fn(c + delta * id, ScalarFn::inverse());
      return (ld + 2.0) * G(alpha) -
             4.0 * delta *
                 outer(commuting_product(resolvent, apply_fn(c, ScalarFn::power(alpha))));
    }
    case BoundKind::IIPrime: {
      // (ln d + 4) A#_(a,b)B - 8 sqrt(d) A^{b/2} [(C^{1/2} + sqrt(d))^{-1} C^a] A^{b/2}
      const SymMatrix c = inner();
      const SymMatrix resolvent =
          apply_fn(apply_fn(c, ScalarFn::sqrt()) + sd * id, ScalarFn::inverse());
      return (ld + 4.0) * G(alpha) -
             8.0 * sd * outer(commuting_product(resolvent, apply_fn(c, ScalarFn::power(alpha))));
    }
    case BoundKind::IIIPrime:
      return (1.0 / sd) * G(alpha + 0.5) - sd * G(alpha - 0.5) + ld * G(alpha);
    case BoundKind::VPrime:
      return 0.5 * ((1.0 / delta) * G(alpha + 1.0) - delta * G(alpha - 1.0)) + ld * G(alpha);
    case BoundKind::LowerShift:
      return G(alpha) - G(alpha - 1.0);
    case BoundKind::UpperShift:
      return G(alpha + 1.0) - G(alpha);
    case BoundKind::BaseLower:
      return G(0.0) - G(-1.0);
  }
  throw InvalidArgument("unknown bound kind");
}

}  // namespace roe
