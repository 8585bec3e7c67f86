#include "scalar_fn.hpp"

#include <cmath>
#include <sstream>

#include "error.hpp"

namespace roe {

namespace {

double pw(double x, double p) {
  if (p == 0.0) return 1.0;
  if (p == 1.0) return x;
  if (p == 0.5) return std::sqrt(x);
  if (p == -1.0) return 1.0 / x;
  return std::pow(x, p);
}

bool is_nonnegative_integer(double p) { return p >= 0.0 && std::floor(p) == p; }

}  // namespace

// The generators are written in forms that factor out (x - 1) or (x - d),
// which avoids cancellation near the boundary x = 1 (resp. x = d) where the
// bound operators vanish.
double ScalarFn::operator()(double x) const {
  const double a = alpha;
  switch (kind) {
    case FnKind::Identity:
      return x;
    case FnKind::Power:
      return pw(x, a);
    case FnKind::Log:
      return std::log(x);
    case FnKind::PowerLog:
      return pw(x, a) * std::log(x);
    case FnKind::GenI:
      return 2.0 * (x - 1.0) / (x + 1.0) * pw(x, a);
    case FnKind::GenII: {
      const double s = std::sqrt(x) + 1.0;
      return 4.0 * pw(x, a) * (x - 1.0) / (s * s);
    }
    case FnKind::GenIII:
      return pw(x, a) * (x - 1.0) / std::sqrt(x);
    case FnKind::GenV:
      return 0.5 * pw(x, a - 1.0) * (x - 1.0) * (x + 1.0);
    case FnKind::GenIPrime:
      return (std::log(delta) + 2.0 * (x - delta) / (x + delta)) * pw(x, a);
    case FnKind::GenIIPrime: {
      const double sx = std::sqrt(x);
      const double sd = std::sqrt(delta);
      return (std::log(delta) + 4.0 * (sx - sd) / (sx + sd)) * pw(x, a);
    }
    case FnKind::GenIIIPrime:
      return pw(x, a - 0.5) * (x - delta) / std::sqrt(delta) + pw(x, a) * std::log(delta);
    case FnKind::GenVPrime:
      return pw(x, a - 1.0) * (x - delta) * (x + delta) / (2.0 * delta) +
             pw(x, a) * std::log(delta);
    case FnKind::LowerShift:
      return pw(x, a - 1.0) * (x - 1.0);
    case FnKind::UpperShift:
      return pw(x, a) * (x - 1.0);
    case FnKind::BaseLower:
      return (x - 1.0) / x;
    case FnKind::MeanHarmonic:
      return x / ((1.0 - lambda) * x + lambda);
    case FnKind::MeanGeometric:
      return pw(x, lambda);
    case FnKind::MeanArithmetic:
      return (1.0 - lambda) + lambda * x;
  }
  return x;
}

Domain ScalarFn::domain() const {
  switch (kind) {
    case FnKind::Identity:
    case FnKind::MeanArithmetic:
      return Domain::All;
    case FnKind::Power:
      if (is_nonnegative_integer(alpha)) return Domain::All;
      return alpha > 0.0 ? Domain::NonNegative : Domain::Positive;
    case FnKind::MeanGeometric:
      return lambda > 0.0 ? Domain::NonNegative : Domain::Positive;
    default:
      return Domain::Positive;
  }
}

bool ScalarFn::in_domain(double x) const {
  if (!std::isfinite(x)) return false;
  switch (domain()) {
    case Domain::All:
      return true;
    case Domain::NonNegative:
      return x >= 0.0;
    case Domain::Positive:
      return x > 0.0;
  }
  return false;
}

std::string_view ScalarFn::name() const {
  switch (kind) {
    case FnKind::Identity: return "identity";
    case FnKind::Power: return "pow";
    case FnKind::Log: return "log";
    case FnKind::PowerLog: return "xlog";
    case FnKind::GenI: return "I";
    case FnKind::GenII: return "II";
    case FnKind::GenIII: return "III";
    case FnKind::GenV: return "V";
    case FnKind::GenIPrime: return "I'";
    case FnKind::GenIIPrime: return "II'";
    case FnKind::GenIIIPrime: return "III'";
    case FnKind::GenVPrime: return "V'";
    case FnKind::LowerShift: return "lower_shift";
    case FnKind::UpperShift: return "upper_shift";
    case FnKind::BaseLower: return "base_lower";
    case FnKind::MeanHarmonic: return "harmonic";
    case FnKind::MeanGeometric: return "geometric";
    case FnKind::MeanArithmetic: return "arithmetic";
  }
  return "?";
}

std::string ScalarFn::describe() const {
  std::ostringstream os;
  os << name() << "(alpha=" << alpha << ", delta=" << delta << ", lambda=" << lambda << ")";
  return os.str();
}

ScalarFn scalar_fn_from_name(std::string_view name, double alpha, double delta, double lambda) {
  struct Entry {
    std::string_view name;
    FnKind kind;
  };
  static constexpr Entry table[] = {
      {"identity", FnKind::Identity},     {"id", FnKind::Identity},
      {"pow", FnKind::Power},             {"log", FnKind::Log},
      {"xlog", FnKind::PowerLog},         {"I", FnKind::GenI},
      {"II", FnKind::GenII},              {"III", FnKind::GenIII},
      {"V", FnKind::GenV},                {"I'", FnKind::GenIPrime},
      {"II'", FnKind::GenIIPrime},        {"III'", FnKind::GenIIIPrime},
      {"V'", FnKind::GenVPrime},          {"lower_shift", FnKind::LowerShift},
      {"upper_shift", FnKind::UpperShift}, {"base_lower", FnKind::BaseLower},
      {"harmonic", FnKind::MeanHarmonic}, {"geometric", FnKind::MeanGeometric},
      {"arithmetic", FnKind::MeanArithmetic},
  };
  if (name == "sqrt") return ScalarFn::sqrt();
  if (name == "inv") return ScalarFn::inverse();
  for (const Entry& e : table) {
    if (e.name == name) {
      if (!(delta > 0.0)) throw InvalidArgument("delta must be positive");
      if ((e.kind == FnKind::MeanHarmonic || e.kind == FnKind::MeanGeometric ||
           e.kind == FnKind::MeanArithmetic) &&
          !(lambda >= 0.0 && lambda <= 1.0)) {
        throw InvalidArgument("lambda must lie in [0, 1]");
      }
      return ScalarFn{e.kind, alpha, delta, lambda};
    }
  }
  throw InvalidArgument("unknown scalar function '" + std::string(name) + "'");
}

}  // namespace roe
