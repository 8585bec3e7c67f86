#include "matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "error.hpp"

namespace roe {

namespace {

constexpr int kMaxSweeps = 64;
constexpr double kOffTolerance = 1e-13;

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

// One Jacobi rotation annihilating a(p, q). With e = a_pq / |a_pq| the
// rotation is J = [[c, s e], [-s conj(e), c]] and a <- J* a J, v <- v J.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const Complex g = a(p, q);
  const double ag = std::abs(g);
  if (ag == 0.0) return;
  const Complex e = g / ag;
  const Complex ec = std::conj(e);
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * ag);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const Complex se = s * e;
  const Complex sec = s * ec;

  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - sec * akq;
    a(k, q) = se * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - se * aqk;
    a(q, k) = sec * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * ag;
  a(q, q) = aqq + t * ag;

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - sec * vkq;
    v(k, q) = se * vkp + c * vkq;
  }
}

void fix_column_phases(Matrix& v) {
  const std::size_t n = v.dim();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t arg = 0;
    double best = -1.0;
    for (std::size_t row = 0; row < n; ++row) {
      const double mag = std::abs(v(row, col));
      if (mag > best) {
        best = mag;
        arg = row;
      }
    }
    const Complex z = v(arg, col);
    const Complex phase = std::conj(z) / std::abs(z);
    for (std::size_t row = 0; row < n; ++row) v(row, col) *= phase;
    v(arg, col) = std::abs(z);
  }
}

}  // namespace

SymMatrix EigenPair::reconstruct() const {
  const std::size_t n = dim();
  Matrix out(n, vectors.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Complex sum = 0.0;
      for (std::size_t k = 0; k < n; ++k) sum += vectors(i, k) * values[k] * std::conj(vectors(j, k));
      out(i, j) = sum;
      out(j, i) = std::conj(sum);
    }
  return SymMatrix::from_hermitian_part(out);
}

EigenPair sym_eig(const SymMatrix& m) {
  const std::size_t n = m.dim();
  Matrix a = m.matrix();
  Matrix v = Matrix::identity(n, m.field());
  const double norm = a.frobenius_norm();

  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= kOffTolerance * norm) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }
  if (sweep == kMaxSweeps && off_diagonal_norm(a) > kOffTolerance * norm) {
    throw NumericalFailure("Jacobi eigensolver did not converge in 64 sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  EigenPair out{std::vector<double>(n), Matrix(n, m.field())};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t row = 0; row < n; ++row) out.vectors(row, k) = v(row, order[k]);
  }
  fix_column_phases(out.vectors);
  return out;
}

EigenPair sym_eig(const Matrix& m) { return sym_eig(SymMatrix(m)); }

SymMatrix apply_fn(const EigenPair& eig, const ScalarFn& f) {
  const std::size_t n = eig.dim();
  std::vector<double> fv(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = eig.values[k];
    if (!f.in_domain(lambda)) {
      std::ostringstream os;
      os.precision(17);
      os << "eigenvalue " << lambda << " lies outside the domain of " << f.describe();
      throw DomainError(os.str(), lambda);
    }
    fv[k] = f(lambda);
    if (!std::isfinite(fv[k])) {
      std::ostringstream os;
      os.precision(17);
      os << f.describe() << " is not finite at eigenvalue " << lambda;
      throw DomainError(os.str(), lambda);
    }
  }
  return EigenPair{std::move(fv), eig.vectors}.reconstruct();
}

SymMatrix apply_fn(const SymMatrix& m, const ScalarFn& f) { return apply_fn(sym_eig(m), f); }

double min_eigenvalue(const SymMatrix& m) { return sym_eig(m).min(); }

EigenPair require_strictly_positive(const SymMatrix& m, const char* what) {
  EigenPair eig = sym_eig(m);
  if (!(eig.min() > 0.0)) {
    std::ostringstream os;
    os.precision(17);
    os << what << " must be strictly positive; smallest eigenvalue is " << eig.min();
    throw DomainError(os.str(), eig.min());
  }
  return eig;
}

double loewner_scale(const Matrix& a, const Matrix& b) {
  return std::max({1.0, a.frobenius_norm(), b.frobenius_norm()});
}

LoewnerVerdict loewner_leq(const SymMatrix& a, const SymMatrix& b, double tol) {
  require_same_dim(a, b, "loewner_leq");
  if (!(tol >= 0.0)) throw InvalidArgument("Loewner tolerance must be nonnegative");
  LoewnerVerdict v;
  v.margin = min_eigenvalue(b - a);
  v.threshold = tol * loewner_scale(a, b);
  v.holds = v.margin >= -v.threshold;
  return v;
}

double jordan_check(const SymMatrix& a, const SymMatrix& b) {
  require_same_dim(a, b, "jordan_check");
  const Matrix aba = a.matrix() * b.matrix() * a.matrix();
  const SymMatrix ab = jordan_product(a, b);
  const SymMatrix a2 = SymMatrix::from_hermitian_part(a.matrix() * a.matrix());
  const Matrix rhs = 2.0 * jordan_product(ab, a).matrix() - jordan_product(a2, b).matrix();
  return frobenius_distance(aba, rhs);
}

}  // namespace roe
