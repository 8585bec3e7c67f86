#include "matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "error.hpp"

namespace roe {

std::string_view field_name(Field f) { return f == Field::Real ? "real" : "complex"; }

Field field_from_name(std::string_view name) {
  if (name == "real") return Field::Real;
  if (name == "complex") return Field::Complex;
  throw InvalidArgument("unknown field '" + std::string(name) + "' (expected real|complex)");
}

Matrix::Matrix(std::size_t dim, Field field) : dim_(dim), field_(field), data_(dim * dim) {
  if (dim == 0) throw InvalidArgument("matrix dimension must be at least 1");
}

Matrix::Matrix(std::size_t dim, Field field, std::vector<Complex> entries)
    : dim_(dim), field_(field), data_(std::move(entries)) {
  if (dim == 0) throw InvalidArgument("matrix dimension must be at least 1");
  if (data_.size() != dim * dim) {
    throw DimensionMismatch("expected " + std::to_string(dim * dim) + " entries, got " +
                            std::to_string(data_.size()));
  }
  for (const Complex& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw InvalidArgument("matrix entries must be finite");
    }
    if (field_ == Field::Real && z.imag() != 0.0) {
      throw InvalidArgument("real matrix has an entry with nonzero imaginary part");
    }
  }
}

Matrix Matrix::identity(std::size_t dim, Field field) {
  Matrix m(dim, field);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> diag, Field field) {
  Matrix m(diag.size(), field);
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix out(dim_, field_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

Matrix Matrix::hermitian_part() const {
  Matrix out(dim_, field_);
  for (std::size_t i = 0; i < dim_; ++i) {
    out(i, i) = (*this)(i, i).real();
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const Complex v = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
      out(i, j) = v;
      out(j, i) = std::conj(v);
    }
  }
  out.zero_imaginary_if_real();
  return out;
}

double Matrix::max_asymmetry() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

double Matrix::frobenius_norm() const {
  // Scaled accumulation avoids overflow for large entries.
  double scale = 0.0;
  for (const Complex& z : data_) scale = std::max({scale, std::abs(z.real()), std::abs(z.imag())});
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (const Complex& z : data_) {
    const double re = z.real() / scale;
    const double im = z.imag() / scale;
    sum += re * re + im * im;
  }
  return scale * std::sqrt(sum);
}

Complex Matrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::as_complex() const {
  Matrix out = *this;
  out.field_ = Field::Complex;
  return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  require_same_dim(*this, rhs, "matrix addition");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  field_ = join(field_, rhs.field_);
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  require_same_dim(*this, rhs, "matrix subtraction");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  field_ = join(field_, rhs.field_);
  return *this;
}

Matrix& Matrix::operator*=(double s) {
  for (Complex& z : data_) z *= s;
  zero_imaginary_if_real();
  return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  require_same_dim(lhs, rhs, "matrix product");
  const std::size_t n = lhs.dim();
  Matrix out(n, join(lhs.field(), rhs.field()));
  if (out.is_real()) {
    // Real arithmetic keeps imaginary parts exactly zero.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const double a = lhs(i, k).real();
        if (a == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j).real();
      }
    return out;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = lhs(i, k);
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

void Matrix::zero_imaginary_if_real() {
  if (field_ != Field::Real) return;
  for (Complex& z : data_) z.imag(0.0);
}

SymMatrix::SymMatrix(const Matrix& m) {
  const double asym = m.max_asymmetry();
  const double bound = 1e-13 * std::max(1.0, m.frobenius_norm());
  if (!(asym <= bound)) {
    std::ostringstream os;
    os.precision(6);
    os << "matrix is not self-adjoint: max asymmetry |M_ij - conj(M_ji)| = " << asym << " exceeds "
       << bound;
    throw NotSelfAdjoint(os.str(), asym);
  }
  m_ = m.hermitian_part();
}

SymMatrix SymMatrix::from_hermitian_part(const Matrix& m) {
  SymMatrix s;
  s.m_ = m.hermitian_part();
  return s;
}

SymMatrix SymMatrix::identity(std::size_t dim, Field field) {
  return from_hermitian_part(Matrix::identity(dim, field));
}

SymMatrix SymMatrix::diagonal(std::span<const double> diag, Field field) {
  return from_hermitian_part(Matrix::diagonal(diag, field));
}

SymMatrix SymMatrix::zero(std::size_t dim, Field field) {
  return from_hermitian_part(Matrix(dim, field));
}

SymMatrix SymMatrix::from_real(std::size_t dim, std::span<const double> rows) {
  if (rows.size() != dim * dim) {
    throw DimensionMismatch("expected " + std::to_string(dim * dim) + " real entries, got " +
                            std::to_string(rows.size()));
  }
  std::vector<Complex> entries(rows.begin(), rows.end());
  return SymMatrix(Matrix(dim, Field::Real, std::move(entries)));
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& rhs) {
  m_ += rhs.m_;
  return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& rhs) {
  m_ -= rhs.m_;
  return *this;
}

SymMatrix& SymMatrix::operator*=(double s) {
  m_ *= s;
  return *this;
}

SymMatrix sandwich(const SymMatrix& outer, const SymMatrix& inner) {
  return SymMatrix::from_hermitian_part(outer.matrix() * inner.matrix() * outer.matrix());
}

SymMatrix jordan_product(const SymMatrix& x, const SymMatrix& y) {
  const Matrix xy = x.matrix() * y.matrix();
  const Matrix yx = y.matrix() * x.matrix();
  return SymMatrix::from_hermitian_part(0.5 * (xy + yx));
}

double frobenius_distance(const Matrix& a, const Matrix& b) { return (a - b).frobenius_norm(); }

void require_same_dim(const Matrix& a, const Matrix& b, std::string_view what) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(what) + ": dimension mismatch (" +
                            std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
  }
}

}  // namespace roe
