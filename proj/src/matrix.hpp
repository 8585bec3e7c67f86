#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace roe {

using Complex = std::complex<double>;

// Real symmetric matrices stand in for the JC-algebra / real C*-algebra case,
// complex Hermitian matrices for the C*-algebra case.
enum class Field { Real, Complex };

std::string_view field_name(Field f);
Field field_from_name(std::string_view name);

// Field of the result of combining two operands.
inline Field join(Field a, Field b) {
  return (a == Field::Complex || b == Field::Complex) ? Field::Complex : Field::Real;
}

// Dense square matrix, row-major. Entries are stored as complex numbers; for
// Field::Real every imaginary part is exactly zero.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t dim, Field field);
  Matrix(std::size_t dim, Field field, std::vector<Complex> entries);

  static Matrix identity(std::size_t dim, Field field);
  static Matrix diagonal(std::span<const double> diag, Field field = Field::Real);

  std::size_t dim() const { return dim_; }
  Field field() const { return field_; }
  bool is_real() const { return field_ == Field::Real; }

  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }

  std::span<const Complex> entries() const { return data_; }

  Matrix adjoint() const;
  // (X + X*) / 2
  Matrix hermitian_part() const;
  // max_{ij} |X_ij - conj(X_ji)|
  double max_asymmetry() const;
  double frobenius_norm() const;
  Complex trace() const;

  // Promote to the complex field (no-op for complex input).
  Matrix as_complex() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(double s);

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(Matrix lhs, double s) { return lhs *= s; }
  friend Matrix operator*(double s, Matrix rhs) { return rhs *= s; }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);

 private:
  void zero_imaginary_if_real();

  std::size_t dim_ = 0;
  Field field_ = Field::Real;
  std::vector<Complex> data_;
};

// A matrix known to be self-adjoint. Construction from a Matrix validates
// the entries against the conjugate transpose to within
// 1e-13 * max(1, ||M||_F) and then stores the exact Hermitian part, so every
// SymMatrix is self-adjoint bit for bit.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(const Matrix& m);

  // Skips validation; the caller guarantees self-adjointness up to rounding
  // (e.g. U f(L) U*). The Hermitian part is stored.
  static SymMatrix from_hermitian_part(const Matrix& m);

  static SymMatrix identity(std::size_t dim, Field field = Field::Real);
  static SymMatrix diagonal(std::span<const double> diag, Field field = Field::Real);
  static SymMatrix zero(std::size_t dim, Field field = Field::Real);
  // Row-major real data of length dim*dim.
  static SymMatrix from_real(std::size_t dim, std::span<const double> rows);

  std::size_t dim() const { return m_.dim(); }
  Field field() const { return m_.field(); }
  const Matrix& matrix() const { return m_; }
  operator const Matrix&() const { return m_; }  // NOLINT(google-explicit-constructor)

  const Complex& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  double frobenius_norm() const { return m_.frobenius_norm(); }

  SymMatrix& operator+=(const SymMatrix& rhs);
  SymMatrix& operator-=(const SymMatrix& rhs);
  SymMatrix& operator*=(double s);

  friend SymMatrix operator+(SymMatrix lhs, const SymMatrix& rhs) { return lhs += rhs; }
  friend SymMatrix operator-(SymMatrix lhs, const SymMatrix& rhs) { return lhs -= rhs; }
  friend SymMatrix operator*(SymMatrix lhs, double s) { return lhs *= s; }
  friend SymMatrix operator*(double s, SymMatrix rhs) { return rhs *= s; }

 private:
  Matrix m_;
};

// X * Y * X, re-symmetrized. Both operands self-adjoint, so the exact
// product is self-adjoint too.
SymMatrix sandwich(const SymMatrix& outer, const SymMatrix& inner);

// Jordan product (XY + YX) / 2.
SymMatrix jordan_product(const SymMatrix& x, const SymMatrix& y);

double frobenius_distance(const Matrix& a, const Matrix& b);

// Throws DimensionMismatch naming `what` when the dimensions differ.
void require_same_dim(const Matrix& a, const Matrix& b, std::string_view what);

}  // namespace roe
