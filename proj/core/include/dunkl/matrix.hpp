#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dunkl/scalar.hpp"

namespace dunkl {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n, Mode mode);
Vector unit_vector(std::size_t n, std::size_t i, Mode mode);
Scalar dot(const Vector& a, const Vector& b);
Scalar norm_squared(const Vector& a);
double norm(const Vector& a);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& a);
Vector parse_vector(const std::string& text, Mode mode);
std::string to_string(const Vector& v);

/// Dense row-major matrix of scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Mode mode);

  static Matrix identity(std::size_t n, Mode mode);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Mode mode() const { return mode_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const;
  Vector column(std::size_t c) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  bool is_zero() const;
  double max_abs() const;
  /// Exact test in exact mode; |entry| <= tol in floating mode.
  bool approx_equal(const Matrix& other, double tol) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Mode mode_ = Mode::exact;
  std::vector<Scalar> data_;
};

/// Reflection matrix I - 2 a a^T / |a|^2.
Matrix reflection_matrix(const Vector& root);

bool is_orthogonal(const Matrix& g, double tol = 1e-9);

/// Solution of A X = B by Gauss-Jordan elimination (exact pivoting on the
/// first nonzero entry in exact mode, partial pivoting in floating mode).
struct LinearSolve {
  std::size_t rank = 0;
  /// Consistent means every zero row of the reduced A has a zero right side.
  bool consistent = false;
  /// Unique solution columns; only meaningful when rank == A.cols().
  Matrix solution;
};

LinearSolve solve_linear(const Matrix& a, const Matrix& b, double float_tol = 1e-10);

}  // namespace dunkl
