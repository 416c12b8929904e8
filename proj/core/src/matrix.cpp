#include "dunkl/matrix.hpp"

#include <cmath>
#include <sstream>

namespace dunkl {

Vector zero_vector(std::size_t n, Mode mode) { return Vector(n, Scalar::zero(mode)); }

Vector unit_vector(std::size_t n, std::size_t i, Mode mode) {
  Vector v = zero_vector(n, mode);
  v.at(i) = Scalar::one(mode);
  return v;
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: vector sizes differ");
  if (a.empty()) return Scalar();
  Scalar s = Scalar::zero(a.front().mode());
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Scalar norm_squared(const Vector& a) { return dot(a, a); }

double norm(const Vector& a) {
  double s = 0;
  for (const auto& x : a) s += x.to_double() * x.to_double();
  return std::sqrt(s);
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vector r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vector r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

Vector operator*(const Scalar& s, const Vector& a) {
  Vector r = a;
  for (auto& x : r) x *= s;
  return r;
}

Vector parse_vector(const std::string& text, Mode mode) {
  Vector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(Scalar::parse(item, mode));
  if (v.empty()) throw Error("empty vector '" + text + "'");
  return v;
}

std::string to_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + ")";
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Mode mode)
    : rows_(rows), cols_(cols), mode_(mode), data_(rows * cols, Scalar::zero(mode)) {}

Matrix Matrix::identity(std::size_t n, Mode mode) {
  Matrix m(n, n, mode);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(mode);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, mode_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner sizes differ");
  Matrix r(a.rows_, b.cols_, a.mode_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector product: sizes differ");
  Vector r = zero_vector(a.rows_, a.mode_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * v[j];
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum: shapes differ");
  Matrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference: shapes differ");
  Matrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

double Matrix::max_abs() const {
  double m = 0;
  for (const auto& x : data_) m = std::max(m, std::abs(x.to_double()));
  return m;
}

bool Matrix::approx_equal(const Matrix& other, double tol) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  if (mode_ == Mode::exact && other.mode_ == Mode::exact) return *this == other;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (std::abs(data_[i].to_double() - other.data_[i].to_double()) > tol) return false;
  return true;
}

Matrix reflection_matrix(const Vector& root) {
  const std::size_t n = root.size();
  Scalar len2 = norm_squared(root);
  if (len2.is_zero()) throw Error("reflection in the zero vector");
  Mode mode = len2.mode();
  Matrix m = Matrix::identity(n, mode);
  Scalar two_over = Scalar::integer(2, mode) / len2;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) -= two_over * root[i] * root[j];
  return m;
}

bool is_orthogonal(const Matrix& g, double tol) {
  if (g.rows() != g.cols()) return false;
  Matrix prod = g.transpose() * g;
  return prod.approx_equal(Matrix::identity(g.rows(), g.mode()), tol);
}

LinearSolve solve_linear(const Matrix& a, const Matrix& b, double float_tol) {
  if (a.rows() != b.rows()) throw DimensionMismatch("solve_linear: row counts differ");
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const std::size_t k = b.cols();
  const Mode mode = a.mode();
  const bool exact = mode == Mode::exact;
  double scale = std::max(1.0, a.max_abs());

  Matrix aug(m, n + k, mode);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < k; ++j) aug(i, n + j) = b(i, j);
  }
  auto negligible = [&](const Scalar& x) {
    return exact ? x.is_zero() : std::abs(x.to_double()) <= float_tol * scale;
  };

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t best = m;
    double best_abs = 0;
    for (std::size_t r = row; r < m; ++r) {
      if (negligible(aug(r, col))) continue;
      if (exact) {
        best = r;
        break;
      }
      double v = std::abs(aug(r, col).to_double());
      if (v > best_abs) {
        best_abs = v;
        best = r;
      }
    }
    if (best == m) continue;
    if (best != row)
      for (std::size_t j = 0; j < n + k; ++j) std::swap(aug(best, j), aug(row, j));
    Scalar inv = aug(row, col).inverse();
    for (std::size_t j = col; j < n + k; ++j) aug(row, j) *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || aug(r, col).is_zero()) continue;
      Scalar f = aug(r, col);
      for (std::size_t j = col; j < n + k; ++j) aug(r, j) -= f * aug(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }

  LinearSolve out;
  out.rank = pivot_col.size();
  out.consistent = true;
  for (std::size_t r = out.rank; r < m && out.consistent; ++r)
    for (std::size_t j = 0; j < k; ++j)
      if (!negligible(aug(r, n + j))) {
        out.consistent = false;
        break;
      }
  out.solution = Matrix(n, k, mode);
  for (std::size_t p = 0; p < pivot_col.size(); ++p)
    for (std::size_t j = 0; j < k; ++j) out.solution(pivot_col[p], j) = aug(p, n + j);
  return out;
}

}  // namespace dunkl
