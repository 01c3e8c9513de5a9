#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rvnorm/rational.hpp"

namespace rvnorm {

using Complex = std::complex<double>;

/// Dense square matrix, row-major.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, T(0)) {}
  Matrix(std::size_t n, std::vector<T> data) : n_(n), data_(std::move(data)) {
    if (data_.size() != n * n) throw std::invalid_argument("matrix data size is not n*n");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) : n_(rows.size()) {
    data_.reserve(n_ * n_);
    for (const auto& row : rows) {
      if (row.size() != n_) throw std::invalid_argument("matrix must be square");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  template <class U>
  static Matrix diagonal(std::span<const U> values) {
    Matrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = T(values[i]);
    return m;
  }

  std::size_t size() const noexcept { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  std::span<const T> data() const noexcept { return data_; }

  T trace() const {
    T out(0);
    for (std::size_t i = 0; i < n_; ++i) out += (*this)(i, i);
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.check_same(b);
    const std::size_t n = a.n_;
    Matrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
      }
    }
    return c;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  void check_same(const Matrix& o) const {
    if (o.n_ != n_) throw std::invalid_argument("matrix dimension mismatch");
  }

  std::size_t n_ = 0;
  std::vector<T> data_;
};

using ComplexMatrix = Matrix<Complex>;
using RealMatrix = Matrix<double>;
using RationalMatrix = Matrix<Rational>;

ComplexMatrix adjoint(const ComplexMatrix& z);

/// Complex diagonal matrix from real entries.
ComplexMatrix diagonal_matrix(std::span<const double> values);

double max_abs_entry(const ComplexMatrix& z);
double frobenius_norm(const ComplexMatrix& z);
bool all_finite(const ComplexMatrix& z);

/// max_ij |z_ij − conj(z_ji)| <= tol.
bool is_hermitian(const ComplexMatrix& z, double tol);

/// Default Hermiticity tolerance: 1e−12·(1 + max|entry|).
double hermitian_tolerance(const ComplexMatrix& z);
bool is_hermitian(const ComplexMatrix& z);

bool is_symmetric(const RationalMatrix& a);

/// Complex matrix with the same (real) entries.
ComplexMatrix to_complex(const RationalMatrix& a);

/// (tr A, tr A², ..., tr A^d) by iterated multiplication.
template <class T>
std::vector<T> trace_powers(const Matrix<T>& a, int d) {
  if (d < 0) throw std::invalid_argument("trace_powers: negative degree");
  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(d));
  if (d == 0) return out;
  Matrix<T> power = a;
  out.push_back(power.trace());
  for (int k = 2; k <= d; ++k) {
    power = power * a;
    out.push_back(power.trace());
  }
  return out;
}

/// Real parts of trace_powers for a Hermitian matrix. Throws DomainError if
/// an imaginary part exceeds 1e−10 of the entry scale.
std::vector<double> hermitian_trace_powers(const ComplexMatrix& a, int d);

/// Eigenvalues sorted nonincreasing.
struct EigenvalueVector {
  std::vector<double> values;
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius mass falls to
/// 1e−12·‖A‖_F. Throws DomainError for non-Hermitian input.
EigenvalueVector hermitian_eigenvalues(const ComplexMatrix& a);

/// x ≺ y: equal totals and every partial sum of the k largest entries of x is
/// at most that of y. Floats compare with absolute tolerance `tol` scaled by
/// the entry magnitude. Throws std::invalid_argument on length mismatch.
bool is_majorized(std::span<const double> x, std::span<const double> y, double tol = 1e-12);
bool is_majorized(std::span<const Rational> x, std::span<const Rational> y);

/// Matrix JSON: {"n": int, "re": [[...]], "im": [[...]]}. "im" may be omitted
/// for real matrices. Entries are numbers or rational strings ("1/3").
/// Throws ParseError on malformed, non-square or non-finite data.
ComplexMatrix parse_matrix_json(const std::string& text);
ComplexMatrix load_matrix_json(const std::string& path);
std::string matrix_to_json(const ComplexMatrix& z);

/// Exact real matrix from the same format; requires all imaginary parts zero.
RationalMatrix parse_rational_matrix_json(const std::string& text);
RationalMatrix load_rational_matrix_json(const std::string& path);

}  // namespace rvnorm
