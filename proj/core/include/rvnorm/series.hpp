#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "rvnorm/error.hpp"
#include "rvnorm/rational.hpp"

namespace rvnorm {

/// Power series c_0 + c_1 t + ... + c_d t^d, all arithmetic modulo t^{d+1}.
template <Scalar T>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int degree) : coeffs_(check(degree) + 1, T(0)) {}
  explicit TruncatedSeries(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries needs at least one coefficient");
  }

  /// The constant series `value`.
  static TruncatedSeries constant(int degree, T value) {
    TruncatedSeries s(degree);
    s.coeffs_[0] = std::move(value);
    return s;
  }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const T& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  T& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
  /// [t^k], zero beyond the truncation degree.
  T coefficient(int k) const { return k >= 0 && k <= degree() ? (*this)[k] : T(0); }
  const std::vector<T>& coefficients() const noexcept { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    same_degree(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  TruncatedSeries& operator*=(const T& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const T& s) { return a *= s; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.same_degree(b);
    const int d = a.degree();
    TruncatedSeries out(d);
    for (int i = 0; i <= d; ++i) {
      if (a[i] == T(0)) continue;
      for (int j = 0; i + j <= d; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
  }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  /// exp of a series with zero constant term, via f' = g' f:
  /// f_k = (1/k) Σ_{j=1}^{k} j g_j f_{k−j}.
  TruncatedSeries exp() const {
    if (coeffs_[0] != T(0)) throw DomainError("TruncatedSeries::exp needs a zero constant term");
    const int d = degree();
    TruncatedSeries f(d);
    f[0] = T(1);
    for (int k = 1; k <= d; ++k) {
      T acc(0);
      for (int j = 1; j <= k; ++j) {
        if (coeffs_[static_cast<std::size_t>(j)] == T(0)) continue;
        acc += T(j) * (*this)[j] * f[k - j];
      }
      f[k] = acc / T(k);
    }
    return f;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  static std::size_t check(int degree) {
    if (degree < 0) throw std::invalid_argument("TruncatedSeries degree must be nonnegative");
    return static_cast<std::size_t>(degree);
  }
  void same_degree(const TruncatedSeries& o) const {
    if (o.degree() != degree()) throw std::invalid_argument("TruncatedSeries degree mismatch");
  }

  std::vector<T> coeffs_;
};

}  // namespace rvnorm
