#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "rvnorm/matrix.hpp"

namespace rvnorm {

namespace {

template <class T, class LessEq>
bool majorized_impl(std::span<const T> x, std::span<const T> y, LessEq less_eq) {
  if (x.size() != y.size()) throw std::invalid_argument("is_majorized: length mismatch");
  std::vector<T> xs(x.begin(), x.end());
  std::vector<T> ys(y.begin(), y.end());
  std::sort(xs.begin(), xs.end(), std::greater<>());
  std::sort(ys.begin(), ys.end(), std::greater<>());
  T sx(0);
  T sy(0);
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sx += xs[k];
    sy += ys[k];
    if (!less_eq(sx, sy)) return false;
  }
  return less_eq(sy, sx);
}

}  // namespace

bool is_majorized(std::span<const double> x, std::span<const double> y, double tol) {
  double scale = 1.0;
  for (double v : x) scale = std::max(scale, std::abs(v));
  for (double v : y) scale = std::max(scale, std::abs(v));
  const double slack = tol * scale * static_cast<double>(std::max<std::size_t>(1, x.size()));
  return majorized_impl<double>(x, y, [slack](double a, double b) { return a <= b + slack; });
}

bool is_majorized(std::span<const Rational> x, std::span<const Rational> y) {
  return majorized_impl<Rational>(x, y, [](const Rational& a, const Rational& b) { return a <= b; });
}

}  // namespace rvnorm
