#include <algorithm>
#include <cmath>
#include <functional>

#include "rvnorm/error.hpp"
#include "rvnorm/matrix.hpp"

namespace rvnorm {

namespace {

double off_diagonal_mass(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

// Zeroes a(p, q) by a phase change on index q followed by a real rotation.
void rotate(ComplexMatrix& a, std::size_t p, std::size_t q) {
  const std::size_t n = a.size();
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;

  const Complex phase = apq / r;  // e^{iφ}
  for (std::size_t k = 0; k < n; ++k) a(k, q) *= std::conj(phase);
  for (std::size_t k = 0; k < n; ++k) a(q, k) *= phase;
  a(p, q) = r;
  a(q, p) = r;

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * r);
  const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  for (std::size_t k = 0; k < n; ++k) {
    const Complex kp = a(k, p);
    const Complex kq = a(k, q);
    a(k, p) = c * kp - s * kq;
    a(k, q) = s * kp + c * kq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex pk = a(p, k);
    const Complex qk = a(q, k);
    a(p, k) = c * pk - s * qk;
    a(q, k) = s * pk + c * qk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace

EigenvalueVector hermitian_eigenvalues(const ComplexMatrix& input) {
  if (!is_hermitian(input)) throw DomainError("hermitian_eigenvalues: matrix is not Hermitian");
  ComplexMatrix a = input;
  const std::size_t n = a.size();
  const double target = 1e-12 * frobenius_norm(a);

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_mass(a) > target; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, p, q);
    }
  }

  EigenvalueVector out;
  out.values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.values.push_back(a(i, i).real());
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

}  // namespace rvnorm
