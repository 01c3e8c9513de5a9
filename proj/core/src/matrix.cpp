#include "rvnorm/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "rvnorm/error.hpp"

namespace rvnorm {

ComplexMatrix adjoint(const ComplexMatrix& z) {
  const std::size_t n = z.size();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(j, i) = std::conj(z(i, j));
  }
  return out;
}

ComplexMatrix diagonal_matrix(std::span<const double> values) {
  return ComplexMatrix::diagonal<double>(values);
}

double max_abs_entry(const ComplexMatrix& z) {
  double m = 0.0;
  for (const auto& x : z.data()) m = std::max(m, std::abs(x));
  return m;
}

double frobenius_norm(const ComplexMatrix& z) {
  double s = 0.0;
  for (const auto& x : z.data()) s += std::norm(x);
  return std::sqrt(s);
}

bool all_finite(const ComplexMatrix& z) {
  return std::all_of(z.data().begin(), z.data().end(),
                     [](const Complex& x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); });
}

bool is_hermitian(const ComplexMatrix& z, double tol) {
  const std::size_t n = z.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (std::abs(z(i, j) - std::conj(z(j, i))) > tol) return false;
    }
  }
  return true;
}

double hermitian_tolerance(const ComplexMatrix& z) { return 1e-12 * (1.0 + max_abs_entry(z)); }

bool is_hermitian(const ComplexMatrix& z) { return is_hermitian(z, hermitian_tolerance(z)); }

bool is_symmetric(const RationalMatrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a(i, j) != a(j, i)) return false;
    }
  }
  return true;
}

ComplexMatrix to_complex(const RationalMatrix& a) {
  ComplexMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = a(i, j).get_d();
  }
  return out;
}

std::vector<double> hermitian_trace_powers(const ComplexMatrix& a, int d) {
  auto powers = trace_powers(a, d);
  const double scale = std::max(1.0, max_abs_entry(a) * static_cast<double>(a.size()));
  std::vector<double> out;
  out.reserve(powers.size());
  double s = 1.0;
  for (const auto& p : powers) {
    s *= scale;
    if (std::abs(p.imag()) > 1e-10 * s) {
      throw DomainError("trace of a power has a non-negligible imaginary part; matrix is not Hermitian");
    }
    out.push_back(p.real());
  }
  return out;
}

}  // namespace rvnorm
