#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rvnorm/partitions.hpp"
#include "rvnorm/rational.hpp"

namespace rvnorm {

/// h_0..h_d of x by the prefix recurrence h_k(x_1..x_i) = h_k(x_1..x_{i−1}) + x_i h_{k−1}(x_1..x_i).
template <Scalar T>
std::vector<T> chs_all(int d, std::span<const T> x) {
  if (d < 0) throw std::invalid_argument("chs: negative degree");
  std::vector<T> h(static_cast<std::size_t>(d) + 1, T(0));
  h[0] = T(1);
  for (const T& xi : x) {
    for (std::size_t k = 1; k < h.size(); ++k) h[k] += xi * h[k - 1];
  }
  return h;
}

/// Complete homogeneous symmetric polynomial h_d(x).
template <Scalar T>
T chs(int d, std::span<const T> x) {
  return chs_all<T>(d, x).back();
}

/// p_π(x) = Π_j Σ_i x_i^{π_j}.
template <Scalar T>
T power_sum_product(const Partition& p, std::span<const T> x) {
  T out(1);
  for (int part : p.parts()) {
    T s(0);
    for (const T& xi : x) {
      T v(1);
      for (int k = 0; k < part; ++k) v *= xi;
      s += v;
    }
    out *= s;
  }
  return out;
}

/// Monomial symmetric polynomial m_π(x): the sum of x^α over distinct
/// rearrangements α of π padded with zeros to length n. Zero if |π| > n.
template <Scalar T>
T monomial_sym(const Partition& p, std::span<const T> x) {
  const std::size_t n = x.size();
  if (static_cast<std::size_t>(p.length()) > n) return T(0);
  std::vector<int> exps(p.parts().begin(), p.parts().end());
  exps.resize(n, 0);
  std::sort(exps.begin(), exps.end());
  T sum(0);
  do {
    T term(1);
    for (std::size_t i = 0; i < n; ++i) {
      for (int k = 0; k < exps[i]; ++k) term *= x[i];
    }
    sum += term;
  } while (std::next_permutation(exps.begin(), exps.end()));
  return sum;
}

/// (h_d(x), Σ_{π⊢d} p_π(x) / z_π).
template <Scalar T>
std::pair<T, T> chs_powersum_identity_check(int d, std::span<const T> x) {
  T rhs(0);
  for (const auto& p : enumerate_partitions(d)) rhs += power_sum_product<T>(p, x) / scalar_from<T>(z_of(p));
  return {chs<T>(d, x), rhs};
}

/// The c_π h_π terms of H_{d,α}, partitions with at most α parts.
std::vector<std::pair<Partition, BigInt>> hunter_terms(int d, int alpha);

/// H_{d,α}(x) = Σ_{π⊢d, |π|≤α} c_π h_π(x). Positive definite for even d.
template <Scalar T>
T hunter_poly(int d, int alpha, std::span<const T> x) {
  const auto h = chs_all<T>(d, x);
  T sum(0);
  for (const auto& [p, c] : hunter_terms(d, alpha)) {
    T term = scalar_from<T>(c);
    for (int part : p.parts()) term *= h[static_cast<std::size_t>(part)];
    sum += term;
  }
  return sum;
}

/// H_{ℓ,α} for ℓ = 0..d by H_{d,α} = Σ_{i=0}^{d} h_i H_{d−i,α−1}, H_{ℓ,1} = h_ℓ.
template <Scalar T>
std::vector<T> hunter_poly_recursive_all(int d, int alpha, std::span<const T> x) {
  if (alpha < 1) throw std::invalid_argument("hunter polynomial needs alpha >= 1");
  const auto h = chs_all<T>(d, x);
  std::vector<T> current = h;
  for (int a = 2; a <= alpha; ++a) {
    std::vector<T> next(current.size(), T(0));
    for (std::size_t ell = 0; ell < next.size(); ++ell) {
      for (std::size_t i = 0; i <= ell; ++i) next[ell] += h[i] * current[ell - i];
    }
    current = std::move(next);
  }
  return current;
}

template <Scalar T>
T hunter_poly_recursive(int d, int alpha, std::span<const T> x) {
  return hunter_poly_recursive_all<T>(d, alpha, x).back();
}

/// Bernoulli(q) norm in monomial form: Σ_{π⊢d} q^{|π|} / Π_j π_j! · m_π(λ).
template <Scalar T>
T bernoulli_norm_hermitian(std::span<const T> lambdas, const T& q, int d) {
  T sum(0);
  for (const auto& p : enumerate_partitions(d)) {
    if (static_cast<std::size_t>(p.length()) > lambdas.size()) continue;
    T coeff(1);
    for (int j = 0; j < p.length(); ++j) coeff *= q;
    BigInt den = 1;
    for (int part : p.parts()) den *= factorial(static_cast<unsigned>(part));
    sum += coeff / scalar_from<T>(den) * monomial_sym<T>(p, lambdas);
  }
  return sum;
}

}  // namespace rvnorm
