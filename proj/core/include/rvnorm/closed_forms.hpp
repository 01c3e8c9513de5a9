#pragma once

// Family-specific and eigenvalue-based evaluations of |||A|||^d. These are
// independent of the cumulant machinery in norm_engine and serve as
// cross-checks for it.

#include <functional>
#include <span>
#include <vector>

#include "rvnorm/distribution.hpp"
#include "rvnorm/error.hpp"
#include "rvnorm/rational.hpp"
#include "rvnorm/series.hpp"
#include "rvnorm/sympoly.hpp"

namespace rvnorm {

namespace detail {

inline void require_even_degree(int d) {
  if (d < 2 || d % 2 != 0) throw DomainError("closed forms need an even degree d >= 2");
}

template <Scalar T>
T ipow(const T& x, int k) {
  T out(1);
  for (int i = 0; i < k; ++i) out *= x;
  return out;
}

/// Visits every composition (k_1..k_n) of d into n nonnegative parts.
void for_each_composition(int d, std::size_t n, const std::function<void(std::span<const int>)>& visit);

}  // namespace detail

/// [t^d] Π_i M(λ_i t) with M(t) = Σ_k μ_k t^k / k! from the closed-form
/// moments. Valid whenever the first d moments exist (pareto included).
template <Scalar T>
T mgf_product_norm_pow(std::span<const T> lambdas, const DistributionSpec& spec, int d) {
  detail::require_even_degree(d);
  spec.require_moments(d);
  std::vector<T> m(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    m[static_cast<std::size_t>(k)] =
        scalar_from<T>(spec.moment(k)) / scalar_from<T>(factorial(static_cast<unsigned>(k)));
  }
  auto product = TruncatedSeries<T>::constant(d, T(1));
  for (const T& lambda : lambdas) {
    TruncatedSeries<T> factor(d);
    T lk(1);
    for (int k = 0; k <= d; ++k) {
      factor[k] = m[static_cast<std::size_t>(k)] * lk;
      lk *= lambda;
    }
    product *= factor;
  }
  return product[d];
}

/// E[(Σ λ_i X_i)^d] / d! expanded by the multinomial theorem.
template <Scalar T>
T multinomial_norm_pow(std::span<const T> lambdas, const DistributionSpec& spec, int d) {
  detail::require_even_degree(d);
  spec.require_moments(d);
  std::vector<T> mu(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) mu[static_cast<std::size_t>(k)] = scalar_from<T>(spec.moment(k));
  T sum(0);
  detail::for_each_composition(d, lambdas.size(), [&](std::span<const int> ks) {
    BigInt coeff = factorial(static_cast<unsigned>(d));
    T term(1);
    for (std::size_t i = 0; i < ks.size(); ++i) {
      coeff /= factorial(static_cast<unsigned>(ks[i]));
      term *= detail::ipow(lambdas[i], ks[i]) * mu[static_cast<std::size_t>(ks[i])];
    }
    sum += scalar_from<T>(coeff) * term;
  });
  return sum / scalar_from<T>(factorial(static_cast<unsigned>(d)));
}

/// Pareto(α): Σ_k C(d; k) Π_i α λ_i^{k_i} / (α − k_i), divided by d!.
/// Requires d < α.
template <Scalar T>
T pareto_norm_pow(std::span<const T> lambdas, const Rational& alpha, int d) {
  return multinomial_norm_pow<T>(lambdas, DistributionSpec::pareto(alpha), d);
}

/// Gamma(α, β): [t^d] Π_i (1 − βλ_i t)^{−α} via the binomial series
/// (1 − x)^{−α} = Σ_k (α)_k / k! x^k.
template <Scalar T>
T gamma_product_norm_pow(std::span<const T> lambdas, const T& alpha, const T& beta, int d) {
  detail::require_even_degree(d);
  auto product = TruncatedSeries<T>::constant(d, T(1));
  for (const T& lambda : lambdas) {
    TruncatedSeries<T> factor(d);
    T c(1);
    const T x = beta * lambda;
    T xk(1);
    for (int k = 0; k <= d; ++k) {
      factor[k] = c * xk;
      c = c * (alpha + T(k)) / T(k + 1);
      xk *= x;
    }
    product *= factor;
  }
  return product[d];
}

/// Normal(μ, σ): Σ_{k=0}^{d/2} μ^{2k}(tr A)^{2k}/(2k)! · (σ²‖A‖_F²)^{d/2−k} / (2^{d/2−k}(d/2−k)!).
template <Scalar T>
T normal_norm_pow(const T& trace, const T& frobenius_sq, const T& mu, const T& sigma, int d) {
  detail::require_even_degree(d);
  const int half = d / 2;
  const T var_f = sigma * sigma * frobenius_sq;
  T sum(0);
  for (int k = 0; k <= half; ++k) {
    const T left = detail::ipow<T>(mu * trace, 2 * k) / scalar_from<T>(factorial(static_cast<unsigned>(2 * k)));
    BigInt den = factorial(static_cast<unsigned>(half - k));
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(half - k));
    const T right = detail::ipow(var_f, half - k) / scalar_from<T>(den);
    sum += left * right;
  }
  return sum;
}

/// Laplace(μ, β): [t^d] e^{μ tr(A) t} Π_i 1/(1 − β²λ_i² t²)
///   = Σ_j (μ tr A)^{d−2j} / (d−2j)! · h_j(β²λ_1², ..., β²λ_n²).
template <Scalar T>
T laplace_norm_pow(std::span<const T> lambdas, const T& mu, const T& beta, int d) {
  detail::require_even_degree(d);
  std::vector<T> sq;
  T trace(0);
  for (const T& l : lambdas) {
    sq.push_back(beta * beta * l * l);
    trace += l;
  }
  const auto h = chs_all<T>(d / 2, sq);
  T sum(0);
  for (int j = 0; j <= d / 2; ++j) {
    sum += detail::ipow<T>(mu * trace, d - 2 * j) / scalar_from<T>(factorial(static_cast<unsigned>(d - 2 * j))) *
           h[static_cast<std::size_t>(j)];
  }
  return sum;
}

}  // namespace rvnorm
