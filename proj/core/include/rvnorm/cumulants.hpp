#pragma once

#include <span>
#include <vector>

#include "rvnorm/distribution.hpp"
#include "rvnorm/partitions.hpp"
#include "rvnorm/rational.hpp"

namespace rvnorm {

/// Cumulants κ_1..κ_d held exactly. `kappa(r)` is 1-based.
class CumulantVector {
 public:
  CumulantVector() = default;
  explicit CumulantVector(std::vector<Rational> kappas) : kappas_(std::move(kappas)) {}

  int degree() const noexcept { return static_cast<int>(kappas_.size()); }
  const Rational& kappa(int r) const { return kappas_.at(static_cast<std::size_t>(r - 1)); }
  std::span<const Rational> values() const noexcept { return kappas_; }

  /// κ_r in the working scalar type, index 0 holding κ_1.
  template <Scalar T>
  std::vector<T> as() const {
    std::vector<T> out;
    out.reserve(kappas_.size());
    for (const auto& k : kappas_) out.push_back(scalar_from<T>(k));
    return out;
  }

  friend bool operator==(const CumulantVector&, const CumulantVector&) = default;

 private:
  std::vector<Rational> kappas_;
};

/// μ_r = Σ_{ℓ=0}^{r−1} C(r−1, ℓ) μ_ℓ κ_{r−ℓ}, solved for κ_r. `mu[0]` is μ_1.
template <Scalar T>
std::vector<T> moments_to_cumulants(std::span<const T> mu) {
  const std::size_t d = mu.size();
  std::vector<T> kappa(d);
  auto moment = [&](std::size_t l) -> T { return l == 0 ? T(1) : mu[l - 1]; };
  for (std::size_t r = 1; r <= d; ++r) {
    T acc = mu[r - 1];
    for (std::size_t l = 1; l < r; ++l) {
      acc -= scalar_from<T>(binomial(static_cast<unsigned>(r - 1), static_cast<unsigned>(l))) * moment(l) * kappa[r - l - 1];
    }
    kappa[r - 1] = acc;
  }
  return kappa;
}

/// Inverse of moments_to_cumulants. `kappa[0]` is κ_1; returns μ_1..μ_d.
template <Scalar T>
std::vector<T> cumulants_to_moments(std::span<const T> kappa) {
  const std::size_t d = kappa.size();
  std::vector<T> mu(d);
  auto moment = [&](std::size_t l) -> T { return l == 0 ? T(1) : mu[l - 1]; };
  for (std::size_t r = 1; r <= d; ++r) {
    T acc = T(0);
    for (std::size_t l = 0; l < r; ++l) {
      acc += scalar_from<T>(binomial(static_cast<unsigned>(r - 1), static_cast<unsigned>(l))) * moment(l) * kappa[r - l - 1];
    }
    mu[r - 1] = acc;
  }
  return mu;
}

CumulantVector moments_to_cumulants(std::span<const Rational> mu);
std::vector<Rational> cumulants_to_moments(const CumulantVector& k);

/// Bernoulli numbers with B_1 = −1/2, via Σ_{j<m+1} C(m+1, j) B_j = 0.
Rational bernoulli_number(int r);

/// κ_1..κ_d of the distribution. Closed forms for gamma, exponential, normal,
/// uniform, laplace and poisson; moment recursion for the rest.
/// Throws MomentExistenceError for pareto with d >= alpha.
CumulantVector distribution_cumulants(const DistributionSpec& spec, int d);

/// κ_π = Π_j κ_{π_j}. `kappa[0]` is κ_1.
template <Scalar T>
T kappa_product(const Partition& p, std::span<const T> kappa) {
  T out(1);
  for (int part : p.parts()) out *= kappa[static_cast<std::size_t>(part - 1)];
  return out;
}

inline Rational kappa_product(const Partition& p, const CumulantVector& k) {
  return kappa_product<Rational>(p, k.values());
}

}  // namespace rvnorm
