#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "rvnorm/cumulants.hpp"
#include "rvnorm/distribution.hpp"
#include "rvnorm/matrix.hpp"
#include "rvnorm/partitions.hpp"
#include "rvnorm/rational.hpp"
#include "rvnorm/series.hpp"

namespace rvnorm {

/// Complete Bell polynomial B_ℓ(x_1..x_ℓ) = ℓ! Σ_{π⊢ℓ} x_π / y_π.
/// `x[0]` is x_1; entries beyond ℓ are ignored.
template <Scalar T>
T bell_value(int ell, std::span<const T> x) {
  if (ell < 0) throw std::invalid_argument("bell_value: negative degree");
  if (static_cast<int>(x.size()) < ell) throw std::invalid_argument("bell_value: too few arguments");
  T sum(0);
  for (const auto& p : enumerate_partitions(ell)) {
    T term(1);
    for (int part : p.parts()) term *= x[static_cast<std::size_t>(part - 1)];
    sum += term / scalar_from<T>(y_of(p));
  }
  return sum * scalar_from<T>(factorial(static_cast<unsigned>(ell)));
}

enum class Method { partition, series, words };

std::string_view method_name(Method m);

/// The norm |||·|||_{X,d} for one distribution and one even degree.
///
/// Construction resolves the cumulants and the per-partition weights
/// κ_π / y_π once; every evaluation below reuses them. Odd degrees, missing
/// moments and degenerate specs are rejected at construction with
/// DomainError (MomentExistenceError for pareto with d >= alpha).
///
/// Floating-point evaluations divide the input by its largest entry modulus
/// and rescale the result by homogeneity.
class InducedNorm {
 public:
  InducedNorm(const DistributionSpec& spec, int d);

  const DistributionSpec& spec() const noexcept { return spec_; }
  int degree() const noexcept { return degree_; }
  const CumulantVector& cumulants() const noexcept { return cumulants_; }
  const std::vector<Partition>& partitions() const noexcept { return partitions_; }
  /// κ_π / y_π in partition order.
  const std::vector<Rational>& weights() const noexcept { return weights_; }

  /// Σ_π κ_π p_π / y_π from power sums p_1..p_d (`p[0]` = tr A).
  template <Scalar T>
  T from_power_sums(std::span<const T> p) const;

  /// [t^d] exp(Σ_j κ_j p_j t^j / j!). Pareto is rejected (no MGF).
  template <Scalar T>
  T series_from_power_sums(std::span<const T> p) const;

  /// Partition-sum path for Hermitian A. Throws DomainError otherwise.
  double hermitian_pow(const ComplexMatrix& a) const;
  Rational hermitian_pow(const RationalMatrix& a) const;

  /// Truncated-series path for Hermitian A.
  double series_pow(const ComplexMatrix& a) const;
  Rational series_pow(const RationalMatrix& a) const;

  /// Trace-word path Σ_π κ_π T_π(Z) / y_π for arbitrary square Z.
  double general_pow(const ComplexMatrix& z) const;

  double pow(const ComplexMatrix& z, Method method) const;

  /// |||Z||| = general_pow(Z)^{1/d}.
  double operator()(const ComplexMatrix& z) const;

 private:
  DistributionSpec spec_;
  int degree_;
  CumulantVector cumulants_;
  std::vector<Partition> partitions_;
  std::vector<Rational> weights_;
  std::vector<double> weights_d_;
  std::vector<double> kappas_d_;
};

/// T_π(Z): the average over the C(d, d/2) placements of d/2 adjoints of the
/// product of segment traces. Requires |π| even. Throws DomainError when the
/// imaginary residue exceeds 1e−10 of scale.
double t_pi(const ComplexMatrix& z, const Partition& p);

/// Number of adjoint placements t_pi enumerates for `p`; equals C(d, d/2).
std::size_t placement_count(const Partition& p);

double hermitian_norm_pow(const ComplexMatrix& a, const DistributionSpec& spec, int d);
Rational hermitian_norm_pow(const RationalMatrix& a, const DistributionSpec& spec, int d);
double series_norm_pow(const ComplexMatrix& a, const DistributionSpec& spec, int d);
Rational series_norm_pow(const RationalMatrix& a, const DistributionSpec& spec, int d);
double general_norm_pow(const ComplexMatrix& z, const DistributionSpec& spec, int d);
double norm(const ComplexMatrix& z, const DistributionSpec& spec, int d);

struct CircleCheck {
  double quadrature;
  double algebraic;
};

/// (1 / (2π C(d,d/2))) ∫ |||e^{it}Z + e^{−it}Z*|||^d dt by the trapezoid rule on
/// `points` nodes, alongside general_norm_pow(Z). Needs points >= d + 1.
CircleCheck circle_extension_check(const ComplexMatrix& z, const DistributionSpec& spec, int d, int points);

// ---------------------------------------------------------------------------

template <Scalar T>
T InducedNorm::from_power_sums(std::span<const T> p) const {
  if (static_cast<int>(p.size()) < degree_) throw std::invalid_argument("need power sums up to the degree");
  T sum(0);
  for (std::size_t i = 0; i < partitions_.size(); ++i) {
    T term;
    if constexpr (std::same_as<T, double>) {
      term = weights_d_[i];
    } else {
      term = weights_[i];
    }
    if (term == T(0)) continue;
    for (int part : partitions_[i].parts()) term *= p[static_cast<std::size_t>(part - 1)];
    sum += term;
  }
  return sum;
}

template <Scalar T>
T InducedNorm::series_from_power_sums(std::span<const T> p) const {
  if (!spec_.has_mgf()) throw DomainError("series path needs a moment generating function; pareto has none");
  if (static_cast<int>(p.size()) < degree_) throw std::invalid_argument("need power sums up to the degree");
  TruncatedSeries<T> k(degree_);
  for (int j = 1; j <= degree_; ++j) {
    k[j] = scalar_from<T>(cumulants_.kappa(j)) * p[static_cast<std::size_t>(j - 1)] /
           scalar_from<T>(factorial(static_cast<unsigned>(j)));
  }
  return k.exp()[degree_];
}

}  // namespace rvnorm
