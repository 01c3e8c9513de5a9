#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rvnorm/rational.hpp"

namespace rvnorm {

enum class Family {
  gamma,
  exponential,
  normal,
  uniform,
  laplace,
  bernoulli,
  finite_discrete,
  rademacher,
  poisson,
  pareto,
};

std::string_view family_name(Family family);
std::optional<Family> family_from_name(std::string_view name);

/// A distribution from the catalog together with exact parameters.
///
/// Parameters are held as exact rationals; decimal and p/q literals from the
/// command line are converted without rounding. Construction validates the
/// parameter ranges and nondegeneracy and throws DomainError otherwise.
///
/// String form: `family:key=value,key=value`, for example
/// `gamma:alpha=3/2,beta=2`, `uniform:a=-1,b=1`, `rademacher`,
/// `finite_discrete:atoms=-1;0;2,probs=1/4;1/2;1/4`.
class DistributionSpec {
 public:
  static DistributionSpec gamma(Rational alpha, Rational beta);
  /// Gamma with alpha = 1; `beta` is the scale.
  static DistributionSpec exponential(Rational beta = 1);
  static DistributionSpec normal(Rational mu, Rational sigma);
  static DistributionSpec uniform(Rational a, Rational b);
  static DistributionSpec laplace(Rational mu, Rational beta);
  static DistributionSpec bernoulli(Rational q);
  static DistributionSpec finite_discrete(std::vector<Rational> atoms, std::vector<Rational> probs);
  static DistributionSpec rademacher();
  static DistributionSpec poisson(Rational alpha);
  static DistributionSpec pareto(Rational alpha);

  /// Throws ParseError on syntax problems and DomainError on invalid values.
  static DistributionSpec parse(std::string_view text);

  Family family() const noexcept { return family_; }
  /// Named scalar parameter; throws std::out_of_range if absent.
  const Rational& param(const std::string& name) const;
  double param_d(const std::string& name) const { return param(name).get_d(); }
  /// Support and weights for finite-support laws (bernoulli, rademacher,
  /// finite_discrete); empty otherwise.
  const std::vector<Rational>& atoms() const noexcept { return atoms_; }
  const std::vector<Rational>& probs() const noexcept { return probs_; }

  /// Canonical `family:key=value` form.
  std::string to_string() const;

  bool has_mgf() const noexcept { return family_ != Family::pareto; }

  /// Whether the k-th moment exists (always, except pareto with k >= alpha).
  bool has_moment(int k) const;

  /// Throws MomentExistenceError when moments up to `d` do not all exist.
  void require_moments(int d) const;

  /// Closed-form raw moment E[X^k], k >= 0.
  Rational moment(int k) const;

 private:
  DistributionSpec(Family family, std::map<std::string, Rational> params);
  void validate() const;

  Family family_;
  std::map<std::string, Rational> params_;
  std::vector<Rational> atoms_;
  std::vector<Rational> probs_;
};

/// Help text listing the catalog with parameter constraints.
std::string distribution_catalog_help();

}  // namespace rvnorm
