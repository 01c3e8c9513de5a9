#include "rvnorm/norm_engine.hpp"

#include <cmath>
#include <numbers>

#include "rvnorm/error.hpp"
#include "rvnorm/trace_words.hpp"

namespace rvnorm {

namespace {

void require_even(int d) {
  if (d < 2 || d % 2 != 0) {
    throw DomainError("analytic norm paths need an even degree d >= 2 (got " + std::to_string(d) +
                      "); use the Monte Carlo oracle for odd d");
  }
}

void require_hermitian(const ComplexMatrix& a) {
  if (!all_finite(a)) throw DomainError("matrix has non-finite entries");
  if (!is_hermitian(a)) throw DomainError("matrix is not Hermitian; use the general (words) path");
}

void require_symmetric(const RationalMatrix& a) {
  if (!is_symmetric(a)) throw DomainError("exact path needs a real symmetric matrix");
}

// Pairwise summation keeps the reduction order fixed and the error small.
double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

// Evaluates `f` on Z / s and rescales by s^d.
template <class F>
double scaled(const ComplexMatrix& z, int d, F&& f) {
  if (!all_finite(z)) throw DomainError("matrix has non-finite entries");
  const double s = max_abs_entry(z);
  if (s == 0.0) return 0.0;
  ComplexMatrix unit = z;
  unit *= Complex(1.0 / s);
  return f(unit) * std::pow(s, d);
}

// Σ_π w_π T_π(Z) on a unit-scaled matrix, sharing the trace cache.
double general_sum(const ComplexMatrix& z, const std::vector<Partition>& partitions, std::span<const double> weights,
                   int d) {
  TraceCache cache(z);
  const double placements = binomial(static_cast<unsigned>(d), static_cast<unsigned>(d / 2)).get_d();
  std::vector<double> terms;
  terms.reserve(partitions.size());
  double imag_mass = 0.0;
  double real_mass = 0.0;
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    if (weights[i] == 0.0) continue;
    std::vector<Complex> products;
    for_each_adjoint_placement(d, [&](std::uint32_t mask) {
      Complex prod(1.0);
      for (const auto& w : placement_words(mask, partitions[i])) prod *= cache.trace(minimal_rotation(w));
      products.push_back(prod);
    });
    std::vector<double> re(products.size());
    std::vector<double> im(products.size());
    for (std::size_t k = 0; k < products.size(); ++k) {
      re[k] = products[k].real();
      im[k] = products[k].imag();
      real_mass += std::abs(re[k]);
    }
    const double t = pairwise_sum(re) / placements;
    imag_mass = std::max(imag_mass, std::abs(pairwise_sum(im)) / placements);
    terms.push_back(weights[i] * t);
  }
  if (imag_mass > 1e-10 * std::max(1.0, real_mass)) {
    throw DomainError("trace-word sum has a non-negligible imaginary residue");
  }
  return pairwise_sum(terms);
}

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::partition: return "partition";
    case Method::series: return "series";
    case Method::words: return "words";
  }
  return "unknown";
}

InducedNorm::InducedNorm(const DistributionSpec& spec, int d)
    : spec_(spec), degree_(d), partitions_(enumerate_partitions(d >= 0 ? d : 0)) {
  require_even(d);
  cumulants_ = distribution_cumulants(spec, d);
  if (cumulants_.kappa(2) <= 0) throw DomainError("degenerate distribution: second cumulant is not positive");
  weights_.reserve(partitions_.size());
  for (const auto& p : partitions_) {
    weights_.push_back(kappa_product(p, cumulants_) / Rational(y_of(p)));
    weights_d_.push_back(weights_.back().get_d());
  }
  kappas_d_ = cumulants_.as<double>();
}

double InducedNorm::hermitian_pow(const ComplexMatrix& a) const {
  require_hermitian(a);
  return scaled(a, degree_, [&](const ComplexMatrix& u) {
    auto p = hermitian_trace_powers(u, degree_);
    return from_power_sums<double>(p);
  });
}

Rational InducedNorm::hermitian_pow(const RationalMatrix& a) const {
  require_symmetric(a);
  auto p = trace_powers(a, degree_);
  return from_power_sums<Rational>(p);
}

double InducedNorm::series_pow(const ComplexMatrix& a) const {
  require_hermitian(a);
  return scaled(a, degree_, [&](const ComplexMatrix& u) {
    auto p = hermitian_trace_powers(u, degree_);
    return series_from_power_sums<double>(p);
  });
}

Rational InducedNorm::series_pow(const RationalMatrix& a) const {
  require_symmetric(a);
  auto p = trace_powers(a, degree_);
  return series_from_power_sums<Rational>(p);
}

double InducedNorm::general_pow(const ComplexMatrix& z) const {
  return scaled(z, degree_, [&](const ComplexMatrix& u) { return general_sum(u, partitions_, weights_d_, degree_); });
}

double InducedNorm::pow(const ComplexMatrix& z, Method method) const {
  switch (method) {
    case Method::partition: return hermitian_pow(z);
    case Method::series: return series_pow(z);
    case Method::words: return general_pow(z);
  }
  throw std::logic_error("unhandled method");
}

double InducedNorm::operator()(const ComplexMatrix& z) const {
  // Take the root before rescaling so s^d cannot overflow.
  if (!all_finite(z)) throw DomainError("matrix has non-finite entries");
  const double s = max_abs_entry(z);
  if (s == 0.0) return 0.0;
  ComplexMatrix unit = z;
  unit *= Complex(1.0 / s);
  const double v = general_sum(unit, partitions_, weights_d_, degree_);
  return s * std::pow(std::max(v, 0.0), 1.0 / degree_);
}

double t_pi(const ComplexMatrix& z, const Partition& p) {
  require_even(p.degree());
  const std::vector<Partition> single{p};
  const std::vector<double> one{1.0};
  return general_sum(z, single, one, p.degree());
}

std::size_t placement_count(const Partition& p) {
  std::size_t count = 0;
  for_each_adjoint_placement(p.degree(), [&](std::uint32_t) { ++count; });
  return count;
}

double hermitian_norm_pow(const ComplexMatrix& a, const DistributionSpec& spec, int d) {
  return InducedNorm(spec, d).hermitian_pow(a);
}

Rational hermitian_norm_pow(const RationalMatrix& a, const DistributionSpec& spec, int d) {
  return InducedNorm(spec, d).hermitian_pow(a);
}

double series_norm_pow(const ComplexMatrix& a, const DistributionSpec& spec, int d) {
  return InducedNorm(spec, d).series_pow(a);
}

Rational series_norm_pow(const RationalMatrix& a, const DistributionSpec& spec, int d) {
  return InducedNorm(spec, d).series_pow(a);
}

double general_norm_pow(const ComplexMatrix& z, const DistributionSpec& spec, int d) {
  return InducedNorm(spec, d).general_pow(z);
}

double norm(const ComplexMatrix& z, const DistributionSpec& spec, int d) { return InducedNorm(spec, d)(z); }

CircleCheck circle_extension_check(const ComplexMatrix& z, const DistributionSpec& spec, int d, int points) {
  if (points < d + 1) throw DomainError("circle_extension_check needs at least d + 1 quadrature points");
  const InducedNorm n(spec, d);
  const ComplexMatrix zstar = adjoint(z);
  std::vector<double> samples;
  samples.reserve(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) {
    const double t = 2.0 * std::numbers::pi * k / points;
    const Complex e(std::cos(t), std::sin(t));
    ComplexMatrix h = z * e + zstar * std::conj(e);
    // Symmetrise to remove rounding asymmetry before the Hermitian check.
    ComplexMatrix hs = (h + adjoint(h)) * Complex(0.5);
    samples.push_back(n.hermitian_pow(hs));
  }
  const double placements = binomial(static_cast<unsigned>(d), static_cast<unsigned>(d / 2)).get_d();
  return {pairwise_sum(samples) / points / placements, n.general_pow(z)};
}

}  // namespace rvnorm
