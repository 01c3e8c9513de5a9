#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "rvnorm/closed_forms.hpp"
#include "rvnorm/error.hpp"
#include "rvnorm/norm_engine.hpp"
#include "rvnorm/sympoly.hpp"
#include "rvnorm/verify.hpp"

using namespace rvnorm;

namespace {

const Complex I(0.0, 1.0);

Complex tr(const ComplexMatrix& m) { return m.trace(); }

double rel(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

// Exact E[(Σ λ_i X_i)^d] / d! for a finite-support law by enumerating outcomes.
Rational discrete_expectation(const std::vector<Rational>& lambdas, const DistributionSpec& spec, int d) {
  const auto& atoms = spec.atoms();
  const auto& probs = spec.probs();
  Rational total = 0;
  std::vector<std::size_t> idx(lambdas.size(), 0);
  std::function<void(std::size_t, Rational, Rational)> rec = [&](std::size_t i, Rational s, Rational p) {
    if (i == lambdas.size()) {
      total += p * pow(s, static_cast<unsigned>(d));
      return;
    }
    for (std::size_t a = 0; a < atoms.size(); ++a) rec(i + 1, s + lambdas[i] * atoms[a], p * probs[a]);
  };
  rec(0, 0, 1);
  return total / Rational(factorial(static_cast<unsigned>(d)));
}

}  // namespace

TEST(Bell, Fixtures) {
  EXPECT_EQ(bell_value<Rational>(0, std::span<const Rational>{}), 1);
  const std::vector<Rational> x{2, 3, 5, 7};
  EXPECT_EQ(bell_value<Rational>(2, x), 4 + 3);
  EXPECT_EQ(bell_value<Rational>(4, x), 16 + 6 * 4 * 3 + 4 * 2 * 5 + 3 * 9 + 7);
}

TEST(Bell, MatchesBinomialRecursion) {
  // B_{n+1} = Σ_k C(n,k) B_{n−k} x_{k+1}.
  const std::vector<Rational> x{(Rational(1) / 2), -3, (Rational(2) / 7), 5, -1, (Rational(4) / 3), 2, 9};
  std::vector<Rational> b{1};
  for (unsigned n = 0; n < 8; ++n) {
    Rational next = 0;
    for (unsigned k = 0; k <= n; ++k) next += Rational(binomial(n, k)) * b[n - k] * x[k];
    b.push_back(next);
  }
  for (int ell = 0; ell <= 8; ++ell) EXPECT_EQ(bell_value<Rational>(ell, x), b[static_cast<std::size_t>(ell)]);
}

TEST(Hermitian, ExponentialIsCompleteHomogeneous) {
  gen::Rng rng(21);
  for (int d : {2, 4, 6, 8}) {
    const auto lam = gen::rational_vector(rng, 4);
    const auto a = RationalMatrix::diagonal<Rational>(lam);
    EXPECT_EQ(hermitian_norm_pow(a, DistributionSpec::exponential(), d), chs<Rational>(d, lam));
  }
}

TEST(Hermitian, NormalDegreeTwo) {
  gen::Rng rng(22);
  const auto a = gen::hermitian_matrix(rng, 4);
  const double expect = 0.5 * (a * a).trace().real();
  EXPECT_LT(rel(hermitian_norm_pow(a, DistributionSpec::normal(0, 1), 2), expect), 1e-13);
}

TEST(Hermitian, RademacherDegreeFour) {
  const Rational l1(3, 2), l2(-2);
  const RationalMatrix a{{l1, 0}, {0, l2}};
  const Rational want = (pow(l1, 4) + 6 * l1 * l1 * l2 * l2 + pow(l2, 4)) / 24;
  EXPECT_EQ(hermitian_norm_pow(a, DistributionSpec::rademacher(), 4), want);
}

TEST(Hermitian, FiniteSupportMatchesEnumeration) {
  gen::Rng rng(23);
  const std::vector<DistributionSpec> laws{
      DistributionSpec::rademacher(), DistributionSpec::bernoulli((Rational(1) / 3)),
      DistributionSpec::parse("finite_discrete:atoms=-1;0;2,probs=1/4;1/2;1/4")};
  for (const auto& spec : laws) {
    for (int d : {2, 4, 6}) {
      const auto lam = gen::rational_vector(rng, 3);
      EXPECT_EQ(hermitian_norm_pow(RationalMatrix::diagonal<Rational>(lam), spec, d), discrete_expectation(lam, spec, d))
          << spec.to_string() << " d=" << d;
    }
  }
}

TEST(Hermitian, ClosedFormsAgreeExactly) {
  gen::Rng rng(24);
  for (int d : {2, 4, 6}) {
    const auto lam = gen::rational_vector(rng, 4);
    const auto a = RationalMatrix::diagonal<Rational>(lam);
    const Rational alpha(3, 2), beta(2), mu(1, 2), sigma(3);
    EXPECT_EQ(hermitian_norm_pow(a, DistributionSpec::gamma(alpha, beta), d),
              gamma_product_norm_pow<Rational>(lam, alpha, beta, d));
    Rational trace = 0, fro = 0;
    for (const auto& l : lam) {
      trace += l;
      fro += l * l;
    }
    EXPECT_EQ(hermitian_norm_pow(a, DistributionSpec::normal(mu, sigma), d),
              normal_norm_pow<Rational>(trace, fro, mu, sigma, d));
    EXPECT_EQ(hermitian_norm_pow(a, DistributionSpec::laplace(mu, beta), d),
              laplace_norm_pow<Rational>(lam, mu, beta, d));
    EXPECT_EQ(hermitian_norm_pow(a, DistributionSpec::pareto(9), d), pareto_norm_pow<Rational>(lam, 9, d));
  }
}

TEST(Hermitian, NormalFastPathNonDiagonal) {
  // Normal-family fast path on a non-diagonal real symmetric matrix.
  const RationalMatrix a{{1, 2}, {2, -3}};
  const Rational t = -2, f = 1 + 4 + 4 + 9;
  EXPECT_EQ(hermitian_norm_pow(a, DistributionSpec::normal(1, 2), 4), normal_norm_pow<Rational>(t, f, 1, 2, 4));
}

TEST(Series, Fixtures) {
  EXPECT_EQ(series_norm_pow(ComplexMatrix(3), DistributionSpec::gamma(2, 3), 4), 0.0);
  const RationalMatrix id2 = RationalMatrix::identity(2);
  EXPECT_EQ(series_norm_pow(id2, DistributionSpec::laplace(1, 1), 2), 4);
  EXPECT_EQ(hermitian_norm_pow(id2, DistributionSpec::laplace(1, 1), 2), 4);
}

TEST(Series, GammaBinomialSeries) {
  gen::Rng rng(25);
  for (int d : {2, 4, 6}) {
    const std::vector<double> lam{gen::uniform_real(rng, -1, 1), gen::uniform_real(rng, -1, 1)};
    const double want = gamma_product_norm_pow<double>(lam, 1.5, 2.0, d);
    EXPECT_LT(rel(series_norm_pow(diagonal_matrix(lam), DistributionSpec::gamma((Rational(3) / 2), 2), d), want), 1e-12);
  }
}

TEST(Series, RejectsPareto) {
  EXPECT_THROW(series_norm_pow(ComplexMatrix::identity(2), DistributionSpec::pareto(10), 4), DomainError);
}

TEST(TPi, DegreeTwo) {
  gen::Rng rng(26);
  const auto z = gen::general_matrix(rng, 3);
  const auto zs = adjoint(z);
  EXPECT_LT(rel(t_pi(z, Partition({2})), tr(zs * z).real()), 1e-13);
  EXPECT_LT(rel(t_pi(z, Partition({1, 1})), (tr(zs) * tr(z)).real()), 1e-13);
}

TEST(TPi, ThreeOne) {
  gen::Rng rng(27);
  const auto z = gen::general_matrix(rng, 3);
  const auto zs = adjoint(z);
  const Complex want = 3.0 * tr(zs * zs * z) * tr(z) + 3.0 * tr(z * z * zs) * tr(zs);
  EXPECT_LT(std::abs(6.0 * t_pi(z, Partition({3, 1})) - want), 1e-12 * std::abs(want));
}

TEST(TPi, PlacementCount) {
  for (int d : {2, 4, 6, 8}) {
    for (const auto& p : enumerate_partitions(d)) {
      EXPECT_EQ(placement_count(p), binomial(static_cast<unsigned>(d), static_cast<unsigned>(d / 2)).get_ui());
    }
  }
  EXPECT_THROW(t_pi(ComplexMatrix::identity(2), Partition({2, 1})), DomainError);
}

TEST(General, DegreeTwoFormula) {
  gen::Rng rng(28);
  const auto spec = DistributionSpec::gamma((Rational(3) / 2), 2);
  const double k1 = 3, k2 = 6;
  for (int t = 0; t < 10; ++t) {
    const auto z = gen::general_matrix(rng, 3);
    const auto zs = adjoint(z);
    const double want = (k2 / 2 * tr(zs * z) + k1 * k1 / 2 * tr(zs) * tr(z)).real();
    EXPECT_LT(rel(general_norm_pow(z, spec, 2), want), 1e-12);
  }
}

TEST(General, UniformDegreeFour) {
  gen::Rng rng(29);
  const auto spec = DistributionSpec::uniform(-1, 1);
  for (int t = 0; t < 10; ++t) {
    const auto z = gen::general_matrix(rng, 3);
    const auto zs = adjoint(z);
    const Complex c = 10.0 * tr(z * zs) * tr(z * zs) + 5.0 * tr(z * z) * tr(zs * zs) - 4.0 * tr(z * z * zs * zs) -
                      2.0 * tr(z * zs * z * zs);
    EXPECT_LT(rel(general_norm_pow(z, spec, 4), c.real() / 1080), 1e-12);
  }
}

TEST(General, UniformDegreeSixHermitian) {
  gen::Rng rng(30);
  const auto a = gen::hermitian_matrix(rng, 4);
  const auto a2 = a * a;
  const double t2 = tr(a2).real(), t4 = tr(a2 * a2).real(), t6 = tr(a2 * a2 * a2).real();
  const double want = (35 * t2 * t2 * t2 - 42 * t4 * t2 + 16 * t6) / 45360;
  const auto spec = DistributionSpec::uniform(-1, 1);
  EXPECT_LT(rel(general_norm_pow(a, spec, 6), want), 1e-11);
  EXPECT_LT(rel(hermitian_norm_pow(a, spec, 6), want), 1e-11);
}

TEST(General, RestrictsToHermitian) {
  gen::Rng rng(31);
  for (const auto& spec : catalog_examples()) {
    const auto a = gen::hermitian_matrix(rng, 4);
    EXPECT_LT(rel(general_norm_pow(a, spec, 4), hermitian_norm_pow(a, spec, 4)), 1e-10) << spec.to_string();
  }
}

TEST(Norm, Fixtures) {
  const auto spec = DistributionSpec::exponential();
  EXPECT_EQ(norm(ComplexMatrix(2), spec, 4), 0.0);
  EXPECT_NEAR(norm(ComplexMatrix::identity(2), spec, 2), std::sqrt(3.0), 1e-15);
  gen::Rng rng(32);
  const auto z = gen::general_matrix(rng, 3);
  EXPECT_LT(rel(norm(z * Complex(-2.5), spec, 4), 2.5 * norm(z, spec, 4)), 1e-13);
}

TEST(Norm, UnitaryInvariance) {
  gen::Rng rng(33);
  for (const auto& spec : catalog_examples()) {
    const auto z = gen::general_matrix(rng, 3);
    const auto u = gen::unitary_matrix(rng, 3);
    EXPECT_LT(rel(norm(u * z * adjoint(u), spec, 4), norm(z, spec, 4)), 1e-9) << spec.to_string();
  }
}

TEST(Norm, Preconditions) {
  const auto id = ComplexMatrix::identity(2);
  EXPECT_THROW(norm(id, DistributionSpec::exponential(), 3), DomainError);
  EXPECT_THROW(norm(id, DistributionSpec::exponential(), 0), DomainError);
  EXPECT_THROW(hermitian_norm_pow(ComplexMatrix{{0, 1}, {0, 0}}, DistributionSpec::exponential(), 2), DomainError);
  EXPECT_THROW(norm(id, DistributionSpec::pareto(3), 4), MomentExistenceError);
}

TEST(Norm, LargeAndSmallScales) {
  const auto spec = DistributionSpec::uniform(-1, 1);
  gen::Rng rng(34);
  const auto z = gen::general_matrix(rng, 3);
  const double base = norm(z, spec, 8);
  EXPECT_LT(rel(norm(z * Complex(1e120), spec, 8), 1e120 * base), 1e-12);
  EXPECT_LT(rel(norm(z * Complex(1e-120), spec, 8), 1e-120 * base), 1e-12);
}

TEST(Circle, Fixtures) {
  const auto spec = DistributionSpec::exponential();
  const auto nil = circle_extension_check(ComplexMatrix{{0, 1}, {0, 0}}, spec, 2, 3);
  EXPECT_NEAR(nil.quadrature, 0.5, 1e-15);
  EXPECT_NEAR(nil.algebraic, 0.5, 1e-15);
  const auto zero = circle_extension_check(ComplexMatrix(2), spec, 4, 5);
  EXPECT_EQ(zero.quadrature, 0.0);
  EXPECT_EQ(zero.algebraic, 0.0);
  EXPECT_THROW(circle_extension_check(ComplexMatrix(2), spec, 4, 4), DomainError);
}

TEST(Circle, HermitianReducesToNorm) {
  gen::Rng rng(35);
  const auto a = gen::hermitian_matrix(rng, 3);
  const auto spec = DistributionSpec::laplace(1, 1);
  const auto c = circle_extension_check(a, spec, 4, 5);
  EXPECT_LT(rel(c.quadrature, hermitian_norm_pow(a, spec, 4)), 1e-12);
  EXPECT_LT(rel(c.quadrature, c.algebraic), 1e-12);
}
