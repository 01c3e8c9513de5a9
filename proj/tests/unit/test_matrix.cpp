#include <gtest/gtest.h>

#include <cmath>

#include "rvnorm/error.hpp"
#include "rvnorm/matrix.hpp"
#include "rvnorm/verify.hpp"

using namespace rvnorm;

namespace {

const Complex I(0.0, 1.0);

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1.0}); }

}  // namespace

TEST(Hermitian, Fixtures) {
  EXPECT_TRUE(is_hermitian(ComplexMatrix::identity(3), 0.0));
  EXPECT_FALSE(is_hermitian(ComplexMatrix{{0, I}, {0, 0}}, 0.0));
  EXPECT_TRUE(is_hermitian(ComplexMatrix{{1, 2.0 + I}, {2.0 - I, 3}}, 0.0));
  EXPECT_FALSE(is_hermitian(ComplexMatrix{{I, 0}, {0, 1}}, 0.0));
}

TEST(TracePowers, Fixtures) {
  const std::vector<double> d{1, 2};
  const auto p = trace_powers(diagonal_matrix(d), 3);
  EXPECT_EQ(p, (std::vector<Complex>{3, 5, 9}));
  for (Complex v : trace_powers(ComplexMatrix(3), 5)) EXPECT_EQ(v, Complex(0));
  EXPECT_EQ(hermitian_trace_powers(ComplexMatrix{{0, 1}, {1, 0}}, 4), (std::vector<double>{0, 2, 0, 2}));
}

TEST(TracePowers, SimilarityInvariance) {
  gen::Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto n = static_cast<std::size_t>(gen::uniform_int(rng, 1, 6));
    const auto a = gen::general_matrix(rng, n);
    const auto u = gen::unitary_matrix(rng, n);
    const auto b = u * a * adjoint(u);
    const auto pa = trace_powers(a, 6);
    const auto pb = trace_powers(b, 6);
    for (std::size_t k = 0; k < pa.size(); ++k) EXPECT_LT(rel(pa[k], pb[k]), 1e-10);
  }
}

TEST(Unitary, IsUnitary) {
  gen::Rng rng(4);
  const auto u = gen::unitary_matrix(rng, 5);
  const auto e = u * adjoint(u) - ComplexMatrix::identity(5);
  EXPECT_LT(max_abs_entry(e), 1e-13);
}

TEST(Eigen, Fixtures) {
  const std::vector<double> d{3, 1, 2};
  EXPECT_EQ(hermitian_eigenvalues(diagonal_matrix(d)).values, (std::vector<double>{3, 2, 1}));
  const auto swap = hermitian_eigenvalues(ComplexMatrix{{0, 1}, {1, 0}}).values;
  EXPECT_NEAR(swap[0], 1, 1e-14);
  EXPECT_NEAR(swap[1], -1, 1e-14);
  const auto c = hermitian_eigenvalues(ComplexMatrix{{2, 1.0 + I}, {1.0 - I, 3}}).values;
  EXPECT_NEAR(c[0], 4, 1e-13);
  EXPECT_NEAR(c[1], 1, 1e-13);
  EXPECT_THROW(hermitian_eigenvalues(ComplexMatrix{{0, 1}, {0, 0}}), DomainError);
}

TEST(Eigen, PowerSumsMatchTraces) {
  gen::Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const auto n = static_cast<std::size_t>(gen::uniform_int(rng, 1, 8));
    const auto a = gen::hermitian_matrix(rng, n);
    const auto lam = hermitian_eigenvalues(a).values;
    EXPECT_TRUE(std::is_sorted(lam.rbegin(), lam.rend()));
    const auto tr = hermitian_trace_powers(a, 8);
    for (int k = 1; k <= 8; ++k) {
      double s = 0;
      for (double l : lam) s += std::pow(l, k);
      // Odd power sums can cancel; compare against the absolute scale.
      double scale = 0;
      for (double l : lam) scale += std::pow(std::abs(l), k);
      EXPECT_NEAR(s, tr[static_cast<std::size_t>(k - 1)], 1e-9 * std::max(scale, 1e-300)) << "k=" << k;
    }
  }
}

TEST(Majorization, Fixtures) {
  const std::vector<double> a{1, 1}, b{2, 0};
  EXPECT_TRUE(is_majorized(a, b));
  EXPECT_FALSE(is_majorized(b, a));
  const std::vector<double> c{1, 1, 1}, e{3, 0, 0};
  EXPECT_TRUE(is_majorized(c, e));
  EXPECT_FALSE(is_majorized(e, c));
  const std::vector<double> f{1, 2};
  EXPECT_FALSE(is_majorized(a, f));  // totals differ
  const std::vector<double> g{1};
  EXPECT_THROW(is_majorized(a, g), std::invalid_argument);
}

TEST(Majorization, ExactRationals) {
  const std::vector<Rational> x{(Rational(1) / 3), (Rational(1) / 3), (Rational(1) / 3)};
  const std::vector<Rational> y{Rational(1), Rational(0), Rational(0)};
  EXPECT_TRUE(is_majorized(x, y));
  EXPECT_FALSE(is_majorized(y, x));
}

TEST(Majorization, ReflexiveAndTransitive) {
  gen::Rng rng(6);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> z(static_cast<std::size_t>(gen::uniform_int(rng, 2, 7)));
    for (auto& v : z) v = gen::uniform_real(rng, -3, 3);
    const auto y = gen::robin_hood(rng, z, 2);
    const auto x = gen::robin_hood(rng, y, 2);
    EXPECT_TRUE(is_majorized(z, z));
    EXPECT_TRUE(is_majorized(y, z));
    EXPECT_TRUE(is_majorized(x, y));
    EXPECT_TRUE(is_majorized(x, z));
  }
}

TEST(MatrixJson, RoundTrip) {
  const ComplexMatrix z{{1.5, 2.0 + I}, {-I, 0.25}};
  EXPECT_EQ(parse_matrix_json(matrix_to_json(z)), z);
  const auto real = parse_matrix_json(R"({"n": 2, "re": [[1, "1/4"], [0, 2]]})");
  EXPECT_EQ(real(0, 1), Complex(0.25));
}

TEST(MatrixJson, Rejects) {
  EXPECT_THROW(parse_matrix_json("{"), ParseError);
  EXPECT_THROW(parse_matrix_json(R"({"n": 2, "re": [[1, 2]]})"), ParseError);
  EXPECT_THROW(parse_matrix_json(R"({"n": 2, "re": [[1, 2], [3]]})"), ParseError);
  EXPECT_THROW(parse_matrix_json(R"({"n": 1, "re": [["x"]]})"), ParseError);
  EXPECT_THROW(parse_matrix_json(R"({"n": 1, "re": [[1e999]]})"), ParseError);
  EXPECT_THROW(load_matrix_json("/nonexistent/matrix.json"), ParseError);
}

TEST(MatrixJson, ExactRational) {
  const auto a = parse_rational_matrix_json(R"({"n": 2, "re": [["1/3", 2], [2, "0.5"]]})");
  EXPECT_EQ(a(0, 0), (Rational(1) / 3));
  EXPECT_EQ(a(1, 1), (Rational(1) / 2));
  EXPECT_THROW(parse_rational_matrix_json(R"({"n": 1, "re": [[1]], "im": [[1]]})"), ParseError);
}
