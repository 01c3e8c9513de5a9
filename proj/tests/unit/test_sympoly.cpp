#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <set>

#include "rvnorm/norm_engine.hpp"
#include "rvnorm/series.hpp"
#include "rvnorm/sympoly.hpp"
#include "rvnorm/verify.hpp"

using namespace rvnorm;

namespace {

// Σ over nondecreasing index tuples i_1 <= ... <= i_d of x_{i_1}...x_{i_d}.
Rational brute_chs(int d, const std::vector<Rational>& x) {
  Rational total = 0;
  std::function<void(int, std::size_t, Rational)> rec = [&](int left, std::size_t from, Rational prod) {
    if (left == 0) {
      total += prod;
      return;
    }
    for (std::size_t i = from; i < x.size(); ++i) rec(left - 1, i, prod * x[i]);
  };
  rec(d, 0, 1);
  return total;
}

// Σ over distinct assignments of the parts of π to distinct variables.
Rational brute_monomial(const Partition& p, const std::vector<Rational>& x) {
  std::set<std::vector<int>> seen;
  Rational total = 0;
  const std::size_t n = x.size();
  std::vector<int> exps(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == static_cast<std::size_t>(p.length())) {
      if (!seen.insert(exps).second) return;
      Rational t = 1;
      for (std::size_t i = 0; i < n; ++i) t *= pow(x[i], static_cast<unsigned>(exps[i]));
      total += t;
      return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (exps[i] != 0) continue;
      exps[i] = p[j];
      rec(j + 1);
      exps[i] = 0;
    }
  };
  rec(0);
  return total;
}

}  // namespace

TEST(Chs, Fixtures) {
  const std::vector<double> x{2.0, 3.0};
  EXPECT_EQ(chs<double>(0, x), 1.0);
  EXPECT_EQ(chs<double>(2, x), 4.0 + 6.0 + 9.0);
  const std::vector<double> ones{1.0, 1.0};
  EXPECT_EQ(chs<double>(4, ones), 5.0);
}

TEST(Chs, MatchesMonomialSum) {
  gen::Rng rng(51);
  for (int t = 0; t < 50; ++t) {
    const auto x = gen::rational_vector(rng, static_cast<std::size_t>(gen::uniform_int(rng, 1, 6)));
    for (int d = 0; d <= 6; ++d) EXPECT_EQ(chs<Rational>(d, x), brute_chs(d, x));
  }
}

TEST(Chs, PositiveForEvenDegree) {
  gen::Rng rng(52);
  for (int t = 0; t < 300; ++t) {
    const auto x = gen::rational_vector(rng, static_cast<std::size_t>(gen::uniform_int(rng, 1, 6)));
    for (int d : {2, 4, 6, 8}) EXPECT_GT(chs<Rational>(d, x), 0);
  }
}

TEST(PowerSums, Fixtures) {
  const std::vector<Rational> x{1, 2};
  EXPECT_EQ(power_sum_product<Rational>(Partition({2}), x), 5);
  EXPECT_EQ(power_sum_product<Rational>(Partition({1, 1}), x), 9);
  const std::vector<Rational> ones{1, 1, 1};
  EXPECT_EQ(power_sum_product<Rational>(Partition({2, 1}), ones), 9);
}

TEST(Monomial, Fixtures) {
  const std::vector<Rational> x{1, 2, 3};
  EXPECT_EQ(monomial_sym<Rational>(Partition({1}), x), 6);
  EXPECT_EQ(monomial_sym<Rational>(Partition({1, 1}), x), 2 + 3 + 6);
  EXPECT_EQ(monomial_sym<Rational>(Partition({2, 2}), x), 49);
  EXPECT_EQ(monomial_sym<Rational>(Partition({1, 1, 1, 1}), x), 0);
}

TEST(Monomial, MatchesBruteForceAndSumsToChs) {
  gen::Rng rng(53);
  for (int t = 0; t < 30; ++t) {
    const auto x = gen::rational_vector(rng, static_cast<std::size_t>(gen::uniform_int(rng, 1, 5)));
    for (int d = 1; d <= 6; ++d) {
      Rational sum = 0;
      for (const auto& p : enumerate_partitions(d)) {
        const Rational m = monomial_sym<Rational>(p, x);
        EXPECT_EQ(m, brute_monomial(p, x));
        sum += m;
      }
      EXPECT_EQ(sum, chs<Rational>(d, x));
    }
  }
}

TEST(PowerSumIdentity, Fixtures) {
  const std::vector<Rational> ones{1, 1};
  EXPECT_EQ(chs_powersum_identity_check<Rational>(2, ones), std::make_pair(Rational(3), Rational(3)));
  const std::vector<Rational> zeros(4, 0);
  EXPECT_EQ(chs_powersum_identity_check<Rational>(2, zeros), std::make_pair(Rational(0), Rational(0)));
  const std::vector<Rational> alt{1, -1};
  EXPECT_EQ(chs_powersum_identity_check<Rational>(4, alt), std::make_pair(Rational(1), Rational(1)));
}

TEST(PowerSumIdentity, RandomExactAndFloat) {
  gen::Rng rng(54);
  for (int t = 0; t < 50; ++t) {
    const auto x = gen::rational_vector(rng, 4);
    for (int d : {2, 4, 6, 8}) {
      const auto [h, p] = chs_powersum_identity_check<Rational>(d, x);
      EXPECT_EQ(h, p);
      std::vector<double> xd;
      for (const auto& v : x) xd.push_back(v.get_d());
      const auto [hd, pd] = chs_powersum_identity_check<double>(d, xd);
      EXPECT_NEAR(hd, pd, 1e-12 * std::abs(hd));
    }
  }
}

TEST(Hunter, FourThreeExpansion) {
  const auto terms = hunter_terms(4, 3);
  std::map<std::vector<int>, BigInt> got;
  for (const auto& [p, c] : terms) got[{p.parts().begin(), p.parts().end()}] = c;
  const std::map<std::vector<int>, BigInt> want{{{2, 1, 1}, 3}, {{3, 1}, 6}, {{2, 2}, 3}, {{4}, 3}};
  EXPECT_EQ(got, want);
}

TEST(Hunter, SpecialCases) {
  gen::Rng rng(55);
  for (int t = 0; t < 50; ++t) {
    const auto x = gen::rational_vector(rng, 4);
    const auto h = chs_all<Rational>(6, x);
    for (int d : {0, 2, 4, 6}) {
      EXPECT_EQ(hunter_poly<Rational>(d, 1, x), h[static_cast<std::size_t>(d)]);
      Rational two = 0;
      for (int i = 0; i <= d; ++i) two += h[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(d - i)];
      EXPECT_EQ(hunter_poly<Rational>(d, 2, x), two);
      for (int a = 1; a <= 4; ++a) EXPECT_EQ(hunter_poly<Rational>(0, a, x), 1);
    }
    // H_{4,3} = H_{4,2} + h_1 H_{3,2} + h_2 H_{2,2} + h_3 H_{1,2} + h_4.
    const auto h2 = hunter_poly_recursive_all<Rational>(4, 2, x);
    EXPECT_EQ(hunter_poly<Rational>(4, 3, x), h2[4] + h[1] * h2[3] + h[2] * h2[2] + h[3] * h2[1] + h[4]);
  }
}

TEST(Hunter, GeneratingSeriesProduct) {
  gen::Rng rng(56);
  const int L = 10;
  for (int t = 0; t < 10; ++t) {
    const auto x = gen::rational_vector(rng, 3);
    const auto h = chs_all<Rational>(L, x);
    for (int a = 2; a <= 4; ++a) {
      const TruncatedSeries<Rational> hs(h);
      const TruncatedSeries<Rational> prev(hunter_poly_recursive_all<Rational>(L, a - 1, x));
      const auto prod = hs * prev;
      for (int ell = 0; ell <= L; ++ell) EXPECT_EQ(prod[ell], hunter_poly<Rational>(ell, a, x)) << ell;
    }
  }
}

TEST(Hunter, PositiveAndRecursive) {
  gen::Rng rng(57);
  for (int t = 0; t < 200; ++t) {
    const auto x = gen::rational_vector(rng, static_cast<std::size_t>(gen::uniform_int(rng, 1, 5)));
    for (int d : {2, 4, 6}) {
      for (int a = 1; a <= 4; ++a) {
        const Rational v = hunter_poly<Rational>(d, a, x);
        EXPECT_GT(v, 0);
        EXPECT_EQ(v, hunter_poly_recursive<Rational>(d, a, x));
      }
    }
  }
}

TEST(BernoulliMonomialForm, DegreeTwo) {
  const Rational q(1, 3), l1(2), l2(-5);
  const std::vector<Rational> lam{l1, l2};
  EXPECT_EQ(bernoulli_norm_hermitian<Rational>(lam, q, 2), q / 2 * (l1 * l1 + l2 * l2) + q * q * l1 * l2);
  const std::vector<Rational> zero(3, 0);
  EXPECT_EQ(bernoulli_norm_hermitian<Rational>(zero, q, 4), 0);
}

TEST(BernoulliMonomialForm, HalfOnesDegreeFour) {
  const std::vector<Rational> ones{1, 1};
  // X_1 + X_2 takes 0, 1, 2 with weights 1/4, 1/2, 1/4: E S^4 = 9/2.
  EXPECT_EQ(bernoulli_norm_hermitian<Rational>(ones, (Rational(1) / 2), 4), (Rational(9) / 2) / 24);
}

TEST(BernoulliMonomialForm, MatchesCumulantPath) {
  gen::Rng rng(58);
  for (int t = 0; t < 30; ++t) {
    const auto lam = gen::rational_vector(rng, static_cast<std::size_t>(gen::uniform_int(rng, 1, 4)));
    const Rational q = Rational(gen::uniform_int(rng, 1, 8)) / 9;
    for (int d : {2, 4, 6}) {
      EXPECT_EQ(bernoulli_norm_hermitian<Rational>(lam, q, d),
                hermitian_norm_pow(RationalMatrix::diagonal<Rational>(lam), DistributionSpec::bernoulli(q), d));
      std::vector<double> ld;
      for (const auto& v : lam) ld.push_back(v.get_d());
      const double fd = bernoulli_norm_hermitian<double>(ld, q.get_d(), d);
      const double ed = hermitian_norm_pow(diagonal_matrix(ld), DistributionSpec::bernoulli(q), d);
      EXPECT_NEAR(fd, ed, 1e-11 * std::abs(ed));
    }
  }
}
