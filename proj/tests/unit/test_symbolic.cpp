#include <gtest/gtest.h>

#include <json.hpp>

#include "rvnorm/error.hpp"
#include "rvnorm/norm_engine.hpp"
#include "rvnorm/symbolic.hpp"
#include "rvnorm/trace_words.hpp"
#include "rvnorm/verify.hpp"

using namespace rvnorm;

namespace {

TraceMonomial M(std::vector<std::string> factors, std::vector<int> kappa = {}) {
  return TraceMonomial{std::move(kappa), std::move(factors)};
}

std::string brute_min_rotation(const std::string& w) {
  std::string best = w;
  for (std::size_t i = 1; i < w.size(); ++i) best = std::min(best, w.substr(i) + w.substr(0, i));
  return best;
}

}  // namespace

TEST(TraceWords, MinimalRotationMatchesBruteForce) {
  gen::Rng rng(41);
  for (int t = 0; t < 500; ++t) {
    std::string w(static_cast<std::size_t>(gen::uniform_int(rng, 1, 12)), 'Z');
    for (auto& c : w) c = gen::uniform_int(rng, 0, 1) ? 's' : 'Z';
    EXPECT_EQ(minimal_rotation(w), brute_min_rotation(w)) << w;
    EXPECT_EQ(TraceWord(w).canonical(), brute_min_rotation(w));
  }
  EXPECT_THROW(TraceWord("Zx"), std::invalid_argument);
}

TEST(TraceWords, Rendering) {
  EXPECT_EQ(render_factor("ZZss"), "tr(Z^2 Z*^2)");
  EXPECT_EQ(render_factor("ZsZs"), "tr(Z Z* Z Z*)");
  EXPECT_EQ(render_factor("s"), "tr(Z*)");
  EXPECT_EQ(render_factor("AAA"), "tr(A^3)");
}

TEST(TraceWords, PlacementsAreBalanced) {
  int count = 0;
  for_each_adjoint_placement(6, [&](std::uint32_t mask) {
    EXPECT_EQ(__builtin_popcount(mask), 3);
    ++count;
  });
  EXPECT_EQ(count, 20);
  const auto words = placement_words(0b0101u, Partition({3, 1}));
  ASSERT_EQ(words.size(), 2u);
  EXPECT_EQ(words[0].size(), 3u);
  EXPECT_EQ(words[1].size(), 1u);
}

TEST(Formula, GenericDegreeTwo) {
  const auto f = symbolic_formula(2, FormulaMode::general);
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(f.coefficient(M({"Zs"}, {2})), (Rational(1) / 2));
  EXPECT_EQ(f.coefficient(M({"Z", "s"}, {1, 1})), (Rational(1) / 2));
  EXPECT_EQ(f.coefficient(M({"sZ"}, {2})), (Rational(1) / 2));
}

TEST(Formula, ExponentialDegreeFourTenTerms) {
  const auto f = symbolic_formula(distribution_cumulants(DistributionSpec::exponential(), 4), 4, FormulaMode::general);
  const std::vector<std::pair<std::vector<std::string>, int>> want{
      {{"Z", "Z", "s", "s"}, 1}, {{"ss", "Z", "Z"}, 1}, {{"Zs", "Z", "s"}, 4}, {{"Zs", "Zs"}, 2},
      {{"ZZ", "s", "s"}, 1},     {{"ZZ", "ss"}, 1},     {{"ZZs", "s"}, 4},     {{"Zss", "Z"}, 4},
      {{"ZsZs"}, 2},             {{"ZZss"}, 4}};
  EXPECT_EQ(f.size(), want.size());
  for (const auto& [factors, c] : want) EXPECT_EQ(f.coefficient(M(factors)), (Rational(c) / 24));
}

TEST(Formula, UniformDegreeFour) {
  const auto f = symbolic_formula(distribution_cumulants(DistributionSpec::uniform(-1, 1), 4), 4, FormulaMode::general);
  EXPECT_EQ(f.size(), 4u);
  EXPECT_EQ(f.coefficient(M({"Zs", "Zs"})), (Rational(10) / 1080));
  EXPECT_EQ(f.coefficient(M({"ZZ", "ss"})), (Rational(5) / 1080));
  EXPECT_EQ(f.coefficient(M({"ZZss"})), (Rational(-4) / 1080));
  EXPECT_EQ(f.coefficient(M({"ZsZs"})), (Rational(-2) / 1080));
}

TEST(Formula, UniformDegreeSixHermitian) {
  const auto f =
      symbolic_formula(distribution_cumulants(DistributionSpec::uniform(-1, 1), 6), 6, FormulaMode::hermitian);
  EXPECT_EQ(f.size(), 3u);
  EXPECT_EQ(f.coefficient(M({"AA", "AA", "AA"})), (Rational(35) / 45360));
  EXPECT_EQ(f.coefficient(M({"AAAA", "AA"})), (Rational(-42) / 45360));
  EXPECT_EQ(f.coefficient(M({"AAAAAA"})), (Rational(16) / 45360));
}

TEST(Formula, PoissonDegreeFourHermitian) {
  // With κ_i = α every κ_π is α^{|π|}; the generic form shows the powers.
  const auto g = symbolic_formula(4, FormulaMode::hermitian);
  EXPECT_EQ(g.size(), 5u);
  EXPECT_EQ(g.coefficient(M({"A", "A", "A", "A"}, {1, 1, 1, 1})), (Rational(1) / 24));
  EXPECT_EQ(g.coefficient(M({"AA", "A", "A"}, {2, 1, 1})), (Rational(6) / 24));
  EXPECT_EQ(g.coefficient(M({"AAA", "A"}, {3, 1})), (Rational(4) / 24));
  EXPECT_EQ(g.coefficient(M({"AA", "AA"}, {2, 2})), (Rational(3) / 24));
  EXPECT_EQ(g.coefficient(M({"AAAA"}, {4})), (Rational(1) / 24));
  const auto f = symbolic_formula(distribution_cumulants(DistributionSpec::poisson(3), 4), 4, FormulaMode::hermitian);
  EXPECT_EQ(f.coefficient(M({"A", "A", "A", "A"})), (Rational(81) / 24));
  EXPECT_EQ(f.coefficient(M({"AA", "A", "A"})), (Rational(6 * 27) / 24));
  EXPECT_EQ(f.coefficient(M({"AAA", "A"})), (Rational(4 * 9) / 24));
  EXPECT_EQ(f.coefficient(M({"AA", "AA"})), (Rational(3 * 9) / 24));
  EXPECT_EQ(f.coefficient(M({"AAAA"})), (Rational(3) / 24));
}

TEST(Formula, TermsAreBalancedWords) {
  for (int d : {2, 4, 6, 8}) {
    const auto f = symbolic_formula(d, FormulaMode::general);
    for (const auto& [m, c] : f.terms()) {
      int letters = 0, adjoints = 0;
      for (const auto& w : m.factors) {
        letters += static_cast<int>(w.size());
        adjoints += static_cast<int>(std::count(w.begin(), w.end(), 's'));
        EXPECT_EQ(w, minimal_rotation(w));
      }
      EXPECT_EQ(letters, d);
      EXPECT_EQ(adjoints, d / 2);
      EXPECT_NE(c, 0);
    }
  }
}

TEST(Formula, ConjugatePairsStaySeparate) {
  const auto f = symbolic_formula(4, FormulaMode::general);
  const auto a = f.coefficient(M({"ZZs", "s"}, {3, 1}));
  const auto b = f.coefficient(M({"Zss", "Z"}, {3, 1}));
  EXPECT_EQ(a, (Rational(1) / 12));
  EXPECT_EQ(b, (Rational(1) / 12));
}

TEST(Formula, EvaluatesToEngineValue) {
  gen::Rng rng(42);
  for (const auto& spec : catalog_examples()) {
    for (int d : {2, 4, 6}) {
      const auto k = distribution_cumulants(spec, d);
      const auto f = symbolic_formula(k, d, FormulaMode::general);
      const auto g = symbolic_formula(d, FormulaMode::general);
      const auto z = gen::general_matrix(rng, 3);
      const double want = general_norm_pow(z, spec, d);
      const auto kd = k.as<double>();
      EXPECT_NEAR(f.evaluate(z).real(), want, 1e-10 * std::abs(want)) << spec.to_string();
      EXPECT_NEAR(g.evaluate(z, kd).real(), want, 1e-10 * std::abs(want)) << spec.to_string();
      const auto h = symbolic_formula(k, d, FormulaMode::hermitian);
      const auto a = gen::hermitian_matrix(rng, 3);
      const double ha = hermitian_norm_pow(a, spec, d);
      EXPECT_NEAR(h.evaluate(a).real(), ha, 1e-10 * std::abs(ha)) << spec.to_string();
    }
  }
}

TEST(Formula, TextAndJson) {
  const auto f = symbolic_formula(distribution_cumulants(DistributionSpec::uniform(-1, 1), 4), 4, FormulaMode::general);
  EXPECT_EQ(f.to_text(),
            "-1/270 tr(Z^2 Z*^2)\n"
            "-1/540 tr(Z Z* Z Z*)\n"
            "1/216 tr(Z^2) tr(Z*^2)\n"
            "1/108 tr(Z Z*)^2\n");
  const auto doc = nlohmann::json::parse(f.to_json());
  EXPECT_EQ(doc["degree"], 4);
  EXPECT_EQ(doc["mode"], "general");
  ASSERT_EQ(doc["terms"].size(), 4u);
  EXPECT_EQ(doc["terms"][0]["coeff"], nlohmann::json::parse("[-1, 270]"));
  EXPECT_EQ(doc["terms"][0]["factors"], nlohmann::json::parse(R"(["ZZss"])"));
  EXPECT_EQ(symbolic_formula(2, FormulaMode::general).to_text(), "1/2 k2 tr(Z Z*)\n1/2 k1^2 tr(Z) tr(Z*)\n");
}

TEST(Formula, RejectsOddDegree) {
  EXPECT_THROW(symbolic_formula(3, FormulaMode::general), DomainError);
}
