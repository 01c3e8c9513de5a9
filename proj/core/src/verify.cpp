#include "rvnorm/verify.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "rvnorm/closed_forms.hpp"
#include "rvnorm/norm_engine.hpp"
#include "rvnorm/oracle.hpp"
#include "rvnorm/sampler.hpp"
#include "rvnorm/sympoly.hpp"

namespace rvnorm {

std::vector<DistributionSpec> catalog_examples() {
  return {
      DistributionSpec::gamma(Rational(3, 2), Rational(2)),
      DistributionSpec::exponential(Rational(1)),
      DistributionSpec::normal(Rational(1, 2), Rational(1)),
      DistributionSpec::uniform(Rational(-1), Rational(1)),
      DistributionSpec::laplace(Rational(1), Rational(1)),
      DistributionSpec::bernoulli(Rational(1, 3)),
      DistributionSpec::finite_discrete({Rational(-1), Rational(0), Rational(2)},
                                        {Rational(1, 4), Rational(1, 2), Rational(1, 4)}),
      DistributionSpec::rademacher(),
      DistributionSpec::poisson(Rational(2)),
      DistributionSpec::pareto(Rational(12)),
  };
}

namespace gen {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

double uniform_real(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

ComplexMatrix general_matrix(Rng& rng, std::size_t n) {
  ComplexMatrix z(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) z(i, j) = Complex(uniform_real(rng, -1, 1), uniform_real(rng, -1, 1));
  }
  return z;
}

ComplexMatrix hermitian_matrix(Rng& rng, std::size_t n) {
  const ComplexMatrix g = general_matrix(rng, n);
  ComplexMatrix h = g + adjoint(g);
  h *= Complex(0.5);
  for (std::size_t i = 0; i < n; ++i) h(i, i) = Complex(h(i, i).real(), 0.0);
  return h;
}

ComplexMatrix unitary_matrix(Rng& rng, std::size_t n) {
  ComplexMatrix u = ComplexMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<Complex> v(n);
    double norm_sq = 0.0;
    for (auto& x : v) {
      x = Complex(uniform_real(rng, -1, 1), uniform_real(rng, -1, 1));
      norm_sq += std::norm(x);
    }
    ComplexMatrix h = ComplexMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) h(i, j) -= 2.0 * v[i] * std::conj(v[j]) / norm_sq;
    }
    u = u * h;
  }
  return u;
}

std::vector<Rational> rational_vector(Rng& rng, std::size_t n, int range, int den) {
  std::vector<Rational> x(n);
  bool nonzero = false;
  while (!nonzero) {
    for (auto& v : x) {
      v = Rational(uniform_int(rng, -range * den, range * den), uniform_int(rng, 1, den));
      v.canonicalize();
      nonzero = nonzero || v != 0;
    }
  }
  return x;
}

RationalMatrix rational_symmetric(Rng& rng, std::size_t n) {
  RationalMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Rational v(uniform_int(rng, -6, 6), uniform_int(rng, 1, 3));
      v.canonicalize();
      a(i, j) = v;
      a(j, i) = v;
    }
  }
  return a;
}

std::vector<double> robin_hood(Rng& rng, std::vector<double> y, int transfers) {
  const int n = static_cast<int>(y.size());
  if (n < 2) return y;
  for (int t = 0; t < transfers; ++t) {
    int i = uniform_int(rng, 0, n - 1);
    int j = uniform_int(rng, 0, n - 2);
    if (j >= i) ++j;
    if (y[i] < y[j]) std::swap(i, j);
    const double amount = uniform_real(rng, 0.0, 1.0) * (y[i] - y[j]);
    y[i] -= amount;
    y[j] += amount;
  }
  return y;
}

}  // namespace gen

void SuiteReport::fail(std::string message) {
  ++failure_count;
  if (failures.size() < 20) failures.push_back(std::move(message));
}

namespace {

int trials_or(const VerifyOptions& o, int fallback) { return o.trials > 0 ? o.trials : fallback; }

// Independent stream per (suite, cell) so suites can run in any order.
gen::Rng cell_rng(const VerifyOptions& o, std::uint64_t suite, std::uint64_t cell) {
  return substream(o.seed ^ splitmix64(suite), cell);
}

std::string where(const DistributionSpec& spec, int d, int trial) {
  std::ostringstream out;
  out << spec.to_string() << " d=" << d << " trial=" << trial;
  return out.str();
}

double root(double pow_value, int d) { return pow_value <= 0.0 ? 0.0 : std::pow(pow_value, 1.0 / d); }

bool close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max({std::abs(a), std::abs(b), 1e-300}); }

}  // namespace

SuiteReport verify_axioms(const VerifyOptions& options) {
  SuiteReport report;
  report.suite = "axioms";
  const int trials = trials_or(options, 1000);
  const auto families = catalog_examples();
  for (std::size_t f = 0; f < families.size(); ++f) {
    for (int d : {2, 4}) {
      const InducedNorm norm(families[f], d);
      auto rng = cell_rng(options, 1, f * 16 + static_cast<std::size_t>(d));
      for (int t = 0; t < trials; ++t) {
        const auto n = static_cast<std::size_t>(gen::uniform_int(rng, 1, 5));
        const auto tag = where(families[f], d, t);

        const ComplexMatrix a = gen::hermitian_matrix(rng, n);
        const ComplexMatrix b = gen::hermitian_matrix(rng, n);
        const double pa = norm.hermitian_pow(a);
        const double pb = norm.hermitian_pow(b);
        const double na = root(pa, d);
        const double nb = root(pb, d);
        const double nab = root(norm.hermitian_pow(a + b), d);
        report.trials += 3;
        if (!(pa > 0.0 && pb > 0.0)) report.fail("hermitian positivity " + tag);
        if (nab > na + nb + 1e-9 * (na + nb)) report.fail("hermitian triangle " + tag);
        const double c = gen::uniform_real(rng, -3, 3);
        const double nca = root(norm.hermitian_pow(a * Complex(c)), d);
        if (!close(nca, std::abs(c) * na, 1e-12)) report.fail("hermitian homogeneity " + tag);

        const ComplexMatrix z = gen::general_matrix(rng, n);
        const ComplexMatrix w = gen::general_matrix(rng, n);
        const double pz = norm.general_pow(z);
        const double pw = norm.general_pow(w);
        const double nz = root(pz, d);
        const double nw = root(pw, d);
        const double nzw = root(norm.general_pow(z + w), d);
        report.trials += 3;
        if (!(pz > 0.0 && pw > 0.0)) report.fail("general positivity " + tag);
        if (nzw > nz + nw + 1e-9 * (nz + nw)) report.fail("general triangle " + tag);
        const Complex cz(gen::uniform_real(rng, -3, 3), gen::uniform_real(rng, -3, 3));
        const double ncz = root(norm.general_pow(z * cz), d);
        if (!close(ncz, std::abs(cz) * nz, 1e-12)) report.fail("general homogeneity " + tag);
      }
    }
  }
  return report;
}

SuiteReport verify_schur(const VerifyOptions& options) {
  SuiteReport report;
  report.suite = "schur";
  const int trials = trials_or(options, 500);
  const auto families = catalog_examples();
  for (std::size_t f = 0; f < families.size(); ++f) {
    for (int d : {2, 4}) {
      const InducedNorm norm(families[f], d);
      auto rng = cell_rng(options, 2, f * 16 + static_cast<std::size_t>(d));
      for (int t = 0; t < trials; ++t) {
        const auto n = static_cast<std::size_t>(gen::uniform_int(rng, 2, 6));
        std::vector<double> y(n);
        for (auto& v : y) v = gen::uniform_real(rng, -2, 2);
        const auto x = gen::robin_hood(rng, y, gen::uniform_int(rng, 1, 4));
        ++report.trials;
        const auto tag = where(families[f], d, t);
        if (!is_majorized(x, y, 1e-12)) {
          report.fail("generated pair is not majorized " + tag);
          continue;
        }
        const double nx = root(norm.hermitian_pow(diagonal_matrix(x)), d);
        const double ny = root(norm.hermitian_pow(diagonal_matrix(y)), d);
        if (nx > ny + 1e-12 * std::max(ny, 1.0)) report.fail("Schur convexity " + tag);
      }
    }
  }
  return report;
}

SuiteReport verify_paths(const VerifyOptions& options) {
  SuiteReport report;
  report.suite = "paths";
  const int trials = trials_or(options, 50);
  const auto families = catalog_examples();
  for (std::size_t f = 0; f < families.size(); ++f) {
    const auto& spec = families[f];
    for (int d : {2, 4, 6}) {
      if (!spec.has_moment(d)) continue;
      const InducedNorm norm(spec, d);
      auto rng = cell_rng(options, 3, f * 16 + static_cast<std::size_t>(d));
      for (int t = 0; t < trials; ++t) {
        const auto tag = where(spec, d, t);
        const auto n = static_cast<std::size_t>(gen::uniform_int(rng, 1, 5));
        const ComplexMatrix a = gen::hermitian_matrix(rng, n);
        const double hp = norm.hermitian_pow(a);
        const double wp = norm.general_pow(a);
        report.trials += 2;
        if (!close(hp, wp, 1e-10)) report.fail("words vs partition " + tag);
        if (spec.has_mgf()) {
          ++report.trials;
          if (!close(hp, norm.series_pow(a), 1e-10)) report.fail("series vs partition " + tag);
        }

        // Exact rational identities on a small symmetric matrix and a diagonal one.
        const auto m = static_cast<std::size_t>(gen::uniform_int(rng, 1, 4));
        const RationalMatrix r = gen::rational_symmetric(rng, m);
        const Rational exact = norm.hermitian_pow(r);
        if (spec.has_mgf()) {
          ++report.trials;
          if (exact != norm.series_pow(r)) report.fail("exact series vs partition " + tag);
        }
        const auto lambdas = gen::rational_vector(rng, m);
        ++report.trials;
        const Rational diag = norm.hermitian_pow(RationalMatrix::diagonal<Rational>(lambdas));
        if (diag != mgf_product_norm_pow<Rational>(lambdas, spec, d)) report.fail("exact moment product " + tag);

        if (d <= 4) {
          const auto k = static_cast<std::size_t>(gen::uniform_int(rng, 1, 4));
          const auto check = circle_extension_check(gen::general_matrix(rng, k), spec, d, 2 * d + 1);
          ++report.trials;
          if (!close(check.quadrature, check.algebraic, 1e-9)) report.fail("circle average " + tag);
        }
      }
    }
  }
  return report;
}

SuiteReport verify_hunter(const VerifyOptions& options) {
  SuiteReport report;
  report.suite = "hunter";
  const int trials = trials_or(options, 1000);
  for (int d : {2, 4, 6}) {
    for (int alpha = 1; alpha <= 4; ++alpha) {
      auto rng = cell_rng(options, 4, static_cast<std::uint64_t>(d * 16 + alpha));
      for (int t = 0; t < trials; ++t) {
        const auto x = gen::rational_vector(rng, static_cast<std::size_t>(gen::uniform_int(rng, 1, 5)));
        const Rational direct = hunter_poly<Rational>(d, alpha, x);
        const Rational recursive = hunter_poly_recursive<Rational>(d, alpha, x);
        report.trials += 2;
        const std::string tag = "d=" + std::to_string(d) + " alpha=" + std::to_string(alpha) + " trial=" + std::to_string(t);
        if (!(direct > 0)) report.fail("positivity " + tag);
        if (direct != recursive) report.fail("recursion " + tag);
      }
    }
  }
  return report;
}

SuiteReport verify_khintchine(const VerifyOptions& options) {
  SuiteReport report;
  report.suite = "khintchine";
  const int trials = trials_or(options, 200);
  for (int p : {2, 4, 6}) {
    auto rng = cell_rng(options, 5, static_cast<std::uint64_t>(p));
    for (int t = 0; t < trials; ++t) {
      const auto n = static_cast<std::size_t>(gen::uniform_int(rng, 1, 5));
      for (const ComplexMatrix& z : {gen::hermitian_matrix(rng, n), gen::general_matrix(rng, n)}) {
        const auto b = khintchine_check(z, p);
        ++report.trials;
        const std::string tag = "p=" + std::to_string(p) + " trial=" + std::to_string(t);
        if (!b.holds) report.fail("bounds " + tag);
        if (p == 2 && !close(b.lower, b.middle, 1e-12)) report.fail("p=2 equality " + tag);
      }
    }
  }
  return report;
}

std::vector<SuiteReport> run_suites(std::string_view name, const VerifyOptions& options) {
  if (name == "axioms") return {verify_axioms(options)};
  if (name == "schur") return {verify_schur(options)};
  if (name == "paths") return {verify_paths(options)};
  if (name == "hunter") return {verify_hunter(options)};
  if (name == "khintchine") return {verify_khintchine(options)};
  if (name == "all") {
    return {verify_axioms(options), verify_schur(options), verify_paths(options), verify_hunter(options),
            verify_khintchine(options)};
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::string report_json(const std::vector<SuiteReport>& reports) {
  auto one = [](const SuiteReport& r) {
    return nlohmann::json{{"suite", r.suite},
                          {"trials", r.trials},
                          {"failure_count", r.failure_count},
                          {"failures", r.failures}};
  };
  if (reports.size() == 1) return one(reports.front()).dump(2);
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(one(r));
  return arr.dump(2);
}

}  // namespace rvnorm
