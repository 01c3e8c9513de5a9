#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "rvnorm/distribution.hpp"
#include "rvnorm/matrix.hpp"

namespace rvnorm {

/// One parameter set per catalog family, used by the property suites.
/// Pareto uses alpha = 12 so that the fourth-power estimator has finite variance.
std::vector<DistributionSpec> catalog_examples();

namespace gen {

using Rng = std::mt19937_64;

/// Entries uniform on [−1, 1] (real and imaginary parts).
ComplexMatrix general_matrix(Rng& rng, std::size_t n);
/// (G + G*) / 2 for a general G.
ComplexMatrix hermitian_matrix(Rng& rng, std::size_t n);
/// Product of n random Householder reflections.
ComplexMatrix unitary_matrix(Rng& rng, std::size_t n);
/// Integers in [−range, range] over denominators 1..den; not all zero.
std::vector<Rational> rational_vector(Rng& rng, std::size_t n, int range = 5, int den = 4);
/// Real symmetric matrix with small rational entries.
RationalMatrix rational_symmetric(Rng& rng, std::size_t n);
/// Uniform integer in [lo, hi].
int uniform_int(Rng& rng, int lo, int hi);
double uniform_real(Rng& rng, double lo, double hi);

/// x obtained from y by `transfers` Robin-Hood moves: a random amount up to
/// y_i − y_j passes from a larger entry to a smaller one. Then x ≺ y.
std::vector<double> robin_hood(Rng& rng, std::vector<double> y, int transfers);

}  // namespace gen

struct VerifyOptions {
  std::uint64_t seed = 20240229;
  /// Trials per (family, degree) cell; 0 selects the suite default.
  int trials = 0;
};

struct SuiteReport {
  std::string suite;
  long long trials = 0;
  long long failure_count = 0;
  /// First few failure descriptions.
  std::vector<std::string> failures;

  bool passed() const noexcept { return failure_count == 0; }
  void fail(std::string message);
};

inline constexpr std::string_view kSuiteNames[] = {"axioms", "schur", "paths", "hunter", "khintchine"};

/// Triangle inequality, homogeneity and strict positivity, Hermitian and general
/// pairs, every family, d ∈ {2, 4}. Default 1000 trials.
SuiteReport verify_axioms(const VerifyOptions& options);
/// norm(diag x) <= norm(diag y) for x ≺ y, every family, d ∈ {2, 4}. Default 500.
SuiteReport verify_schur(const VerifyOptions& options);
/// Partition, series and word paths agree; circle average matches; exact
/// rational series/partition identity. d ∈ {2, 4, 6}. Default 50.
SuiteReport verify_paths(const VerifyOptions& options);
/// H_{d,α} > 0 and the recursion matches exactly. Default 1000.
SuiteReport verify_hunter(const VerifyOptions& options);
/// Rademacher norm equivalence at p ∈ {2, 4, 6}. Default 200.
SuiteReport verify_khintchine(const VerifyOptions& options);

/// Runs one suite by name, or all of them for "all". Throws
/// std::invalid_argument for an unknown name.
std::vector<SuiteReport> run_suites(std::string_view name, const VerifyOptions& options);

/// {"suite", "trials", "failure_count", "failures": [...]}, or an array of them.
std::string report_json(const std::vector<SuiteReport>& reports);

}  // namespace rvnorm
