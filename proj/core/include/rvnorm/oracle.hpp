#pragma once

#include <cstdint>
#include <span>

#include "rvnorm/distribution.hpp"
#include "rvnorm/matrix.hpp"

namespace rvnorm {

/// Sample mean with its standard error; `std_error` = s / √samples.
struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

struct McOptions {
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 0x5eed;
  /// Worker cap; 0 uses the hardware concurrency. The estimate does not
  /// depend on the worker count.
  unsigned threads = 0;
};

/// Samples per substream. Each block draws from its own substream and block
/// results are merged by a fixed pairwise tree.
inline constexpr std::size_t kMcBlockSize = 1 << 14;

/// Estimates E|Σ λ_i X_i|^d / d! for any integer d >= 2.
/// Requires samples >= 10^4; pareto additionally needs d < alpha.
McEstimate mc_norm_pow(std::span<const double> lambdas, const DistributionSpec& spec, int d, const McOptions& options);

/// |||A|||_{X,d} for Hermitian A from its eigenvalues, with the standard error
/// propagated through the d-th root to first order.
McEstimate mc_norm(const ComplexMatrix& a, const DistributionSpec& spec, int d, const McOptions& options);

/// Khintchine constant a_p for Rademacher sums: a_2 = 1, otherwise
/// γ_p = √2 π^{−1/(2p)} Γ((p+1)/2)^{1/p}.
double khintchine_constant(int p);

struct KhintchineBounds {
  double lower;   // ‖Z‖_F
  double middle;  // Γ(p+1)^{1/p} |||Z|||_{Rademacher,p}
  double upper;   // a_p ‖Z‖_F
  bool holds;     // lower <= middle <= upper within 1e−9·scale
};

/// Evaluates both sides of the Rademacher norm equivalence for even p,
/// using the Hermitian path when Z is Hermitian and the word path otherwise.
KhintchineBounds khintchine_check(const ComplexMatrix& z, int p);

}  // namespace rvnorm
