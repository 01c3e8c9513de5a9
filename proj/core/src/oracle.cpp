#include "rvnorm/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "rvnorm/error.hpp"
#include "rvnorm/norm_engine.hpp"
#include "rvnorm/sampler.hpp"

namespace rvnorm {

namespace {

struct Moments {
  double count = 0.0;
  double mean = 0.0;
  double m2 = 0.0;
};

// Chan et al. pairwise merge of running mean / sum of squared deviations.
Moments merge(const Moments& a, const Moments& b) {
  if (a.count == 0.0) return b;
  if (b.count == 0.0) return a;
  Moments out;
  out.count = a.count + b.count;
  const double delta = b.mean - a.mean;
  out.mean = a.mean + delta * b.count / out.count;
  out.m2 = a.m2 + b.m2 + delta * delta * a.count * b.count / out.count;
  return out;
}

Moments tree_reduce(std::span<const Moments> blocks) {
  if (blocks.empty()) return {};
  if (blocks.size() == 1) return blocks.front();
  const std::size_t half = blocks.size() / 2;
  return merge(tree_reduce(blocks.first(half)), tree_reduce(blocks.subspan(half)));
}

Moments run_block(std::span<const double> lambdas, const DistributionSpec& spec, int d, std::uint64_t seed,
                  std::size_t block, std::size_t count) {
  Engine engine = substream(seed, block);
  Sampler sampler(spec);
  Moments m;
  for (std::size_t s = 0; s < count; ++s) {
    double lambda_sum = 0.0;
    for (double l : lambdas) lambda_sum += l * sampler(engine);
    const double v = std::pow(std::abs(lambda_sum), d);
    m.count += 1.0;
    const double delta = v - m.mean;
    m.mean += delta / m.count;
    m.m2 += delta * (v - m.mean);
  }
  return m;
}

}  // namespace

McEstimate mc_norm_pow(std::span<const double> lambdas, const DistributionSpec& spec, int d, const McOptions& options) {
  if (d < 2) throw DomainError("mc_norm_pow needs d >= 2");
  if (options.samples < 10'000) throw DomainError("mc_norm_pow needs at least 10^4 samples");
  spec.require_moments(d);

  McEstimate est;
  est.samples = options.samples;
  est.seed = options.seed;
  if (std::all_of(lambdas.begin(), lambdas.end(), [](double l) { return l == 0.0; })) return est;

  const std::size_t blocks = (options.samples + kMcBlockSize - 1) / kMcBlockSize;
  std::vector<Moments> results(blocks);
  unsigned workers = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, blocks));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t b = next++; b < blocks; b = next++) {
      const std::size_t count = std::min(kMcBlockSize, options.samples - b * kMcBlockSize);
      results[b] = run_block(lambdas, spec, d, options.seed, b, count);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  const Moments total = tree_reduce(results);
  const double fact = std::tgamma(d + 1.0);
  est.value = total.mean / fact;
  const double variance = total.count > 1 ? total.m2 / (total.count - 1.0) : 0.0;
  est.std_error = std::sqrt(variance / total.count) / fact;
  return est;
}

McEstimate mc_norm(const ComplexMatrix& a, const DistributionSpec& spec, int d, const McOptions& options) {
  if (!is_hermitian(a)) {
    throw DomainError("Monte Carlo oracle needs a Hermitian matrix; use the circle-average check for general Z");
  }
  const auto eig = hermitian_eigenvalues(a);
  McEstimate pow_est = mc_norm_pow(eig.values, spec, d, options);
  McEstimate out = pow_est;
  if (pow_est.value <= 0.0) {
    out.value = 0.0;
    out.std_error = 0.0;
    return out;
  }
  out.value = std::pow(pow_est.value, 1.0 / d);
  out.std_error = pow_est.std_error * out.value / (d * pow_est.value);
  return out;
}

double khintchine_constant(int p) {
  if (p < 2) throw DomainError("Khintchine constant needs p >= 2");
  if (p == 2) return 1.0;
  const double inv = 1.0 / p;
  return std::sqrt(2.0) * std::pow(std::sqrt(std::numbers::pi), -inv) * std::pow(std::tgamma((p + 1) / 2.0), inv);
}

KhintchineBounds khintchine_check(const ComplexMatrix& z, int p) {
  if (p < 2 || p % 2 != 0) throw DomainError("Khintchine check supports even p >= 2 only");
  const InducedNorm norm(DistributionSpec::rademacher(), p);
  const double pow_value = is_hermitian(z) ? norm.hermitian_pow(z) : norm.general_pow(z);
  KhintchineBounds b{};
  b.lower = frobenius_norm(z);
  b.middle = std::pow(std::tgamma(p + 1.0), 1.0 / p) * std::pow(std::max(pow_value, 0.0), 1.0 / p);
  b.upper = khintchine_constant(p) * b.lower;
  const double slack = 1e-9 * std::max(1.0, b.upper);
  b.holds = b.lower <= b.middle + slack && b.middle <= b.upper + slack;
  return b;
}

}  // namespace rvnorm
