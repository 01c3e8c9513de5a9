#pragma once

#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include "rvnorm/distribution.hpp"

namespace rvnorm {

/// Generator used for every random stream in the library.
using Engine = std::mt19937_64;

/// Independent engine for substream `index` of `seed`. The pair is mixed with
/// splitmix64 into a seed sequence, so substreams can be handed to workers in
/// any order and still reproduce the same draws.
Engine substream(std::uint64_t seed, std::uint64_t index);

std::uint64_t splitmix64(std::uint64_t x);

/// Draws variates from a catalog distribution.
///
/// Gamma uses the standard library's rejection sampler; pareto uses inversion
/// X = U^{−1/α}; discrete laws use a cumulative table.
class Sampler {
 public:
  explicit Sampler(const DistributionSpec& spec);
  double operator()(Engine& engine);

 private:
  struct Table {
    std::vector<double> cumulative;
    std::vector<double> atoms;
  };
  struct Laplace {
    double mu;
    double beta;
  };
  struct Pareto {
    double inv_alpha;
  };
  struct Scaled {
    std::gamma_distribution<double> gamma;
    double scale;
  };
  using Law = std::variant<Scaled, std::normal_distribution<double>, std::uniform_real_distribution<double>, Laplace,
                           std::bernoulli_distribution, Table, std::poisson_distribution<long>, Pareto>;
  Law law_;
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

}  // namespace rvnorm
