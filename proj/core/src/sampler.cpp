#include "rvnorm/sampler.hpp"

#include <algorithm>
#include <cmath>

namespace rvnorm {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Engine substream(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t a = splitmix64(seed);
  const std::uint64_t b = splitmix64(a ^ splitmix64(index + 0x632be59bd9b4e019ULL));
  const std::uint64_t c = splitmix64(b);
  std::seed_seq seq{static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32), static_cast<std::uint32_t>(c),
                    static_cast<std::uint32_t>(c >> 32)};
  return Engine(seq);
}

Sampler::Sampler(const DistributionSpec& spec) : law_([&]() -> Law {
  switch (spec.family()) {
    case Family::gamma:
      return Scaled{std::gamma_distribution<double>(spec.param_d("alpha"), 1.0), spec.param_d("beta")};
    case Family::exponential:
      return Scaled{std::gamma_distribution<double>(1.0, 1.0), spec.param_d("beta")};
    case Family::normal:
      return std::normal_distribution<double>(spec.param_d("mu"), spec.param_d("sigma"));
    case Family::uniform:
      return std::uniform_real_distribution<double>(spec.param_d("a"), spec.param_d("b"));
    case Family::laplace:
      return Laplace{spec.param_d("mu"), spec.param_d("beta")};
    case Family::bernoulli:
      return std::bernoulli_distribution(spec.param_d("q"));
    case Family::finite_discrete:
    case Family::rademacher: {
      Table t;
      double acc = 0.0;
      for (std::size_t j = 0; j < spec.atoms().size(); ++j) {
        acc += spec.probs()[j].get_d();
        t.cumulative.push_back(acc);
        t.atoms.push_back(spec.atoms()[j].get_d());
      }
      t.cumulative.back() = 1.0;
      return t;
    }
    case Family::poisson:
      return std::poisson_distribution<long>(spec.param_d("alpha"));
    case Family::pareto:
      return Pareto{1.0 / spec.param_d("alpha")};
  }
  return Pareto{1.0};
}()) {}

double Sampler::operator()(Engine& engine) {
  struct Visitor {
    Engine& engine;
    std::uniform_real_distribution<double>& unit;
    double operator()(Scaled& s) const { return s.scale * s.gamma(engine); }
    double operator()(std::normal_distribution<double>& d) const { return d(engine); }
    double operator()(std::uniform_real_distribution<double>& d) const { return d(engine); }
    double operator()(const Laplace& l) const {
      const double u = unit(engine) - 0.5;
      const double mag = -std::log1p(-2.0 * std::abs(u));
      return l.mu + (u < 0 ? -l.beta : l.beta) * mag;
    }
    double operator()(std::bernoulli_distribution& d) const { return d(engine) ? 1.0 : 0.0; }
    double operator()(const Table& t) const {
      const double u = unit(engine);
      auto it = std::upper_bound(t.cumulative.begin(), t.cumulative.end(), u);
      if (it == t.cumulative.end()) --it;
      return t.atoms[static_cast<std::size_t>(it - t.cumulative.begin())];
    }
    double operator()(std::poisson_distribution<long>& d) const { return static_cast<double>(d(engine)); }
    double operator()(const Pareto& p) const {
      const double u = 1.0 - unit(engine);  // (0, 1]
      return std::pow(u, -p.inv_alpha);
    }
  };
  return std::visit(Visitor{engine, unit_}, law_);
}

}  // namespace rvnorm
