#include "rvnorm/cumulants.hpp"

#include <stdexcept>

#include "rvnorm/error.hpp"

namespace rvnorm {

CumulantVector moments_to_cumulants(std::span<const Rational> mu) {
  return CumulantVector(moments_to_cumulants<Rational>(mu));
}

std::vector<Rational> cumulants_to_moments(const CumulantVector& k) {
  return cumulants_to_moments<Rational>(k.values());
}

Rational bernoulli_number(int r) {
  if (r < 0) throw std::invalid_argument("bernoulli number index must be nonnegative");
  std::vector<Rational> b{Rational(1)};
  for (int m = 1; m <= r; ++m) {
    Rational acc = 0;
    for (int j = 0; j < m; ++j) acc += Rational(binomial(static_cast<unsigned>(m + 1), static_cast<unsigned>(j))) * b[static_cast<std::size_t>(j)];
    b.push_back(-acc / (m + 1));
  }
  return b.back();
}

CumulantVector distribution_cumulants(const DistributionSpec& spec, int d) {
  if (d < 1) throw std::invalid_argument("cumulant degree must be positive");
  spec.require_moments(d);
  std::vector<Rational> kappa;
  kappa.reserve(static_cast<std::size_t>(d));

  auto closed = [&](auto&& formula) {
    for (int r = 1; r <= d; ++r) kappa.push_back(formula(r));
    return CumulantVector(std::move(kappa));
  };
  auto fact = [](int r) { return Rational(factorial(static_cast<unsigned>(r))); };

  switch (spec.family()) {
    case Family::gamma:
      return closed([&](int r) -> Rational {
        return spec.param("alpha") * pow(spec.param("beta"), static_cast<unsigned>(r)) * fact(r - 1);
      });
    case Family::exponential:
      return closed([&](int r) -> Rational { return pow(spec.param("beta"), static_cast<unsigned>(r)) * fact(r - 1); });
    case Family::normal:
      return closed([&](int r) -> Rational {
        if (r == 1) return spec.param("mu");
        if (r == 2) return spec.param("sigma") * spec.param("sigma");
        return 0;
      });
    case Family::uniform:
      return closed([&](int r) -> Rational {
        const Rational& a = spec.param("a");
        const Rational& b = spec.param("b");
        if (r == 1) return (a + b) / 2;
        if (r % 2 == 1) return 0;
        return bernoulli_number(r) / r * pow(b - a, static_cast<unsigned>(r));
      });
    case Family::laplace:
      return closed([&](int r) -> Rational {
        if (r == 1) return spec.param("mu");
        if (r % 2 == 1) return 0;
        return 2 * pow(spec.param("beta"), static_cast<unsigned>(r)) * fact(r - 1);
      });
    case Family::poisson:
      return closed([&](int) -> Rational { return spec.param("alpha"); });
    case Family::bernoulli:
    case Family::finite_discrete:
    case Family::rademacher:
    case Family::pareto: {
      std::vector<Rational> mu;
      mu.reserve(static_cast<std::size_t>(d));
      for (int k = 1; k <= d; ++k) mu.push_back(spec.moment(k));
      return moments_to_cumulants(std::span<const Rational>(mu));
    }
  }
  throw std::logic_error("unhandled distribution family");
}

}  // namespace rvnorm
