#include "rvnorm/distribution.hpp"

#include <array>
#include <set>
#include <sstream>
#include <utility>

#include "rvnorm/error.hpp"

namespace rvnorm {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 10> kFamilyNames{{
    {Family::gamma, "gamma"},
    {Family::exponential, "exponential"},
    {Family::normal, "normal"},
    {Family::uniform, "uniform"},
    {Family::laplace, "laplace"},
    {Family::bernoulli, "bernoulli"},
    {Family::finite_discrete, "finite_discrete"},
    {Family::rademacher, "rademacher"},
    {Family::poisson, "poisson"},
    {Family::pareto, "pareto"},
}};

// Required keys and the defaults used when a key is omitted.
struct KeySpec {
  std::string_view name;
  std::optional<int> default_value;
};

std::vector<KeySpec> keys_for(Family family) {
  switch (family) {
    case Family::gamma: return {{"alpha", std::nullopt}, {"beta", std::nullopt}};
    case Family::exponential: return {{"beta", 1}};
    case Family::normal: return {{"mu", 0}, {"sigma", 1}};
    case Family::uniform: return {{"a", std::nullopt}, {"b", std::nullopt}};
    case Family::laplace: return {{"mu", 0}, {"beta", 1}};
    case Family::bernoulli: return {{"q", std::nullopt}};
    case Family::finite_discrete: return {};
    case Family::rademacher: return {};
    case Family::poisson: return {{"alpha", std::nullopt}};
    case Family::pareto: return {{"alpha", std::nullopt}};
  }
  return {};
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<Rational> parse_list(std::string_view text) {
  std::vector<Rational> out;
  for (auto item : split(text, ';')) out.push_back(parse_rational(item));
  return out;
}

std::string join(const std::vector<Rational>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ';';
    out += to_string(values[i]);
  }
  return out;
}

}  // namespace

std::string_view family_name(Family family) {
  for (auto [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "unknown";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (auto [f, n] : kFamilyNames) {
    if (n == name) return f;
  }
  return std::nullopt;
}

DistributionSpec::DistributionSpec(Family family, std::map<std::string, Rational> params)
    : family_(family), params_(std::move(params)) {
  for (auto& [name, value] : params_) value.canonicalize();
  if (family_ == Family::bernoulli) {
    if (auto it = params_.find("q"); it != params_.end()) {
      atoms_ = {Rational(0), Rational(1)};
      probs_ = {1 - it->second, it->second};
    }
  }
}

DistributionSpec DistributionSpec::gamma(Rational alpha, Rational beta) {
  DistributionSpec s(Family::gamma, {{"alpha", std::move(alpha)}, {"beta", std::move(beta)}});
  s.validate();
  return s;
}

DistributionSpec DistributionSpec::exponential(Rational beta) {
  DistributionSpec s(Family::exponential, {{"beta", std::move(beta)}});
  s.validate();
  return s;
}

DistributionSpec DistributionSpec::normal(Rational mu, Rational sigma) {
  DistributionSpec s(Family::normal, {{"mu", std::move(mu)}, {"sigma", std::move(sigma)}});
  s.validate();
  return s;
}

DistributionSpec DistributionSpec::uniform(Rational a, Rational b) {
  DistributionSpec s(Family::uniform, {{"a", std::move(a)}, {"b", std::move(b)}});
  s.validate();
  return s;
}

DistributionSpec DistributionSpec::laplace(Rational mu, Rational beta) {
  DistributionSpec s(Family::laplace, {{"mu", std::move(mu)}, {"beta", std::move(beta)}});
  s.validate();
  return s;
}

DistributionSpec DistributionSpec::bernoulli(Rational q) {
  DistributionSpec s(Family::bernoulli, {{"q", std::move(q)}});
  s.validate();
  return s;
}

DistributionSpec DistributionSpec::finite_discrete(std::vector<Rational> atoms, std::vector<Rational> probs) {
  DistributionSpec s(Family::finite_discrete, {});
  s.atoms_ = std::move(atoms);
  s.probs_ = std::move(probs);
  s.validate();
  return s;
}

DistributionSpec DistributionSpec::rademacher() {
  DistributionSpec s(Family::rademacher, {});
  s.atoms_ = {Rational(-1), Rational(1)};
  s.probs_ = {Rational(1) / 2, Rational(1) / 2};
  return s;
}

DistributionSpec DistributionSpec::poisson(Rational alpha) {
  DistributionSpec s(Family::poisson, {{"alpha", std::move(alpha)}});
  s.validate();
  return s;
}

DistributionSpec DistributionSpec::pareto(Rational alpha) {
  DistributionSpec s(Family::pareto, {{"alpha", std::move(alpha)}});
  s.validate();
  return s;
}

void DistributionSpec::validate() const {
  auto positive = [&](const char* key) {
    if (param(key) <= 0) throw DomainError(std::string(family_name(family_)) + ": " + key + " must be positive");
  };
  switch (family_) {
    case Family::gamma:
      positive("alpha");
      positive("beta");
      break;
    case Family::exponential:
      positive("beta");
      break;
    case Family::normal:
      positive("sigma");
      break;
    case Family::uniform:
      if (!(param("a") < param("b"))) throw DomainError("uniform: need a < b");
      break;
    case Family::laplace:
      positive("beta");
      break;
    case Family::bernoulli:
      if (!(param("q") > 0 && param("q") < 1)) throw DomainError("bernoulli: need 0 < q < 1");
      break;
    case Family::finite_discrete: {
      if (atoms_.size() != probs_.size()) throw DomainError("finite_discrete: atoms and probs differ in length");
      std::set<Rational> distinct(atoms_.begin(), atoms_.end());
      if (distinct.size() != atoms_.size()) throw DomainError("finite_discrete: atoms must be distinct");
      if (atoms_.size() < 2) throw DomainError("finite_discrete: need at least two atoms (nondegenerate)");
      Rational total = 0;
      for (const auto& q : probs_) {
        if (q <= 0) throw DomainError("finite_discrete: probabilities must be positive");
        total += q;
      }
      if (total != 1) throw DomainError("finite_discrete: probabilities must sum to 1, got " + rvnorm::to_string(total));
      break;
    }
    case Family::rademacher:
      break;
    case Family::poisson:
      positive("alpha");
      break;
    case Family::pareto:
      positive("alpha");
      break;
  }
}

DistributionSpec DistributionSpec::parse(std::string_view text) {
  auto colon = text.find(':');
  std::string_view name = text.substr(0, colon);
  auto family = family_from_name(name);
  if (!family) throw ParseError("unknown distribution family '" + std::string(name) + "'");

  std::map<std::string, std::string_view> raw;
  if (colon != std::string_view::npos && colon + 1 < text.size()) {
    for (auto item : split(text.substr(colon + 1), ',')) {
      auto eq = item.find('=');
      if (eq == std::string_view::npos || eq == 0) {
        throw ParseError("expected key=value in distribution string, got '" + std::string(item) + "'");
      }
      std::string key(item.substr(0, eq));
      if (!raw.emplace(key, item.substr(eq + 1)).second) throw ParseError("duplicate key '" + key + "'");
    }
  }

  if (*family == Family::finite_discrete) {
    auto atoms = raw.find("atoms");
    auto probs = raw.find("probs");
    if (atoms == raw.end() || probs == raw.end() || raw.size() != 2) {
      throw ParseError("finite_discrete needs exactly atoms=...;... and probs=...;...");
    }
    return finite_discrete(parse_list(atoms->second), parse_list(probs->second));
  }
  if (*family == Family::rademacher) {
    if (!raw.empty()) throw ParseError("rademacher takes no parameters");
    return rademacher();
  }

  std::map<std::string, Rational> params;
  for (const auto& key : keys_for(*family)) {
    std::string k(key.name);
    if (auto it = raw.find(k); it != raw.end()) {
      params.emplace(k, parse_rational(it->second));
      raw.erase(it);
    } else if (key.default_value) {
      params.emplace(k, Rational(*key.default_value));
    } else {
      throw ParseError(std::string(name) + ": missing parameter '" + k + "'");
    }
  }
  if (!raw.empty()) throw ParseError(std::string(name) + ": unknown parameter '" + raw.begin()->first + "'");
  DistributionSpec s(*family, std::move(params));
  s.validate();
  return s;
}

const Rational& DistributionSpec::param(const std::string& name) const { return params_.at(name); }

std::string DistributionSpec::to_string() const {
  std::string out(family_name(family_));
  if (family_ == Family::finite_discrete) {
    return out + ":atoms=" + join(atoms_) + ",probs=" + join(probs_);
  }
  char sep = ':';
  for (const auto& key : keys_for(family_)) {
    out += sep;
    out += std::string(key.name) + "=" + rvnorm::to_string(param(std::string(key.name)));
    sep = ',';
  }
  return out;
}

bool DistributionSpec::has_moment(int k) const {
  if (family_ != Family::pareto) return true;
  return Rational(k) < param("alpha");
}

void DistributionSpec::require_moments(int d) const {
  if (!has_moment(d)) {
    throw MomentExistenceError("pareto: moment of order " + std::to_string(d) +
                               " does not exist (requires d < alpha = " + rvnorm::to_string(param("alpha")) + ")");
  }
}

Rational DistributionSpec::moment(int k) const {
  if (k < 0) throw std::invalid_argument("moment order must be nonnegative");
  if (k == 0) return 1;
  switch (family_) {
    case Family::gamma: {
      const Rational& alpha = param("alpha");
      Rational out = pow(param("beta"), static_cast<unsigned>(k));
      for (int j = 0; j < k; ++j) out *= alpha + j;
      return out;
    }
    case Family::exponential:
      return Rational(factorial(static_cast<unsigned>(k))) * pow(param("beta"), static_cast<unsigned>(k));
    case Family::normal: {
      const Rational& mu = param("mu");
      Rational var = param("sigma") * param("sigma");
      Rational prev2 = 1;
      Rational prev1 = mu;
      for (int j = 2; j <= k; ++j) {
        Rational next = mu * prev1 + (j - 1) * var * prev2;
        prev2 = std::move(prev1);
        prev1 = std::move(next);
      }
      return prev1;
    }
    case Family::uniform: {
      const Rational& a = param("a");
      const Rational& b = param("b");
      Rational h = 0;
      for (int j = 0; j <= k; ++j) h += pow(a, static_cast<unsigned>(j)) * pow(b, static_cast<unsigned>(k - j));
      return h / (k + 1);
    }
    case Family::laplace: {
      const Rational& mu = param("mu");
      const Rational& beta = param("beta");
      Rational out = 0;
      for (int j = 0; j <= k; j += 2) {
        out += Rational(binomial(static_cast<unsigned>(k), static_cast<unsigned>(j)) * factorial(static_cast<unsigned>(j))) *
               pow(mu, static_cast<unsigned>(k - j)) * pow(beta, static_cast<unsigned>(j));
      }
      return out;
    }
    case Family::bernoulli:
      return param("q");
    case Family::finite_discrete:
    case Family::rademacher: {
      Rational out = 0;
      for (std::size_t j = 0; j < atoms_.size(); ++j) out += pow(atoms_[j], static_cast<unsigned>(k)) * probs_[j];
      return out;
    }
    case Family::poisson: {
      // Touchard recurrence: mu_{m+1} = alpha * sum_j C(m, j) mu_j.
      const Rational& alpha = param("alpha");
      std::vector<Rational> mu{Rational(1)};
      for (int m = 0; m < k; ++m) {
        Rational s = 0;
        for (int j = 0; j <= m; ++j) s += Rational(binomial(static_cast<unsigned>(m), static_cast<unsigned>(j))) * mu[static_cast<std::size_t>(j)];
        mu.push_back(alpha * s);
      }
      return mu.back();
    }
    case Family::pareto: {
      require_moments(k);
      const Rational& alpha = param("alpha");
      return alpha / (alpha - k);
    }
  }
  return 0;
}

std::string distribution_catalog_help() {
  std::ostringstream os;
  os << "Distributions (family:key=value,...; values accept p/q and decimals):\n"
     << "  gamma:alpha=A,beta=B          A > 0, B > 0 (shape, scale)\n"
     << "  exponential[:beta=B]          B > 0, default 1\n"
     << "  normal[:mu=M,sigma=S]         S > 0, defaults mu=0, sigma=1\n"
     << "  uniform:a=A,b=B               A < B\n"
     << "  laplace[:mu=M,beta=B]         B > 0, defaults mu=0, beta=1\n"
     << "  bernoulli:q=Q                 0 < Q < 1\n"
     << "  finite_discrete:atoms=a1;a2;...,probs=q1;q2;...\n"
     << "                                >= 2 distinct atoms, q_j > 0, sum q_j = 1\n"
     << "  rademacher                    +-1 with probability 1/2\n"
     << "  poisson:alpha=A               A > 0\n"
     << "  pareto:alpha=A                A > 0; moments exist only below order A, no MGF\n";
  return os.str();
}

}  // namespace rvnorm
