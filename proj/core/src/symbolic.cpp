#include "rvnorm/symbolic.hpp"

#include <algorithm>

#include <json.hpp>

#include "rvnorm/error.hpp"
#include "rvnorm/partitions.hpp"
#include "rvnorm/trace_words.hpp"

namespace rvnorm {

namespace {

bool factor_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

nlohmann::json integer_json(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

TracePolynomial build(const CumulantVector* kappas, int d, FormulaMode mode) {
  if (d < 2 || d % 2 != 0) throw DomainError("symbolic formulas need an even degree d >= 2");
  if (kappas && kappas->degree() < d) throw std::invalid_argument("need cumulants up to the degree");
  TracePolynomial poly(d, mode, kappas == nullptr);
  const Rational placements(binomial(static_cast<unsigned>(d), static_cast<unsigned>(d / 2)));

  for (const auto& p : enumerate_partitions(d)) {
    Rational weight = Rational(1) / Rational(y_of(p));
    std::vector<int> kappa_parts;
    if (kappas) {
      weight *= kappa_product(p, *kappas);
      if (weight == 0) continue;
    } else {
      kappa_parts.assign(p.parts().begin(), p.parts().end());
    }

    if (mode == FormulaMode::hermitian) {
      TraceMonomial m{kappa_parts, {}};
      for (int part : p.parts()) m.factors.emplace_back(static_cast<std::size_t>(part), 'A');
      poly.add(std::move(m), weight);
      continue;
    }

    const Rational per_placement = weight / placements;
    for_each_adjoint_placement(d, [&](std::uint32_t mask) {
      poly.add(TraceMonomial{kappa_parts, placement_words(mask, p)}, per_placement);
    });
  }
  return poly;
}

}  // namespace

bool TraceMonomialLess::operator()(const TraceMonomial& a, const TraceMonomial& b) const {
  if (a.factors != b.factors) {
    return std::lexicographical_compare(a.factors.begin(), a.factors.end(), b.factors.begin(), b.factors.end(),
                                        factor_less);
  }
  // Reverse-lexicographic partition order for the cumulant monomial.
  return a.kappa > b.kappa;
}

TraceMonomial TracePolynomial::normalise(TraceMonomial m) const {
  for (auto& f : m.factors) {
    if (mode_ == FormulaMode::general) f = TraceWord(f).canonical();
  }
  std::sort(m.factors.begin(), m.factors.end(), factor_less);
  std::sort(m.kappa.begin(), m.kappa.end(), std::greater<>());
  return m;
}

void TracePolynomial::add(TraceMonomial monomial, const Rational& coeff) {
  if (coeff == 0) return;
  auto key = normalise(std::move(monomial));
  auto [it, inserted] = terms_.emplace(std::move(key), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational TracePolynomial::coefficient(TraceMonomial monomial) const {
  auto it = terms_.find(normalise(std::move(monomial)));
  return it == terms_.end() ? Rational(0) : it->second;
}

Complex TracePolynomial::evaluate(const ComplexMatrix& z, std::span<const double> kappas) const {
  if (symbolic_kappa_ && static_cast<int>(kappas.size()) < degree_) {
    throw std::invalid_argument("symbolic formula needs numeric cumulants to evaluate");
  }
  TraceCache cache(z);
  Complex sum(0.0);
  for (const auto& [m, c] : terms_) {
    Complex term(c.get_d());
    if (symbolic_kappa_) {
      for (int part : m.kappa) term *= kappas[static_cast<std::size_t>(part - 1)];
    }
    for (const auto& f : m.factors) {
      std::string word = f;
      if (mode_ == FormulaMode::hermitian) std::replace(word.begin(), word.end(), 'A', 'Z');
      term *= cache.trace(word);
    }
    sum += term;
  }
  return sum;
}

std::string render_factor(const std::string& word) {
  if (!word.empty() && word.front() == 'A') {
    return word.size() == 1 ? "tr(A)" : "tr(A^" + std::to_string(word.size()) + ")";
  }
  return "tr(" + TraceWord::pretty(word) + ")";
}

std::string TracePolynomial::to_text() const {
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string line = to_string(c);
    for (std::size_t i = 0; i < m.kappa.size();) {
      std::size_t j = i;
      while (j < m.kappa.size() && m.kappa[j] == m.kappa[i]) ++j;
      line += " k" + std::to_string(m.kappa[i]);
      if (j - i > 1) line += "^" + std::to_string(j - i);
      i = j;
    }
    for (std::size_t i = 0; i < m.factors.size();) {
      std::size_t j = i;
      while (j < m.factors.size() && m.factors[j] == m.factors[i]) ++j;
      line += " " + render_factor(m.factors[i]);
      if (j - i > 1) line += "^" + std::to_string(j - i);
      i = j;
    }
    out += line + "\n";
  }
  return out;
}

std::string TracePolynomial::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    nlohmann::json t;
    t["coeff"] = nlohmann::json::array({integer_json(c.get_num()), integer_json(c.get_den())});
    if (symbolic_kappa_) t["kappa"] = m.kappa;
    t["factors"] = m.factors;
    terms.push_back(std::move(t));
  }
  nlohmann::json doc;
  doc["degree"] = degree_;
  doc["mode"] = mode_ == FormulaMode::general ? "general" : "hermitian";
  doc["kappa"] = symbolic_kappa_ ? "symbolic" : "substituted";
  doc["terms"] = std::move(terms);
  return doc.dump();
}

TracePolynomial symbolic_formula(const CumulantVector& kappas, int d, FormulaMode mode) {
  return build(&kappas, d, mode);
}

TracePolynomial symbolic_formula(int d, FormulaMode mode) { return build(nullptr, d, mode); }

}  // namespace rvnorm
