#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "rvnorm/cumulants.hpp"
#include "rvnorm/matrix.hpp"
#include "rvnorm/rational.hpp"

namespace rvnorm {

enum class FormulaMode { hermitian, general };

/// One product of traces, optionally with a cumulant monomial κ_π attached.
///
/// General-mode factors are canonical words over {'Z', 's'}; Hermitian-mode
/// factors are runs of 'A' (the word "AAA" stands for tr A^3). Factors are
/// kept sorted: longer words first, then lexicographically.
struct TraceMonomial {
  std::vector<int> kappa;  // parts of π for κ_π; empty once cumulants are substituted
  std::vector<std::string> factors;
};

struct TraceMonomialLess {
  bool operator()(const TraceMonomial& a, const TraceMonomial& b) const;
};

/// Rational linear combination of trace monomials of a fixed degree.
class TracePolynomial {
 public:
  TracePolynomial(int degree, FormulaMode mode, bool symbolic_kappa)
      : degree_(degree), mode_(mode), symbolic_kappa_(symbolic_kappa) {}

  int degree() const noexcept { return degree_; }
  FormulaMode mode() const noexcept { return mode_; }
  bool symbolic_kappa() const noexcept { return symbolic_kappa_; }
  const std::map<TraceMonomial, Rational, TraceMonomialLess>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Adds `coeff` to the term; factors are canonicalised and sorted first.
  /// Terms whose coefficient becomes zero are removed.
  void add(TraceMonomial monomial, const Rational& coeff);

  /// Coefficient of the monomial (after canonicalisation), zero if absent.
  Rational coefficient(TraceMonomial monomial) const;

  /// Numeric value at Z; `kappas` (κ_1 first) is required in symbolic mode.
  Complex evaluate(const ComplexMatrix& z, std::span<const double> kappas = {}) const;

  /// One term per line: `<p/q> [k1^a k2^b ...] tr(...)^e tr(...)`.
  std::string to_text() const;

  /// {"degree", "mode", "kappa": "symbolic"|"substituted",
  ///  "terms": [{"coeff": [p, q], "kappa": [...], "factors": ["ZZss", ...]}]}
  std::string to_json() const;

 private:
  TraceMonomial normalise(TraceMonomial m) const;

  int degree_;
  FormulaMode mode_;
  bool symbolic_kappa_;
  std::map<TraceMonomial, Rational, TraceMonomialLess> terms_;
};

/// Trace-polynomial form of |||Z|||^d with the given (exact) cumulants.
/// General mode collects κ_π / (y_π C(d, d/2)) per word placement; Hermitian
/// mode gives Σ_π κ_π p_π / y_π with p_π written as products of tr A^k.
/// Throws DomainError for odd d.
TracePolynomial symbolic_formula(const CumulantVector& kappas, int d, FormulaMode mode);

/// Same with the cumulants left symbolic as κ monomials.
TracePolynomial symbolic_formula(int d, FormulaMode mode);

/// Readable factor, e.g. "tr(Z^2 Z*^2)" or "tr(A^3)".
std::string render_factor(const std::string& word);

}  // namespace rvnorm
