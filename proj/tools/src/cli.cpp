#include "rvnorm/cli.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rvnorm/cumulants.hpp"
#include "rvnorm/distribution.hpp"
#include "rvnorm/error.hpp"
#include "rvnorm/matrix.hpp"
#include "rvnorm/norm_engine.hpp"
#include "rvnorm/oracle.hpp"
#include "rvnorm/symbolic.hpp"
#include "rvnorm/sympoly.hpp"
#include "rvnorm/verify.hpp"

namespace rvnorm::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 20240229;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double root(double pow_value, int d) { return pow_value <= 0.0 ? 0.0 : std::pow(pow_value, 1.0 / d); }

std::uint64_t parse_seed(const std::string& text) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used, 0);
  } catch (const std::exception&) {
    throw ParseError("invalid seed '" + text + "'");
  }
  if (used != text.size()) throw ParseError("invalid seed '" + text + "'");
  return v;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("RVNORM_SEED"); env && *env) return parse_seed(env);
  return kDefaultSeed;
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw ParseError("empty value list");
  return out;
}

// ---------------------------------------------------------------- norm

struct NormArgs {
  std::string matrix;
  std::string dist;
  int degree = 0;
  std::string method = "auto";
  bool exact = false;
  bool as_json = false;
  int points = 0;
};

int run_norm(const NormArgs& a, std::ostream& out) {
  const auto spec = DistributionSpec::parse(a.dist);
  const InducedNorm norm(spec, a.degree);
  const int d = a.degree;
  json doc{{"distribution", spec.to_string()}, {"degree", d}, {"method", a.method}};
  std::vector<std::pair<std::string, std::string>> lines{{"distribution", spec.to_string()},
                                                         {"degree", std::to_string(d)}};

  if (a.exact) {
    const RationalMatrix m = load_rational_matrix_json(a.matrix);
    Rational value;
    if (a.method == "partition") {
      value = norm.hermitian_pow(m);
    } else if (a.method == "series") {
      value = norm.series_pow(m);
    } else if (a.method == "auto") {
      value = norm.hermitian_pow(m);
      if (spec.has_mgf()) {
        const bool agree = value == norm.series_pow(m);
        doc["series_agrees"] = agree;
        lines.emplace_back("series agrees", agree ? "yes" : "no");
      }
    } else {
      throw DomainError("exact mode supports the partition, series and auto methods");
    }
    doc["norm_pow"] = to_string(value);
    doc["norm"] = root(value.get_d(), d);
    lines.emplace_back("method", a.method);
    lines.emplace_back("norm^d", to_string(value));
    lines.emplace_back("norm", num(root(value.get_d(), d)));
  } else {
    const ComplexMatrix z = load_matrix_json(a.matrix);
    std::string used = a.method;
    double value = 0.0;
    if (a.method == "auto") {
      if (is_hermitian(z)) {
        value = norm.hermitian_pow(z);
        used = "partition";
        if (spec.has_mgf()) {
          const double s = norm.series_pow(z);
          const double disc = std::abs(value - s) / std::max({std::abs(value), std::abs(s), 1e-300});
          used = "partition+series";
          doc["series_pow"] = s;
          doc["discrepancy"] = disc;
          lines.emplace_back("series norm^d", num(s));
          lines.emplace_back("discrepancy", num(disc));
        }
      } else {
        value = norm.general_pow(z);
        used = "words";
      }
    } else {
      const Method m = a.method == "partition" ? Method::partition
                       : a.method == "series"  ? Method::series
                                               : Method::words;
      value = norm.pow(z, m);
    }
    doc["method"] = used;
    doc["norm_pow"] = value;
    doc["norm"] = root(value, d);
    lines.emplace_back("method", used);
    lines.emplace_back("norm^d", num(value));
    lines.emplace_back("norm", num(root(value, d)));
    if (a.points > 0) {
      const auto c = circle_extension_check(z, spec, d, a.points);
      doc["circle"] = {{"points", a.points}, {"quadrature", c.quadrature}, {"algebraic", c.algebraic}};
      lines.emplace_back("circle quadrature", num(c.quadrature));
      lines.emplace_back("circle algebraic", num(c.algebraic));
    }
  }

  if (a.as_json) {
    out << doc.dump() << "\n";
  } else {
    for (const auto& [k, v] : lines) out << k << ": " << v << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- formula

struct FormulaArgs {
  std::string dist;
  bool generic = false;
  int degree = 0;
  std::string mode = "general";
  bool as_json = false;
};

int run_formula(const FormulaArgs& a, std::ostream& out) {
  const FormulaMode mode = a.mode == "hermitian" ? FormulaMode::hermitian : FormulaMode::general;
  std::optional<TracePolynomial> poly;
  if (a.generic) {
    poly = symbolic_formula(a.degree, mode);
  } else {
    const auto spec = DistributionSpec::parse(a.dist);
    if (a.degree < 2 || a.degree % 2 != 0) throw DomainError("formula needs an even degree d >= 2");
    poly = symbolic_formula(distribution_cumulants(spec, a.degree), a.degree, mode);
  }
  out << (a.as_json ? poly->to_json() + "\n" : poly->to_text());
  return kOk;
}

// ---------------------------------------------------------------- hunter

struct HunterArgs {
  int degree = 0;
  int alpha = 1;
  std::string x;
  bool as_json = false;
};

std::string hunter_term_text(const Partition& p) {
  std::map<int, int> counts;
  for (int part : p.parts()) ++counts[part];
  std::string s;
  for (const auto& [part, m] : counts) {
    s += (s.empty() ? "" : " ") + std::string("h") + std::to_string(part);
    if (m > 1) s += "^" + std::to_string(m);
  }
  return s.empty() ? "1" : s;
}

int run_hunter(const HunterArgs& a, std::ostream& out) {
  if (a.degree < 0 || a.degree % 2 != 0) throw DomainError("hunter polynomials need an even degree d >= 0");
  if (a.alpha < 1) throw DomainError("hunter polynomials need alpha >= 1");
  const auto terms = hunter_terms(a.degree, a.alpha);
  json doc{{"degree", a.degree}, {"alpha", a.alpha}};
  json jterms = json::array();
  for (const auto& [p, c] : terms) {
    jterms.push_back({{"coeff", to_string(c)}, {"partition", std::vector<int>(p.parts().begin(), p.parts().end())}});
  }
  doc["terms"] = jterms;

  std::optional<Rational> value;
  std::optional<Rational> recursive;
  if (!a.x.empty()) {
    const auto x = parse_list(a.x);
    value = hunter_poly<Rational>(a.degree, a.alpha, x);
    recursive = hunter_poly_recursive<Rational>(a.degree, a.alpha, x);
    doc["value"] = to_string(*value);
    doc["recursive"] = to_string(*recursive);
  }

  if (a.as_json) {
    out << doc.dump() << "\n";
    return kOk;
  }
  for (const auto& [p, c] : terms) out << to_string(c) << " " << hunter_term_text(p) << "\n";
  if (value) {
    out << "value: " << to_string(*value) << "\n";
    out << "recursive: " << to_string(*recursive) << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- oracle

struct OracleArgs {
  std::string matrix;
  std::string lambdas;
  std::string dist;
  int degree = 0;
  std::size_t samples = 1'000'000;
  std::string seed;
  unsigned threads = 0;
  bool as_json = false;
};

int run_oracle(const OracleArgs& a, std::ostream& out) {
  const auto spec = DistributionSpec::parse(a.dist);
  McOptions opts;
  opts.samples = a.samples;
  opts.seed = a.seed.empty() ? default_seed() : parse_seed(a.seed);
  opts.threads = a.threads;

  std::vector<double> lambdas;
  if (!a.matrix.empty()) {
    const ComplexMatrix z = load_matrix_json(a.matrix);
    if (!is_hermitian(z)) {
      throw DomainError("the Monte Carlo oracle needs a Hermitian matrix; use `norm --points` for general Z");
    }
    lambdas = hermitian_eigenvalues(z).values;
  } else {
    for (const auto& r : parse_list(a.lambdas)) lambdas.push_back(r.get_d());
  }

  const McEstimate pow_est = mc_norm_pow(lambdas, spec, a.degree, opts);
  const double nv = root(pow_est.value, a.degree);
  const double nse = pow_est.value > 0.0 ? pow_est.std_error * nv / (a.degree * pow_est.value) : 0.0;

  std::optional<double> analytic;
  if (a.degree % 2 == 0 && spec.has_moment(a.degree)) {
    analytic = hermitian_norm_pow(diagonal_matrix(lambdas), spec, a.degree);
  }

  if (a.as_json) {
    json doc{{"distribution", spec.to_string()},
             {"degree", a.degree},
             {"samples", pow_est.samples},
             {"seed", pow_est.seed},
             {"norm_pow", {{"value", pow_est.value}, {"stderr", pow_est.std_error}}},
             {"norm", {{"value", nv}, {"stderr", nse}}}};
    if (analytic) doc["analytic_norm_pow"] = *analytic;
    out << doc.dump() << "\n";
    return kOk;
  }
  out << "distribution: " << spec.to_string() << "\n";
  out << "degree: " << a.degree << "\n";
  out << "samples: " << pow_est.samples << "\n";
  out << "seed: " << pow_est.seed << "\n";
  out << "norm^d: " << num(pow_est.value) << " +- " << num(pow_est.std_error) << "\n";
  out << "norm: " << num(nv) << " +- " << num(nse) << "\n";
  if (analytic) out << "analytic norm^d: " << num(*analytic) << "\n";
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite = "all";
  std::string seed;
  int trials = 0;
  bool as_json = false;
};

int run_verify(const VerifyArgs& a, std::ostream& out) {
  VerifyOptions opts;
  opts.seed = a.seed.empty() ? default_seed() : parse_seed(a.seed);
  opts.trials = a.trials;
  const auto reports = run_suites(a.suite, opts);
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  if (a.as_json) {
    out << report_json(reports) << "\n";
  } else {
    for (const auto& r : reports) {
      out << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.trials << " checks, "
          << r.failure_count << " failures)\n";
      for (const auto& f : r.failures) out << "  " << f << "\n";
    }
  }
  return ok ? kOk : kSuiteFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Norms induced by random vectors: evaluation, formulas and checks", "rvnorm"};
  app.require_subcommand(1);
  app.footer(distribution_catalog_help());
  const std::vector<std::string> methods{"partition", "series", "words", "auto"};

  NormArgs norm_args;
  auto* norm_cmd = app.add_subcommand("norm", "Evaluate |||Z|||_{X,d} for a matrix file");
  norm_cmd->add_option("-m,--matrix", norm_args.matrix, "Matrix JSON {\"n\", \"re\", \"im\"}")->required();
  norm_cmd->add_option("-x,--dist", norm_args.dist, "Distribution, e.g. gamma:alpha=1,beta=1")->required();
  norm_cmd->add_option("-d,--degree", norm_args.degree, "Even degree d >= 2")->required();
  norm_cmd->add_option("--method", norm_args.method, "partition | series | words | auto")
      ->check(CLI::IsMember(methods));
  norm_cmd->add_flag("--exact", norm_args.exact, "Exact rational evaluation (real symmetric input)");
  norm_cmd->add_option("--points", norm_args.points, "Also run the circle-average check with this many nodes");
  norm_cmd->add_flag("--json", norm_args.as_json, "JSON output");
  norm_cmd->footer(distribution_catalog_help());

  FormulaArgs formula_args;
  auto* formula_cmd = app.add_subcommand("formula", "Print the trace-polynomial form of |||Z|||^d");
  auto* dist_opt = formula_cmd->add_option("-x,--dist", formula_args.dist, "Distribution to substitute");
  auto* generic_opt = formula_cmd->add_flag("--generic", formula_args.generic, "Keep cumulants symbolic (k1, k2, ...)");
  dist_opt->excludes(generic_opt);
  formula_cmd->add_option("-d,--degree", formula_args.degree, "Even degree d >= 2")->required();
  formula_cmd->add_option("--mode", formula_args.mode, "hermitian | general")
      ->check(CLI::IsMember({"hermitian", "general"}));
  formula_cmd->add_flag("--json", formula_args.as_json, "JSON output");
  formula_cmd->footer(distribution_catalog_help());

  HunterArgs hunter_args;
  auto* hunter_cmd = app.add_subcommand("hunter", "Generalized Hunter polynomial H_{d,alpha}");
  hunter_cmd->add_option("-d,--degree", hunter_args.degree, "Even degree")->required();
  hunter_cmd->add_option("-a,--alpha", hunter_args.alpha, "Maximum number of parts, >= 1")->required();
  hunter_cmd->add_option("--x", hunter_args.x, "Evaluate at comma-separated rationals, e.g. 1,-1/2,3");
  hunter_cmd->add_flag("--json", hunter_args.as_json, "JSON output");

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle", "Monte Carlo estimate of |||A|||_{X,d} (any d >= 2)");
  auto* mat_opt = oracle_cmd->add_option("-m,--matrix", oracle_args.matrix, "Hermitian matrix JSON");
  auto* lam_opt = oracle_cmd->add_option("-l,--lambdas", oracle_args.lambdas, "Comma-separated eigenvalues");
  mat_opt->excludes(lam_opt);
  oracle_cmd->add_option("-x,--dist", oracle_args.dist, "Distribution")->required();
  oracle_cmd->add_option("-d,--degree", oracle_args.degree, "Degree d >= 2")->required();
  oracle_cmd->add_option("--samples", oracle_args.samples, "Sample count, >= 10000");
  oracle_cmd->add_option("--seed", oracle_args.seed, "64-bit seed (default: $RVNORM_SEED)");
  oracle_cmd->add_option("--threads", oracle_args.threads, "Worker cap, 0 = hardware concurrency");
  oracle_cmd->add_flag("--json", oracle_args.as_json, "JSON output");
  oracle_cmd->footer(distribution_catalog_help());

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run property suites; exit 1 on any failure");
  verify_cmd->add_option("--suite", verify_args.suite, "axioms | schur | paths | hunter | khintchine | all")
      ->check(CLI::IsMember({"axioms", "schur", "paths", "hunter", "khintchine", "all"}));
  verify_cmd->add_option("--seed", verify_args.seed, "64-bit seed (default: $RVNORM_SEED)");
  verify_cmd->add_option("--trials", verify_args.trials, "Trials per cell, 0 = suite default");
  verify_cmd->add_flag("--json", verify_args.as_json, "JSON report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*norm_cmd) return run_norm(norm_args, out);
    if (*formula_cmd) {
      if (formula_args.dist.empty() && !formula_args.generic) {
        err << "formula: give --dist or --generic\n";
        return kParseError;
      }
      return run_formula(formula_args, out);
    }
    if (*hunter_cmd) return run_hunter(hunter_args, out);
    if (*oracle_cmd) {
      if (oracle_args.matrix.empty() && oracle_args.lambdas.empty()) {
        err << "oracle: give --matrix or --lambdas\n";
        return kParseError;
      }
      return run_oracle(oracle_args, out);
    }
    if (*verify_cmd) return run_verify(verify_args, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const DomainError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  }
  return kParseError;
}

}  // namespace rvnorm::cli
