#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rvnorm/error.hpp"
#include "rvnorm/matrix.hpp"

namespace rvnorm {

namespace {

using nlohmann::json;

Rational entry_rational(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()), 10);
  if (v.is_number()) return rational_from_double(v.get<double>());
  throw ParseError("matrix entries must be numbers or rational strings");
}

double entry_double(const json& v) {
  double x = 0.0;
  if (v.is_string()) {
    x = parse_rational(v.get<std::string>()).get_d();
  } else if (v.is_number()) {
    x = v.get<double>();
  } else {
    throw ParseError("matrix entries must be numbers or rational strings");
  }
  if (!std::isfinite(x)) throw ParseError("matrix entries must be finite");
  return x;
}

json parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("matrix JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("re")) {
    throw ParseError("matrix JSON must be an object with \"n\" and \"re\"");
  }
  if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1) {
    throw ParseError("matrix JSON: \"n\" must be a positive integer");
  }
  const auto n = doc["n"].get<std::size_t>();
  auto check_square = [n](const json& rows, const char* name) {
    if (!rows.is_array() || rows.size() != n) {
      throw ParseError(std::string("matrix JSON: \"") + name + "\" must have n rows");
    }
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != n) {
        throw ParseError(std::string("matrix JSON: \"") + name + "\" is not square n x n");
      }
    }
  };
  check_square(doc["re"], "re");
  if (doc.contains("im")) check_square(doc["im"], "im");
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

ComplexMatrix parse_matrix_json(const std::string& text) {
  const json doc = parse_document(text);
  const auto n = doc["n"].get<std::size_t>();
  ComplexMatrix z(n);
  const bool has_im = doc.contains("im");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double re = entry_double(doc["re"][i][j]);
      double im = has_im ? entry_double(doc["im"][i][j]) : 0.0;
      z(i, j) = Complex(re, im);
    }
  }
  return z;
}

ComplexMatrix load_matrix_json(const std::string& path) { return parse_matrix_json(read_file(path)); }

RationalMatrix parse_rational_matrix_json(const std::string& text) {
  const json doc = parse_document(text);
  const auto n = doc["n"].get<std::size_t>();
  RationalMatrix a(n);
  const bool has_im = doc.contains("im");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      entry_double(doc["re"][i][j]);
      a(i, j) = entry_rational(doc["re"][i][j]);
      if (has_im && entry_rational(doc["im"][i][j]) != 0) {
        throw ParseError("exact mode supports real matrices only");
      }
    }
  }
  return a;
}

RationalMatrix load_rational_matrix_json(const std::string& path) {
  return parse_rational_matrix_json(read_file(path));
}

std::string matrix_to_json(const ComplexMatrix& z) {
  const std::size_t n = z.size();
  json re = json::array();
  json im = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json rr = json::array();
    json ri = json::array();
    for (std::size_t j = 0; j < n; ++j) {
      rr.push_back(z(i, j).real());
      ri.push_back(z(i, j).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  json doc{{"n", n}, {"re", std::move(re)}, {"im", std::move(im)}};
  return doc.dump();
}

}  // namespace rvnorm
