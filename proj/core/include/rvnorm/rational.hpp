#pragma once

#include <gmpxx.h>

#include <concepts>
#include <string>
#include <string_view>

namespace rvnorm {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", an integer, or a decimal literal with optional exponent
/// ("0.25", "-1.5e-3") into an exact rational. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Exact conversion of a finite binary double.
Rational rational_from_double(double value);

std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// Integer power with r^0 = 1.
Rational pow(const Rational& base, unsigned exponent);

template <class T>
concept Scalar = std::same_as<T, double> || std::same_as<T, Rational>;

/// Converts an exact rational into the working scalar type.
template <Scalar T>
T scalar_from(const Rational& value) {
  if constexpr (std::same_as<T, double>) {
    return value.get_d();
  } else {
    return value;
  }
}

template <Scalar T>
T scalar_from(const BigInt& value) {
  if constexpr (std::same_as<T, double>) {
    return value.get_d();
  } else {
    return Rational(value);
  }
}

inline double to_double(const Rational& value) { return value.get_d(); }
inline double to_double(double value) { return value; }

}  // namespace rvnorm
