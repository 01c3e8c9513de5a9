#include "rvnorm/partitions.hpp"

#include <stdexcept>

namespace rvnorm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  int prev = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    int part = parts_[i];
    if (part < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && part > prev) throw std::invalid_argument("partition parts must be nonincreasing");
    prev = part;
    degree_ += part;
  }
  multiplicity_.assign(static_cast<std::size_t>(largest()) + 1, 0);
  for (int part : parts_) ++multiplicity_[static_cast<std::size_t>(part)];
}

int Partition::multiplicity(int part) const noexcept {
  if (part < 1 || part >= static_cast<int>(multiplicity_.size())) return 0;
  return multiplicity_[static_cast<std::size_t>(part)];
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::vector<Partition> enumerate_partitions(int d, int max_parts) {
  if (d < 0) throw std::invalid_argument("cannot partition a negative integer");
  std::vector<Partition> out;
  if (d == 0) {
    out.emplace_back();
    return out;
  }
  if (max_parts <= 0) return out;

  // Successor in reverse-lex order: strip trailing ones, decrement the last
  // part above one, then refill greedily with that value.
  std::vector<int> a{d};
  while (true) {
    if (static_cast<int>(a.size()) <= max_parts) out.emplace_back(a);
    int ones = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++ones;
    }
    if (a.empty()) break;
    int k = --a.back();
    int rest = ones + 1;
    while (rest > k) {
      a.push_back(k);
      rest -= k;
    }
    if (rest > 0) a.push_back(rest);
  }
  return out;
}

std::vector<Partition> enumerate_partitions(int d) { return enumerate_partitions(d, d < 1 ? 0 : d); }

BigInt y_of(const Partition& p) {
  BigInt out = 1;
  for (int i = 1; i <= p.largest(); ++i) {
    int m = p.multiplicity(i);
    if (m == 0) continue;
    BigInt fi = factorial(static_cast<unsigned>(i));
    BigInt term;
    mpz_pow_ui(term.get_mpz_t(), fi.get_mpz_t(), static_cast<unsigned long>(m));
    out *= term * factorial(static_cast<unsigned>(m));
  }
  return out;
}

BigInt z_of(const Partition& p) {
  BigInt out = 1;
  for (int i = 1; i <= p.largest(); ++i) {
    int m = p.multiplicity(i);
    if (m == 0) continue;
    BigInt term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(m));
    out *= term * factorial(static_cast<unsigned>(m));
  }
  return out;
}

BigInt hunter_coefficient(const Partition& p, int alpha) {
  if (alpha < 1) throw std::invalid_argument("hunter coefficient needs alpha >= 1");
  if (p.length() > alpha) return 0;
  BigInt den = factorial(static_cast<unsigned>(alpha - p.length()));
  for (int i = 1; i <= p.largest(); ++i) den *= factorial(static_cast<unsigned>(p.multiplicity(i)));
  return factorial(static_cast<unsigned>(alpha)) / den;
}

}  // namespace rvnorm
