#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rvnorm/rational.hpp"

namespace rvnorm {

/// An integer partition: a nonincreasing tuple of positive parts.
///
/// Multiplicities are cached on construction; `multiplicity(i)` is the number
/// of parts equal to `i`. The empty partition (of 0) is valid.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument if `parts` is not nonincreasing and positive.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  int degree() const noexcept { return degree_; }
  /// Number of parts, written |π|.
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  int multiplicity(int part) const noexcept;
  int operator[](std::size_t i) const { return parts_[i]; }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  std::vector<int> multiplicity_;  // index = part value
  int degree_ = 0;
};

/// All partitions of `d` in reverse-lexicographic order, starting at (d).
/// d = 0 yields the single empty partition; negative d throws.
std::vector<Partition> enumerate_partitions(int d);

/// Partitions of `d` with at most `max_parts` parts, same order.
std::vector<Partition> enumerate_partitions(int d, int max_parts);

/// y_π = Π (i!)^{m_i} m_i!
BigInt y_of(const Partition& p);

/// z_π = Π i^{m_i} m_i!
BigInt z_of(const Partition& p);

/// α! / ((α − |π|)! Π m_i!) when |π| ≤ α, otherwise 0.
BigInt hunter_coefficient(const Partition& p, int alpha);

}  // namespace rvnorm
