#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>

#include "rvnorm/matrix.hpp"
#include "rvnorm/partitions.hpp"

namespace rvnorm {

/// A word in the letters Z and Z*, spelled with 'Z' and 's' (s = Z*).
///
/// Traces are invariant under cyclic rotation, so every word carries its
/// canonical form: the lexicographically least rotation, with 'Z' < 's'.
class TraceWord {
 public:
  /// Throws ParseError on letters other than 'Z' and 's' or an empty word.
  explicit TraceWord(std::string letters);

  const std::string& letters() const noexcept { return letters_; }
  const std::string& canonical() const noexcept { return canonical_; }
  int length() const noexcept { return static_cast<int>(letters_.size()); }
  int adjoint_count() const noexcept;

  /// Readable form with runs collapsed, e.g. "Z^2 Z*^2" or "Z Z* Z Z*".
  static std::string pretty(std::string_view word);

 private:
  std::string letters_;
  std::string canonical_;
};

/// Least rotation of `word` (Booth's algorithm).
std::string minimal_rotation(std::string_view word);

/// Calls `visit(mask)` for every d-bit mask with exactly d/2 bits set, in
/// increasing numeric order. Bit i set means position i carries an adjoint.
void for_each_adjoint_placement(int d, const std::function<void(std::uint32_t)>& visit);

/// Splits a placement into the words of the segments π_1, π_2, ...
std::vector<std::string> placement_words(std::uint32_t mask, const Partition& p);

/// Memoised tr(w(Z)) keyed by canonical word.
class TraceCache {
 public:
  explicit TraceCache(const ComplexMatrix& z);
  Complex trace(const std::string& canonical_word);

 private:
  ComplexMatrix z_;
  ComplexMatrix zstar_;
  std::map<std::string, Complex> cache_;
};

}  // namespace rvnorm
