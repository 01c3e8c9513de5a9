#include "rvnorm/trace_words.hpp"

#include <algorithm>
#include <vector>

#include "rvnorm/error.hpp"

namespace rvnorm {

std::string minimal_rotation(std::string_view word) {
  const std::size_t n = word.size();
  if (n < 2) return std::string(word);
  const std::string s = std::string(word) + std::string(word);
  std::vector<long> f(2 * n, -1);
  long k = 0;
  for (long j = 1; j < static_cast<long>(2 * n); ++j) {
    const char sj = s[static_cast<std::size_t>(j)];
    long i = f[static_cast<std::size_t>(j - k - 1)];
    while (i != -1 && sj != s[static_cast<std::size_t>(k + i + 1)]) {
      if (sj < s[static_cast<std::size_t>(k + i + 1)]) k = j - i - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (sj != s[static_cast<std::size_t>(k + i + 1)]) {
      if (sj < s[static_cast<std::size_t>(k)]) k = j;
      f[static_cast<std::size_t>(j - k)] = -1;
    } else {
      f[static_cast<std::size_t>(j - k)] = i + 1;
    }
  }
  return s.substr(static_cast<std::size_t>(k), n);
}

TraceWord::TraceWord(std::string letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw ParseError("trace word must be nonempty");
  for (char c : letters_) {
    if (c != 'Z' && c != 's') throw ParseError("trace word letters must be 'Z' or 's'");
  }
  canonical_ = minimal_rotation(letters_);
}

int TraceWord::adjoint_count() const noexcept {
  return static_cast<int>(std::count(letters_.begin(), letters_.end(), 's'));
}

std::string TraceWord::pretty(std::string_view word) {
  std::string out;
  std::size_t i = 0;
  while (i < word.size()) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    if (!out.empty()) out += ' ';
    out += word[i] == 's' ? "Z*" : std::string(1, word[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

void for_each_adjoint_placement(int d, const std::function<void(std::uint32_t)>& visit) {
  if (d < 0 || d % 2 != 0 || d > 30) throw DomainError("adjoint placements need an even degree in [0, 30]");
  const int half = d / 2;
  if (half == 0) {
    visit(0);
    return;
  }
  const std::uint32_t limit = std::uint32_t{1} << d;
  std::uint32_t mask = (std::uint32_t{1} << half) - 1;
  while (mask < limit) {
    visit(mask);
    // Gosper's hack: next integer with the same popcount.
    const std::uint32_t c = mask & (~mask + 1);
    const std::uint32_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
}

std::vector<std::string> placement_words(std::uint32_t mask, const Partition& p) {
  std::vector<std::string> words;
  words.reserve(static_cast<std::size_t>(p.length()));
  int pos = 0;
  for (int part : p.parts()) {
    std::string w;
    w.reserve(static_cast<std::size_t>(part));
    for (int k = 0; k < part; ++k, ++pos) w += (mask >> pos) & 1U ? 's' : 'Z';
    words.push_back(std::move(w));
  }
  return words;
}

TraceCache::TraceCache(const ComplexMatrix& z) : z_(z), zstar_(adjoint(z)) {}

Complex TraceCache::trace(const std::string& canonical_word) {
  if (auto it = cache_.find(canonical_word); it != cache_.end()) return it->second;
  ComplexMatrix product = canonical_word.front() == 's' ? zstar_ : z_;
  for (std::size_t i = 1; i < canonical_word.size(); ++i) {
    product = product * (canonical_word[i] == 's' ? zstar_ : z_);
  }
  Complex t = product.trace();
  cache_.emplace(canonical_word, t);
  return t;
}

}  // namespace rvnorm
