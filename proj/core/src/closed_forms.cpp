#include "rvnorm/closed_forms.hpp"

namespace rvnorm::detail {

void for_each_composition(int d, std::size_t n, const std::function<void(std::span<const int>)>& visit) {
  if (n == 0) {
    if (d == 0) visit({});
    return;
  }
  std::vector<int> k(n, 0);
  // Recursive fill: positions 0..n-2 free, last takes the remainder.
  std::function<void(std::size_t, int)> fill = [&](std::size_t i, int remaining) {
    if (i + 1 == n) {
      k[i] = remaining;
      visit(k);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      k[i] = v;
      fill(i + 1, remaining - v);
    }
  };
  fill(0, d);
}

}  // namespace rvnorm::detail
