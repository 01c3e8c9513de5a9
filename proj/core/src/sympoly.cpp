#include "rvnorm/sympoly.hpp"

namespace rvnorm {

std::vector<std::pair<Partition, BigInt>> hunter_terms(int d, int alpha) {
  if (alpha < 1) throw std::invalid_argument("hunter polynomial needs alpha >= 1");
  std::vector<std::pair<Partition, BigInt>> out;
  for (auto& p : enumerate_partitions(d, alpha)) {
    BigInt c = hunter_coefficient(p, alpha);
    out.emplace_back(std::move(p), std::move(c));
  }
  return out;
}

}  // namespace rvnorm
