#include "rhg/rng.hpp"

#include <unordered_set>

namespace rhg {

std::vector<std::uint64_t> Rng::sample_subset(std::uint64_t population,
                                              std::uint64_t k) {
  if (k > population)
    throw std::invalid_argument("sample_subset: k > population");
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(k) * 2);
  for (std::uint64_t j = population - k; j < population; ++j) {
    std::uint64_t t = below(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::uint64_t> out(chosen.begin(), chosen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> Rng::sample_sequence(std::uint64_t population,
                                                std::uint64_t k) {
  std::vector<std::uint64_t> out = sample_subset(population, k);
  shuffle(out);
  return out;
}

}  // namespace rhg
