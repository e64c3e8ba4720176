#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace rhg {

// (value, stream) pair identifying an independent random stream. Every
// sampler is a pure function of its parameters and a Seed; repeated calls
// with the same Seed produce byte-identical results. Per-trial experiments
// use stream = trial index so results do not depend on thread scheduling.
struct Seed {
  std::uint64_t value = 0;
  std::uint64_t stream = 0;

  Seed with_stream(std::uint64_t s) const { return Seed{value, s}; }

  friend bool operator==(const Seed&, const Seed&) = default;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic generator: a std::mt19937_64 engine (whose output sequence is
// fixed by the standard) seeded from a splitmix64 mix of (value, stream). All
// derived distributions below are implemented here rather than with
// std::*_distribution, whose outputs are not portable across libraries.
class Rng {
 public:
  explicit Rng(Seed seed)
      : engine_(splitmix64(splitmix64(seed.value) ^
                           splitmix64(seed.stream + 0x6a09e667f3bcc909ULL))) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [0, bound), unbiased via masked rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound == 0");
    if ((bound & (bound - 1)) == 0) return next() & (bound - 1);
    int shift = 63 - std::countl_zero(bound);
    std::uint64_t mask = (shift >= 63) ? ~0ULL : ((1ULL << (shift + 1)) - 1);
    for (;;) {
      std::uint64_t v = next() & mask;
      if (v < bound) return v;
    }
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  // Number of successes among `trials` Bernoulli(p) draws. Uses geometric
  // gap-skipping when the expected count is far below the trial count, so
  // huge sparse blocks cost O(successes) instead of O(trials).
  std::uint64_t binomial_count(std::uint64_t trials, double p) {
    if (p <= 0.0 || trials == 0) return 0;
    if (p >= 1.0) return trials;
    if (static_cast<double>(trials) * p > 64.0 || trials < 1024) {
      std::uint64_t c = 0;
      for (std::uint64_t i = 0; i < trials; ++i) c += bernoulli(p);
      return c;
    }
    // skip = failures before the next success, geometric with parameter p
    const double denom = std::log1p(-p);
    std::uint64_t c = 0;
    std::uint64_t pos = 0;
    for (;;) {
      double u = 1.0 - uniform();  // in (0, 1]
      double skip = std::floor(std::log(u) / denom);
      if (skip >= static_cast<double>(trials - pos)) return c;
      pos += static_cast<std::uint64_t>(skip) + 1;
      ++c;
      if (pos >= trials) return c;
    }
  }

  // Uniform k-subset of {0,..,population-1} in sorted order (Floyd).
  std::vector<std::uint64_t> sample_subset(std::uint64_t population,
                                           std::uint64_t k);

  // Uniform injective k-sequence from {0,..,population-1} (ordered sample
  // without replacement): a uniform subset followed by a Fisher-Yates
  // shuffle of its elements.
  std::vector<std::uint64_t> sample_sequence(std::uint64_t population,
                                             std::uint64_t k);

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace rhg
