#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rhg {

// Exact binomial coefficient in 64 bits; throws std::overflow_error if the
// value does not fit. Desk-scale parameters (n <= a few hundred, small r)
// stay far below the limit.
std::uint64_t binom(std::uint64_t n, std::uint64_t k);

// r-subsets of {0,..,n-1} are indexed in colexicographic order:
//   rank(c_0 < c_1 < ... < c_{r-1}) = sum_i C(c_i, i+1).
// Ranks run over [0, C(n,r)). Unranking does not need n.
std::uint64_t subset_rank(const std::vector<std::uint32_t>& sorted_subset);
std::vector<std::uint32_t> subset_unrank(std::uint64_t rank, std::uint32_t r);

// Advances `subset` to the next r-subset of {0,..,n-1} in colex order.
// Returns false (leaving the subset at the last combination) when exhausted.
bool next_subset(std::vector<std::uint32_t>& subset, std::uint32_t n);

// Compensated (Kahan) accumulator for long sums of small tail terms.
class KahanSum {
 public:
  void add(long double x) {
    long double y = x - c_;
    long double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  long double value() const { return s_; }

 private:
  long double s_ = 0.0L;
  long double c_ = 0.0L;
};

}  // namespace rhg
