#include "rhg/util.hpp"

#include <numeric>

namespace rhg {

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;  // invariant: C(n-k+i, i) after step i
  for (std::uint64_t i = 1; i <= k; ++i) {
    std::uint64_t num = n - k + i;
    std::uint64_t den = i;
    std::uint64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
    g = std::gcd(result, den);
    result /= g;
    den /= g;
    // result * num / den is integral, so den must be fully consumed
    if (den != 1) throw std::logic_error("binom: non-integral intermediate");
    if (num != 0 && result > UINT64_MAX / num)
      throw std::overflow_error("binom: value exceeds 64 bits");
    result *= num;
  }
  return result;
}

std::uint64_t subset_rank(const std::vector<std::uint32_t>& s) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < s.size(); ++i) rank += binom(s[i], i + 1);
  return rank;
}

std::vector<std::uint32_t> subset_unrank(std::uint64_t rank, std::uint32_t r) {
  std::vector<std::uint32_t> out(r);
  for (std::uint32_t i = r; i > 0; --i) {
    // largest c with C(c, i) <= rank
    std::uint32_t c = i - 1;
    std::uint64_t cur = 0;  // C(i-1, i) = 0
    for (;;) {
      std::uint64_t next = binom(c + 1, i);
      if (next > rank) break;
      ++c;
      cur = next;
    }
    out[i - 1] = c;
    rank -= cur;
  }
  return out;
}

bool next_subset(std::vector<std::uint32_t>& s, std::uint32_t n) {
  const std::uint32_t r = static_cast<std::uint32_t>(s.size());
  for (std::uint32_t i = 0; i < r; ++i) {
    std::uint32_t limit = (i + 1 < r) ? s[i + 1] : n;
    if (s[i] + 1 < limit) {
      ++s[i];
      for (std::uint32_t j = 0; j < i; ++j) s[j] = j;
      return true;
    }
  }
  return false;
}

}  // namespace rhg
