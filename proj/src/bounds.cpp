#include "rhg/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "rhg/stats.hpp"
#include "rhg/util.hpp"

namespace rhg {

double chernoff_two_sided(double n, double p, double eps) {
  if (n <= 0.0 || p <= 0.0 || p > 1.0 || eps <= 0.0 || eps > 1.0)
    throw std::invalid_argument("chernoff_two_sided: bad parameters");
  return 2.0 * std::exp(-eps * eps * n * p / 3.0);
}

double chernoff_overshoot(double n, double p, double alpha) {
  if (n <= 0.0 || p <= 0.0 || p > 1.0 || alpha <= 1.0)
    throw std::invalid_argument("chernoff_overshoot: bad parameters");
  return std::pow(std::exp(1.0) / alpha, alpha * n * p);
}

long double binomial_upper_tail(std::uint64_t n, long double p,
                                long double threshold) {
  std::uint64_t k0 =
      threshold <= 0.0L
          ? 0
          : static_cast<std::uint64_t>(std::ceil(threshold - 1e-12L));
  if (k0 > n) return 0.0L;
  KahanSum s;
  for (std::uint64_t k = k0; k <= n; ++k)
    s.add(std::exp(log_binomial_pmf(n, p, k)));
  return s.value();
}

long double binomial_two_sided_tail(std::uint64_t n, long double p,
                                    long double eps) {
  const long double mu = static_cast<long double>(n) * p;
  const long double dev = eps * mu;
  KahanSum s;
  for (std::uint64_t k = 0; k <= n; ++k) {
    long double diff = std::fabs(static_cast<long double>(k) - mu);
    if (diff >= dev - 1e-12L)
      s.add(std::exp(log_binomial_pmf(n, p, k)));
  }
  return s.value();
}

namespace {

long double log_choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return -INFINITY;
  return std::lgamma(static_cast<long double>(n) + 1.0L) -
         std::lgamma(static_cast<long double>(k) + 1.0L) -
         std::lgamma(static_cast<long double>(n - k) + 1.0L);
}

void check_hypergeom(std::uint64_t M, std::uint64_t K, std::uint64_t n) {
  if (K > M || n > M)
    throw std::invalid_argument("hypergeometric: need K <= M and n <= M");
}

}  // namespace

long double hypergeometric_pmf(std::uint64_t M, std::uint64_t K,
                               std::uint64_t n, std::uint64_t k) {
  check_hypergeom(M, K, n);
  if (k > n || k > K) return 0.0L;
  if (n - k > M - K) return 0.0L;
  return std::exp(log_choose(K, k) + log_choose(M - K, n - k) -
                   log_choose(M, n));
}

long double hypergeometric_upper_tail(std::uint64_t M, std::uint64_t K,
                                      std::uint64_t n,
                                      std::uint64_t threshold) {
  check_hypergeom(M, K, n);
  KahanSum s;
  std::uint64_t hi = std::min(n, K);
  for (std::uint64_t k = threshold; k <= hi; ++k)
    s.add(hypergeometric_pmf(M, K, n, k));
  return s.value();
}

long double hypergeometric_lower_tail(std::uint64_t M, std::uint64_t K,
                                      std::uint64_t n,
                                      std::uint64_t threshold) {
  check_hypergeom(M, K, n);
  KahanSum s;
  std::uint64_t hi = std::min(threshold, std::min(n, K));
  for (std::uint64_t k = 0; k <= hi; ++k)
    s.add(hypergeometric_pmf(M, K, n, k));
  return s.value();
}

long double hypergeometric_total_mass(std::uint64_t M, std::uint64_t K,
                                      std::uint64_t n) {
  check_hypergeom(M, K, n);
  KahanSum s;
  for (std::uint64_t k = 0; k <= std::min(n, K); ++k)
    s.add(hypergeometric_pmf(M, K, n, k));
  return s.value();
}

double codegree_union_bound(std::uint32_t n, std::uint32_t r, std::uint64_t m,
                            std::uint32_t k) {
  if (n == 0 || k == 0)
    throw std::invalid_argument("codegree_union_bound: bad parameters");
  const double nn = static_cast<double>(n);
  const double base = static_cast<double>(r) * r * static_cast<double>(m) /
                      (static_cast<double>(k) * nn * nn);
  return nn * nn * std::pow(base, static_cast<double>(k));
}

double low_degree_exponent(double eps, double alpha) {
  if (eps <= 0.0 || alpha <= 0.0)
    throw std::invalid_argument("low_degree_exponent: bad parameters");
  const double e2 = eps * eps;
  return e2 * (std::log(1.0 / e2) + 1.0 + std::log(alpha)) - alpha;
}

bool low_degree_exponent_ok(double eps, double alpha) {
  return low_degree_exponent(eps, alpha) < -1.0;
}

double degree_threshold_equation(double rho, std::uint32_t r,
                                 ThresholdForm form, double d) {
  if (r < 3) throw std::invalid_argument("degree_threshold: r >= 3 required");
  const double rd = static_cast<double>(r);
  if (form == ThresholdForm::substituted) d = rho;
  const double denom = rho * rd - rho;
  const double num = rho * rd - d - rd;
  const double expo = (rd - 1.0) * (rho * rd - rho - rd) / rd;
  if (num <= 0.0 || denom <= 0.0) return -1.0;  // left of the useful region
  return (rho - 1.0) * (rd - 1.0) * std::pow(num / denom, expo) - 1.0;
}

DegreeThreshold degree_threshold(std::uint32_t r, double tol,
                                 ThresholdForm form, double d) {
  if (tol <= 0.0) throw std::invalid_argument("degree_threshold: tol > 0");
  auto f = [&](double rho) {
    return degree_threshold_equation(rho, r, form, d);
  };
  double lo = 2.0;
  double hi = 4.0;
  int guard = 0;
  while (f(hi) < 0.0) {
    lo = hi;
    hi *= 2.0;
    if (++guard > 60)
      throw std::runtime_error("degree_threshold: no sign change found");
  }
  if (f(lo) >= 0.0)
    throw std::runtime_error("degree_threshold: lower bracket not negative");
  for (int i = 0; i < 200 && hi - lo > tol / 4.0; ++i) {
    double mid = 0.5 * (lo + hi);
    if (f(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  DegreeThreshold out;
  out.value = 0.5 * (lo + hi);
  // snap roots that sit on an integer so flooring is stable
  double snapped = std::round(out.value);
  if (std::fabs(out.value - snapped) <= 8.0 * tol) out.value = snapped;
  out.residual = std::fabs(f(out.value));
  out.min_degree = static_cast<std::uint32_t>(std::floor(out.value)) + 1;
  return out;
}

}  // namespace rhg
