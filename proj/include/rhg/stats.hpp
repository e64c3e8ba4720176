#pragma once

#include <cstdint>
#include <vector>

namespace rhg {

// Upper regularized incomplete gamma Q(a, x) = Gamma(a,x)/Gamma(a).
double gamma_q(double a, double x);

// P(Chi2_df >= statistic).
double chi_square_p_value(double statistic, double df);

struct ChiSquare {
  double statistic = 0.0;
  double df = 0.0;
  double p_value = 1.0;
  std::uint64_t cells = 0;  // after pooling
};

// Goodness of fit with tail pooling: consecutive cells are merged until each
// pooled cell has expected count >= min_expected. `expected` are counts (they
// should sum to the observed total).
ChiSquare chi_square_gof(const std::vector<std::uint64_t>& observed,
                         const std::vector<double>& expected,
                         double min_expected = 5.0);

struct WilsonInterval {
  double low = 0.0;
  double high = 1.0;

  friend bool operator==(const WilsonInterval&, const WilsonInterval&) = default;
};

// Wilson score interval for a binomial proportion at normal quantile z.
WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                               double z);

// Inverse standard normal CDF (Acklam's rational approximation, |err|<1e-9).
double probit(double p);

// log P(Bin(n,p) = k), extended precision.
long double log_binomial_pmf(std::uint64_t n, long double p, std::uint64_t k);

// Exact pmf vector of Bin(n,p) over k = 0..n.
std::vector<double> binomial_pmf_table(std::uint64_t n, double p);

// Sample Pearson correlation of two equal-length series.
double pearson_correlation(const std::vector<double>& x,
                           const std::vector<double>& y);

}  // namespace rhg
