#pragma once

#include <cstdint>
#include <string>

namespace rhg {

// Two-sided concentration bound for Bin(n,p):
//   P(|X - np| >= eps*np) <= 2*exp(-eps^2*np/3), valid for 0 < eps <= 1.
double chernoff_two_sided(double n, double p, double eps);

// Upper-tail overshoot bound for Bin(n,p):
//   P(X >= alpha*np) <= (e/alpha)^(alpha*np), valid for alpha > 1.
double chernoff_overshoot(double n, double p, double alpha);

// Exact tails of Bin(n,p), computed from log-space pmfs with compensated
// summation in extended precision.
long double binomial_upper_tail(std::uint64_t n, long double p,
                                long double threshold);  // P(X >= threshold)
long double binomial_two_sided_tail(std::uint64_t n, long double p,
                                    long double eps);  // P(|X-np| >= eps*np)

// Exact hypergeometric pmf and tails: population M, K marked, n drawn.
long double hypergeometric_pmf(std::uint64_t M, std::uint64_t K,
                               std::uint64_t n, std::uint64_t k);
long double hypergeometric_upper_tail(std::uint64_t M, std::uint64_t K,
                                      std::uint64_t n,
                                      std::uint64_t threshold);  // P(X >= t)
long double hypergeometric_lower_tail(std::uint64_t M, std::uint64_t K,
                                      std::uint64_t n,
                                      std::uint64_t threshold);  // P(X <= t)
long double hypergeometric_total_mass(std::uint64_t M, std::uint64_t K,
                                      std::uint64_t n);  // should be 1

// Union bound on the existence of a vertex pair with codegree >= k in a
// uniformly random m-edge r-uniform hypergraph: n^2 * (r^2*m / (k*n^2))^k.
double codegree_union_bound(std::uint32_t n, std::uint32_t r, std::uint64_t m,
                            std::uint32_t k);

// Exponent theta controlling the expected number of low-out-degree vertices:
//   theta = eps^2*(ln(1/eps^2) + 1 + ln(alpha)) - alpha.
// The useful regime is theta < -1.
double low_degree_exponent(double eps, double alpha);
bool low_degree_exponent_ok(double eps, double alpha);

// Minimum-degree threshold equation for loose Hamiltonicity of d-regular
// r-uniform hypergraphs. The default `substituted` form binds the degree
// parameter to rho itself:
//   f(rho) = (rho-1)(r-1) * ((rho*r-rho-r)/(rho*r-rho))^((r-1)(rho*r-rho-r)/r) - 1,
// whose unique root in (2, inf) is the threshold. The `original` form keeps
// the degree d free in the numerator (rho*r-d-r); with d = rho both coincide.
enum class ThresholdForm { substituted, original };

double degree_threshold_equation(double rho, std::uint32_t r,
                                 ThresholdForm form = ThresholdForm::substituted,
                                 double d = 0.0);

struct DegreeThreshold {
  double value = 0.0;              // root rho(r)
  double residual = 0.0;           // |f(value)|
  std::uint32_t min_degree = 0;    // floor(value) + 1
};

// Bisection on (2, inf) with bracket expansion; throws if no sign change is
// found. Roots within 8*tol of an integer are snapped before flooring.
DegreeThreshold degree_threshold(std::uint32_t r, double tol = 1e-13,
                                 ThresholdForm form = ThresholdForm::substituted,
                                 double d = 0.0);

struct TailBoundReport {
  std::string which;
  std::string params;   // human-readable parameter summary
  long double exact = 0.0L;
  double bound = 0.0;
  double slack = 0.0;   // bound - exact, >= 0 when the bound is valid
};

}  // namespace rhg
