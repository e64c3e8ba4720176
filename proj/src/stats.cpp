#include "rhg/stats.hpp"

#include <cmath>
#include <stdexcept>

#include "rhg/util.hpp"

namespace rhg {

namespace {

// Lower regularized incomplete gamma via its power series (x < a+1).
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int i = 0; i < 500; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper regularized incomplete gamma via Lentz continued fraction (x >= a+1).
double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    double an = -static_cast<double>(i) * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-15) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double gamma_q(double a, double x) {
  if (a <= 0.0 || x < 0.0) throw std::invalid_argument("gamma_q: bad args");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

double chi_square_p_value(double statistic, double df) {
  if (df <= 0.0) return 1.0;
  if (statistic <= 0.0) return 1.0;
  return gamma_q(df / 2.0, statistic / 2.0);
}

ChiSquare chi_square_gof(const std::vector<std::uint64_t>& observed,
                         const std::vector<double>& expected,
                         double min_expected) {
  if (observed.size() != expected.size())
    throw std::invalid_argument("chi_square_gof: size mismatch");
  std::vector<double> eb;
  std::vector<double> ob;
  double ecur = 0.0, ocur = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    ecur += expected[i];
    ocur += static_cast<double>(observed[i]);
    if (ecur >= min_expected) {
      eb.push_back(ecur);
      ob.push_back(ocur);
      ecur = ocur = 0.0;
    }
  }
  if (ecur > 0.0 || ocur > 0.0) {
    if (!eb.empty()) {
      eb.back() += ecur;
      ob.back() += ocur;
    } else {
      eb.push_back(ecur);
      ob.push_back(ocur);
    }
  }
  ChiSquare out;
  out.cells = eb.size();
  if (eb.size() < 2) return out;  // degenerate: nothing to test
  for (std::size_t i = 0; i < eb.size(); ++i) {
    double diff = ob[i] - eb[i];
    out.statistic += diff * diff / eb[i];
  }
  out.df = static_cast<double>(eb.size() - 1);
  out.p_value = chi_square_p_value(out.statistic, out.df);
  return out;
}

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                               double z) {
  if (trials == 0) return {0.0, 1.0};
  const double nd = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / nd;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nd;
  const double center = (phat + z2 / (2.0 * nd)) / denom;
  const double half =
      z * std::sqrt(phat * (1.0 - phat) / nd + z2 / (4.0 * nd * nd)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

double probit(double p) {
  if (p <= 0.0 || p >= 1.0) throw std::invalid_argument("probit: p in (0,1)");
  // Acklam's algorithm
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  double q, x;
  if (p < plow) {
    q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - plow) {
    q = p - 0.5;
    double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
        q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
          c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  return x;
}

long double log_binomial_pmf(std::uint64_t n, long double p, std::uint64_t k) {
  if (k > n) return -INFINITY;
  if (p <= 0.0L) return k == 0 ? 0.0L : -INFINITY;
  if (p >= 1.0L) return k == n ? 0.0L : -INFINITY;
  long double lc = std::lgamma(static_cast<long double>(n) + 1.0L) -
                   std::lgamma(static_cast<long double>(k) + 1.0L) -
                   std::lgamma(static_cast<long double>(n - k) + 1.0L);
  return lc + static_cast<long double>(k) * std::log(p) +
         static_cast<long double>(n - k) * std::log1p(-p);
}

std::vector<double> binomial_pmf_table(std::uint64_t n, double p) {
  std::vector<double> out(n + 1);
  for (std::uint64_t k = 0; k <= n; ++k)
    out[k] = static_cast<double>(
        std::exp(log_binomial_pmf(n, static_cast<long double>(p), k)));
  return out;
}

double pearson_correlation(const std::vector<double>& x,
                           const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("pearson_correlation: bad input");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace rhg
