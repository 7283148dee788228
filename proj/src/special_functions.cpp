#include "ledsig/special_functions.hpp"

#include "ledsig/errors.hpp"

#include <cmath>
#include <string>

namespace ledsig {

namespace {

// Continued-fraction kernel for the regularized incomplete beta, modified
// Lentz algorithm. Converges quickly when x < (a+1)/(a+b+2); the caller
// applies the symmetry I_x(a,b) = 1 - I_{1-x}(b,a) to stay in that region.
double incomplete_beta_cf(double a, double b, double x) {
  constexpr double kTiny = 1e-300;
  constexpr double kEps = 1e-16;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;

  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;

  for (int m = 1; m <= 400; m++) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;

    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  throw NumericError("incomplete beta continued fraction failed to converge (a=" +
                     std::to_string(a) + ", b=" + std::to_string(b) + ", x=" +
                     std::to_string(x) + ")");
}

double normal_cdf(double z) {
  return 0.5 * std::erfc(-z * 0.7071067811865475244);
}

double normal_pdf(double z) {
  return std::exp(-0.5 * z * z) * 0.3989422804014326779;
}

// 12-point Gauss-Legendre rule on [-1, 1]; nodes listed by magnitude, used
// in symmetric +/- pairs.
constexpr int kGaussN = 6;
constexpr double kGaussX[kGaussN] = {
    0.125233408511468915, 0.367831498998180194, 0.587317954286617447,
    0.769902674194304687, 0.904117256370474857, 0.981560634246719251,
};
constexpr double kGaussW[kGaussN] = {
    0.249147045813402785, 0.233492536538354809, 0.203167426723065922,
    0.160078328543346226, 0.106939325995318431, 0.047175336386511827,
};

// Integrates f over [lo, hi] with `panels` equal Gauss-Legendre panels.
template <typename F>
double gauss_panels(F&& f, double lo, double hi, int panels) {
  const double width = (hi - lo) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; p++) {
    const double mid = lo + (p + 0.5) * width;
    const double half = 0.5 * width;
    double acc = 0.0;
    for (int i = 0; i < kGaussN; i++) {
      const double dx = half * kGaussX[i];
      acc += kGaussW[i] * (f(mid + dx) + f(mid - dx));
    }
    total += acc * half;
  }
  return total;
}

// CDF of the range of k iid standard normals:
//   P(R <= r) = k * Integral phi(z) * [Phi(z) - Phi(z - r)]^(k-1) dz.
// The integrand is bounded by phi(z), so [-9, 9] covers it to ~1e-17.
double normal_range_cdf(double r, int k) {
  if (r <= 0.0) return 0.0;
  const double km1 = k - 1;
  const double cdf = k * gauss_panels(
                             [&](double z) {
                               const double span =
                                   normal_cdf(z) - normal_cdf(z - r);
                               if (span <= 0.0) return 0.0;
                               return normal_pdf(z) * std::pow(span, km1);
                             },
                             -9.0, 9.0, 24);
  if (cdf < 0.0) return 0.0;
  if (cdf > 1.0) return 1.0;
  return cdf;
}

// Log-density of S = chi_df / sqrt(df), evaluated in log space so that
// large df does not overflow the s^(df-1) factor.
double chi_scale_log_pdf(double s, double df) {
  return (1.0 - 0.5 * df) * 0.6931471805599453094 +
         0.5 * df * std::log(df) - std::lgamma(0.5 * df) +
         (df - 1.0) * std::log(s) - 0.5 * df * s * s;
}

} // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0))
    throw InputError("incomplete beta requires a > 0 and b > 0");
  if (!(x >= 0.0 && x <= 1.0))
    throw InputError("incomplete beta requires x in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;

  const double log_front = std::lgamma(a + b) - std::lgamma(a) -
                           std::lgamma(b) + a * std::log(x) +
                           b * std::log1p(-x);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return std::exp(log_front) * incomplete_beta_cf(a, b, x) / a;
  }
  return 1.0 - std::exp(log_front) * incomplete_beta_cf(b, a, 1.0 - x) / b;
}

double f_upper_tail(double x, double df1, double df2) {
  if (!(df1 > 0.0) || !(df2 > 0.0))
    throw InputError("f_upper_tail requires df1 > 0 and df2 > 0");
  if (!(x >= 0.0)) throw InputError("f_upper_tail requires x >= 0");
  if (x == 0.0) return 1.0;
  return regularized_incomplete_beta(0.5 * df2, 0.5 * df1,
                                     df2 / (df2 + df1 * x));
}

double student_t_upper_tail(double t, double df) {
  if (!(df > 0.0)) throw InputError("student_t_upper_tail requires df > 0");
  const double both = regularized_incomplete_beta(0.5 * df, 0.5,
                                                  df / (df + t * t));
  return t >= 0.0 ? 0.5 * both : 1.0 - 0.5 * both;
}

double student_t_two_sided_p(double t, double df) {
  if (!(df > 0.0)) throw InputError("student_t_two_sided_p requires df > 0");
  return regularized_incomplete_beta(0.5 * df, 0.5, df / (df + t * t));
}

double studentized_range_upper_tail(double q, int k, double df) {
  if (k < 2) throw InputError("studentized range requires k >= 2 groups");
  if (!(df > 0.0)) throw InputError("studentized range requires df > 0");
  if (!(q >= 0.0)) throw InputError("studentized range requires q >= 0");
  if (q == 0.0) return 1.0;

  // Integration window for the chi scale factor: the log-density is concave
  // with mode near 1, so step outward until it has dropped by ~60 nats.
  const double mode = df > 1.0 ? std::sqrt((df - 1.0) / df) : 0.0;
  const double reach = 11.0 / std::sqrt(df);
  const double s_lo = std::max(0.0, mode - reach);
  const double s_hi = mode + reach;

  const double cdf = gauss_panels(
      [&](double s) {
        return std::exp(chi_scale_log_pdf(s, df)) * normal_range_cdf(q * s, k);
      },
      s_lo, s_hi, 24);
  const double p = 1.0 - cdf;
  if (p < 0.0) return 0.0;
  if (p > 1.0) return 1.0;
  return p;
}

double studentized_range_q_crit(double alpha, int k, double df) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw InputError("q_crit requires alpha in (0, 1)");
  if (k < 2) throw InputError("studentized range requires k >= 2 groups");
  if (!(df > 0.0)) throw InputError("studentized range requires df > 0");

  // Bracket: tail(0) = 1 > alpha; expand hi until the tail drops below.
  double lo = 0.0;
  double f_lo = 1.0 - alpha;
  double hi = 4.0;
  double f_hi = studentized_range_upper_tail(hi, k, df) - alpha;
  int expand = 0;
  while (f_hi > 0.0) {
    if (++expand > 60)
      throw NumericError("q_crit bracket expansion failed (alpha=" +
                         std::to_string(alpha) + ", k=" + std::to_string(k) +
                         ", df=" + std::to_string(df) + ")");
    lo = hi;
    f_lo = f_hi;
    hi *= 2.0;
    f_hi = studentized_range_upper_tail(hi, k, df) - alpha;
  }

  // Illinois-damped false position; the tail is smooth and monotone.
  double q = lo;
  for (int it = 0; it < 200; it++) {
    q = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
    if (!(q > lo && q < hi)) q = 0.5 * (lo + hi);
    const double fq = studentized_range_upper_tail(q, k, df) - alpha;
    if (fq == 0.0 || hi - lo < 1e-9) return q;
    if ((fq > 0.0) == (f_lo > 0.0)) {
      lo = q;
      f_lo = fq;
      f_hi *= 0.5;
    } else {
      hi = q;
      f_hi = fq;
      f_lo *= 0.5;
    }
  }
  throw NumericError("q_crit root finding failed to converge (alpha=" +
                     std::to_string(alpha) + ", k=" + std::to_string(k) +
                     ", df=" + std::to_string(df) + ")");
}

} // namespace ledsig
