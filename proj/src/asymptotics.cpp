#include "medge/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "medge/counting.hpp"

namespace medge {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

std::complex<double> zeta(std::complex<double> u) {
  if (std::abs(u) >= 1.0) {
    throw std::domain_error("zeta: u must lie in the open unit disk");
  }
  const std::complex<double> denom = u * u + 3.0 * u + 1.0;
  if (std::abs(denom) < 1e-14) {
    throw std::domain_error("zeta: u at the excluded pole of the map");
  }
  return u / denom;
}

std::complex<double> upsilon(std::complex<double> z) {
  if (z.imag() == 0.0 && z.real() >= 0.2 && z.real() <= 1.0) {
    throw std::domain_error("upsilon: z on the cut [1/5, 1]");
  }
  if (z == std::complex<double>(0.0, 0.0)) return {0.0, 0.0};
  const std::complex<double> root =
      std::sqrt(1.0 - 5.0 * z) * std::sqrt(1.0 - z);
  return (1.0 - 3.0 * z - root) / (2.0 * z);
}

ConformalPoint ConformalPoint::from_u(std::complex<double> u) {
  ConformalPoint p;
  p.u = u;
  const std::complex<double> denom = u * u + 3.0 * u + 1.0;
  if (std::abs(u) >= 1.0 || std::abs(denom) < 1e-14) {
    throw std::domain_error("ConformalPoint: u outside the map's domain");
  }
  p.z = u / denom;
  p.alpha = (u + 1.0) / denom;
  p.beta = u * (u + 1.0) / denom;
  return p;
}

ConformalPoint ConformalPoint::from_z(std::complex<double> z) {
  return from_u(upsilon(z));
}

namespace {

double g_primal(double alpha) {
  const double a2 = alpha * alpha;
  double sum = 0.0;
  for (int m = 1; m <= 100000; ++m) {
    const double m2 = static_cast<double>(m) * m;
    const double term = (2.0 * a2 * m2 - 3.0) * m2 * std::exp(-a2 * m2);
    sum += term;
    if (m >= 3 && std::abs(term) < 1e-16 * (std::abs(sum) + 1e-300)) break;
  }
  return sum;
}

double g_dual(double alpha) {
  const double q = kPi / alpha;
  const double q2 = q * q;
  double sum = 0.0;
  for (int m = 1; m <= 100000; ++m) {
    const double m2 = static_cast<double>(m) * m;
    const double term = (2.0 * q2 * m2 - 3.0) * m2 * std::exp(-q2 * m2);
    sum += term;
    if (m >= 3 && std::abs(term) < 1e-16 * (std::abs(sum) + 1e-300)) break;
  }
  if (sum == 0.0) return 0.0;  // underflow region; avoids 0 * inf below
  return std::pow(kPi, 2.5) / std::pow(alpha, 5.0) * sum;
}

}  // namespace

double g_alpha(double alpha, GForm form) {
  if (!(alpha > 0.0)) throw std::domain_error("g_alpha: alpha must be > 0");
  switch (form) {
    case GForm::primal:
      return g_primal(alpha);
    case GForm::dual:
      return g_dual(alpha);
    case GForm::automatic:
    default:
      return alpha < 0.4 ? g_dual(alpha) : g_primal(alpha);
  }
}

double expected_height_asym(long n) {
  if (n < 1) throw std::invalid_argument("expected_height_asym: n >= 1");
  return 2.0 / std::sqrt(5.0) * std::sqrt(kPi * static_cast<double>(n)) - 1.5;
}

double llt_density_multi(long n, double h) {
  if (n < 1 || h < 1.0) {
    throw std::invalid_argument("llt_density_multi: need n, h >= 1");
  }
  const double alpha = std::sqrt(5.0) * h / (2.0 * std::sqrt(static_cast<double>(n)));
  return 5.0 * h / static_cast<double>(n) * g_alpha(alpha);
}

double llt_density_dary(int d, long n, double h) {
  if (d < 2 || n < 1 || h < 1.0) {
    throw std::invalid_argument("llt_density_dary: need d >= 2, n, h >= 1");
  }
  const double c = std::sqrt(2.0 * (d - 1) / static_cast<double>(d));
  const double beta = 2.0 * std::sqrt(static_cast<double>(n)) / (c * h);
  return 2.0 * c / (beta * std::sqrt(static_cast<double>(n))) *
         g_alpha(1.0 / beta);
}

double avg_height_dary(int d, long n) {
  if (d < 2 || n < 1) {
    throw std::invalid_argument("avg_height_dary: need d >= 2, n >= 1");
  }
  return std::sqrt(2.0 * kPi * d * static_cast<double>(n) / (d - 1));
}

double children_proportion(int d, int r) {
  if (r < 0 || r > d) {
    throw std::invalid_argument("children_proportion: need 0 <= r <= d");
  }
  // C(d, r) (d-1)^(d-r) / d^d, in logs to stay finite for large d.
  const double log_c = log_bigint(binomial(d, r));
  const double log_power =
      r == d ? 0.0 : (d - r) * std::log(static_cast<double>(d - 1));
  return std::exp(log_c + log_power - d * std::log(static_cast<double>(d)));
}

double vertex_normal_approx(long n, double k) {
  if (n < 1) throw std::invalid_argument("vertex_normal_approx: n >= 1");
  const double mean = 4.0 * static_cast<double>(n) / 5.0;
  const double scale = 2.0 * std::sqrt(static_cast<double>(n)) / 5.0;
  return normal_cdf((k - mean) / scale);
}

double vertex_llt(long n, double k) {
  if (n < 1) throw std::invalid_argument("vertex_llt: n >= 1");
  const double mean = 4.0 * static_cast<double>(n) / 5.0;
  const double scale = 2.0 * std::sqrt(static_cast<double>(n)) / 5.0;
  const double t = (k - mean) / scale;
  return 5.0 / (2.0 * std::sqrt(2.0 * static_cast<double>(n) * kPi)) *
         std::exp(-0.5 * t * t);
}

double a_n_asym_log(long n) {
  if (n < 1) throw std::invalid_argument("a_n_asym_log: n >= 1");
  const double dn = static_cast<double>(n);
  return (dn + 0.5) * std::log(5.0) - std::log(2.0) -
         0.5 * std::log(kPi * dn * dn * dn);
}

double a_n_ratio(long n) {
  return std::exp(log_bigint(a_n(n)) - a_n_asym_log(n));
}

namespace {

// Series and continued-fraction evaluations of the incomplete gamma
// function, split at x = a + 1 as usual.
double gamma_p_series(double a, double x) {
  double sum = 1.0 / a;
  double term = sum;
  for (int k = 1; k <= 10000; ++k) {
    term *= x / (a + k);
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 10000; ++i) {
    const double an = -static_cast<double>(i) * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double regularized_gamma_p(double a, double x) {
  if (!(a > 0.0) || x < 0.0) {
    throw std::domain_error("regularized_gamma_p: need a > 0, x >= 0");
  }
  if (x == 0.0) return 0.0;
  return x < a + 1.0 ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

double regularized_gamma_q(double a, double x) {
  if (!(a > 0.0) || x < 0.0) {
    throw std::domain_error("regularized_gamma_q: need a > 0, x >= 0");
  }
  if (x == 0.0) return 1.0;
  return x < a + 1.0 ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

double chi_square_pvalue(double statistic, int dof) {
  if (dof < 1) throw std::invalid_argument("chi_square_pvalue: dof >= 1");
  if (statistic <= 0.0) return 1.0;
  return regularized_gamma_q(dof / 2.0, statistic / 2.0);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace medge
