#pragma once

// Floating-point evaluators for the asymptotic laws of multi-edge trees,
// plus the numeric utilities the validation harness needs.
//
// The conformal pair at the center of everything:
//
//   upsilon(z) = (1 - 3z - sqrt(1-5z) sqrt(1-z)) / (2z)     z not in [1/5, 1]
//   zeta(u)    = u / (u^2 + 3u + 1)                         |u| < 1
//
// are holomorphic inverses of each other (principal square roots;
// upsilon(0) = 0 by continuity). Under z = zeta(u) the characteristic roots
//
//   alpha = (u+1)/(u^2+3u+1),   beta = u(u+1)/(u^2+3u+1)
//
// satisfy alpha + beta = 1 - z and alpha*beta = z(1-z).
//
// The height density kernel comes in two theta-like forms,
//
//   G(alpha) = sum_{m>=1} (2 alpha^2 m^2 - 3) m^2 exp(-alpha^2 m^2)
//            = pi^(5/2) / alpha^5 *
//              sum_{m>=1} (2 (pi/alpha)^2 m^2 - 3) m^2 exp(-(pi/alpha)^2 m^2),
//
// equal by Poisson summation. The first converges fast for large alpha, the
// second for small alpha; evaluators expose both plus an automatic switch.

#include <complex>

#include "medge/bigint.hpp"

namespace medge {

/// z = zeta(u); throws std::domain_error for |u| >= 1 or at the pole of the
/// map.
std::complex<double> zeta(std::complex<double> u);

/// u = upsilon(z); throws std::domain_error on the cut [1/5, 1].
std::complex<double> upsilon(std::complex<double> z);

/// One point of the conformal correspondence with its characteristic roots.
struct ConformalPoint {
  std::complex<double> z;
  std::complex<double> u;
  std::complex<double> alpha;
  std::complex<double> beta;

  static ConformalPoint from_u(std::complex<double> u);
  static ConformalPoint from_z(std::complex<double> z);
};

enum class GForm { automatic, primal, dual };

/// G(alpha) for alpha > 0. Terms are summed until they drop below 1e-16
/// relative; `automatic` uses the dual form below alpha = 0.4 where it
/// converges faster.
double g_alpha(double alpha, GForm form = GForm::automatic);

/// Two-term expected height (2/sqrt(5)) sqrt(pi n) - 3/2.
double expected_height_asym(long n);

/// Local-limit height density (5h/n) G(sqrt(5) h / (2 sqrt(n))) for trees of
/// size n; higher-order error factors are omitted.
double llt_density_multi(long n, double h);

/// Local-limit height density for d-ary trees with n vertices:
/// 2c/(beta sqrt(n)) * G(1/beta) with c = sqrt(2(d-1)/d), beta = 2 sqrt(n)/(c h).
double llt_density_dary(int d, long n, double h);

/// Average height of d-ary trees with n vertices: sqrt(2 pi d n / (d-1)).
double avg_height_dary(int d, long n);

/// Asymptotic proportion of vertices with exactly r children in d-ary trees:
/// C(d, r) (d-1)^(d-r) / d^d. Tends to 1/(r! e) as d grows.
double children_proportion(int d, int r);

/// Gaussian CDF approximation of P(V_n <= k) with the vertex-count CLT
/// centering 4n/5 and scale (2/5) sqrt(n).
double vertex_normal_approx(long n, double k);

/// Vertex-count local limit density
/// 5/(2 sqrt(2 pi n)) exp(-((k - 4n/5) / ((2/5) sqrt(n)))^2 / 2).
double vertex_llt(long n, double k);

/// log of the leading-term count 5^(n+1/2) / (2 sqrt(pi n^3)); kept in log
/// space because the value overflows double near n = 440.
double a_n_asym_log(long n);

/// exact/asymptotic count ratio, computed in log space.
double a_n_ratio(long n);

// --- numeric utilities -----------------------------------------------------

/// Regularized lower/upper incomplete gamma P(a, x), Q(a, x).
double regularized_gamma_p(double a, double x);
double regularized_gamma_q(double a, double x);

/// Upper tail of the chi-square distribution with `dof` degrees of freedom.
double chi_square_pvalue(double statistic, int dof);

double normal_cdf(double x);

}  // namespace medge
