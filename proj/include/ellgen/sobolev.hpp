#pragma once

#include <utility>

// Double-precision constants for the Poincare-Sobolev and Moser estimates.
// Everything here is floating point with explicit tolerances.

namespace ellgen {

/// int_0^pi sin^{m-1} t dt by I_k = ((k-1)/k) I_{k-2}, I_0 = pi, I_1 = 2.
double wallis(int m);

/// vol(S^m(1)) = 2 pi^{(m+1)/2} / Gamma((m+1)/2).
double sphere_volume(int m);

/// F(x) = int_0^b (cosh t + x sinh t)^{m-1} dt, scaled by `scale`, to
/// absolute accuracy `abs_tol` on the scaled value.
double sobolev_integral(int m, double b, double x, double abs_tol, double scale = 1.0);

struct SobolevRoot {
  double x = 0.0;
  /// |x F(x) - wallis(m)| as measured by the quadrature.
  double residual = 0.0;
  int iterations = 0;
};

/// Unique positive root of x F(x) = wallis(m). Requires m >= 2, b > 0,
/// tol > 0; throws ToleranceNotReached if bisection stalls.
SobolevRoot sobolev_solve(int m, double b, double tol = 1e-12);
double sobolev_C(int m, double b, double tol = 1e-12);

/// diam / (b C(b)).
double radius_R(double diam, double b, int m, double tol = 1e-12);

/// (V / vol(S^m))^{1/l1 - 1/l2} R Sigma. Throws ExponentRangeViolation
/// unless 1 <= l1 <= m l2 / (m - l2) (no upper bound once l2 >= m).
double poincare_S(double l1, double l2, double V, double R, int m, double Sigma);

struct MoserExponents {
  int m = 0;
  double p = 0.0;
  double mu = 0.0;
  double eps = 0.0;
  double K1 = 0.0;
  double K2 = 0.0;
};

/// Throws ExponentRangeViolation unless m >= 3 and p > m/2.
MoserExponents moser_exponents(int m, double p);

/// (sum_{i=1}^{terms} i mu^{-i}, sum_{i=0}^{terms} mu^{-i}).
std::pair<double, double> moser_partial_sums(double mu, int terms);

/// mu^{2 K1 p(mu-1)/(mu(p-1)-p)} B^{2 K2} with
/// B = Cmp Lambda^{(mu-1)/(2(mu(p-1)-p))} R^{p(mu-1)/(mu(p-1)-p)} + 2.
double moser_constant(int m, double p, double R, double Lambda, double Cmp);

}  // namespace ellgen
