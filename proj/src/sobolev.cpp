#include "ellgen/sobolev.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "ellgen/error.hpp"
#include "ellgen/kernels.hpp"

namespace ellgen {

double wallis(int m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "wallis needs m >= 1, got " + std::to_string(m));
  const int k = m - 1;
  double v = (k % 2 == 0) ? std::numbers::pi : 2.0;
  for (int j = (k % 2 == 0) ? 2 : 3; j <= k; j += 2) v *= static_cast<double>(j - 1) / j;
  return v;
}

double sphere_volume(int m) {
  const double h = 0.5 * (m + 1);
  return 2.0 * std::pow(std::numbers::pi, h) / std::tgamma(h);
}

namespace {

struct Panel {
  double a, b;
  double fa, fm, fb;
  double whole;
  double tol;
  int depth;
};

constexpr int kMaxDepth = 60;
constexpr std::size_t kMaxPanels = 1u << 22;

}  // namespace

// Adaptive Simpson processed level by level, so every level's new abscissae
// go through the vectorized integrand in one batch.
double sobolev_integral(int m, double b, double x, double abs_tol, double scale) {
  if (m < 2) throw Error(ErrorKind::InvalidArgument, "m must be >= 2");
  if (!(b > 0.0)) throw Error(ErrorKind::InvalidArgument, "b must be positive");
  if (!(abs_tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  const int power = m - 1;

  std::vector<double> pts = {0.0, 0.5 * b, b};
  std::vector<double> vals(3);
  kernels::cosh_sinh_power(pts, x, power, scale, vals);

  std::vector<Panel> level = {{0.0, b, vals[0], vals[1], vals[2], b / 6.0 * (vals[0] + 4.0 * vals[1] + vals[2]),
                               abs_tol, 0}};
  double total = 0.0;
  std::size_t evaluated = 3;
  while (!level.empty()) {
    pts.resize(2 * level.size());
    vals.resize(pts.size());
    for (std::size_t i = 0; i < level.size(); ++i) {
      const Panel& p = level[i];
      const double mid = 0.5 * (p.a + p.b);
      pts[2 * i] = 0.5 * (p.a + mid);
      pts[2 * i + 1] = 0.5 * (mid + p.b);
    }
    kernels::cosh_sinh_power(pts, x, power, scale, vals);
    evaluated += pts.size();
    if (evaluated > kMaxPanels) {
      throw Error(ErrorKind::ToleranceNotReached, "quadrature exceeded its evaluation budget");
    }

    std::vector<Panel> next;
    for (std::size_t i = 0; i < level.size(); ++i) {
      const Panel& p = level[i];
      const double mid = 0.5 * (p.a + p.b);
      const double fl = vals[2 * i];
      const double fr = vals[2 * i + 1];
      const double h = p.b - p.a;
      const double left = h / 12.0 * (p.fa + 4.0 * fl + p.fm);
      const double right = h / 12.0 * (p.fm + 4.0 * fr + p.fb);
      const double diff = left + right - p.whole;
      // Below a few ulps of the panel value the Simpson difference is rounding
      // noise, so the requested tolerance is floored there.
      const double floor = 1e-15 * (std::abs(left) + std::abs(right));
      if (std::abs(diff) <= 15.0 * std::max(p.tol, floor) || p.depth >= kMaxDepth) {
        total += left + right + diff / 15.0;
      } else {
        next.push_back({p.a, mid, p.fa, fl, p.fm, left, 0.5 * p.tol, p.depth + 1});
        next.push_back({mid, p.b, p.fm, fr, p.fb, right, 0.5 * p.tol, p.depth + 1});
      }
    }
    level = std::move(next);
  }
  return total;
}

SobolevRoot sobolev_solve(int m, double b, double tol) {
  if (m < 2) throw Error(ErrorKind::InvalidArgument, "sobolev_C needs m >= 2, got " + std::to_string(m));
  if (!(b > 0.0)) throw Error(ErrorKind::InvalidArgument, "b must be positive");
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  const double w = wallis(m);
  const double qtol = tol / 10.0;
  // x F(x) is evaluated directly (integrand scaled by x) so the quadrature
  // tolerance applies to the quantity compared against wallis(m).
  auto g = [&](double x) { return sobolev_integral(m, b, x, qtol, x); };

  // F is increasing in x >= 0, so x F(x) brackets the root between
  // w / F(hi) and hi = w / F(0).
  // The integrand increases in t, so b f(b) >= F >= f(b) b / (m b + 1)
  // roughly; it sets the scale for a relative tolerance on F itself.
  auto F_rel = [&](double x) {
    std::vector<double> t = {b}, fb(1);
    kernels::cosh_sinh_power(t, x, m - 1, 1.0, fb);
    return sobolev_integral(m, b, x, 1e-10 * b * fb[0] / (m * b + 1.0), 1.0);
  };
  const double hi0 = w / F_rel(0.0);
  double hi = hi0;
  double lo = w / F_rel(hi);
  double glo = g(lo) - w;
  double ghi = g(hi) - w;
  if (std::abs(glo) < tol) return {lo, std::abs(glo), 0};
  if (std::abs(ghi) < tol) return {hi, std::abs(ghi), 0};
  if (glo > 0.0 || ghi < 0.0) {
    // Quadrature noise at the endpoints; fall back to the wide bracket.
    lo = 0.0;
    hi = hi0 * 2.0 + 1.0;
  }
  for (int it = 1; it <= 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid) - w;
    if (std::abs(gm) < tol) return {mid, std::abs(gm), it};
    if (gm < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) {
      throw Error(ErrorKind::ToleranceNotReached, "bracket collapsed with residual " + std::to_string(std::abs(gm)));
    }
  }
  throw Error(ErrorKind::ToleranceNotReached, "bisection iteration cap reached");
}

double sobolev_C(int m, double b, double tol) { return sobolev_solve(m, b, tol).x; }

double radius_R(double diam, double b, int m, double tol) {
  if (!(diam > 0.0)) throw Error(ErrorKind::InvalidArgument, "diameter must be positive");
  return diam / (b * sobolev_C(m, b, tol));
}

double poincare_S(double l1, double l2, double V, double R, int m, double Sigma) {
  if (!(V > 0.0) || !(R > 0.0) || !(Sigma > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "V, R and Sigma must be positive");
  }
  if (!std::isfinite(l1) || l1 < 1.0 || !(l2 >= 1.0)) {
    throw Error(ErrorKind::ExponentRangeViolation, "need finite l1 >= 1 and l2 >= 1");
  }
  if (l2 < m && l1 > m * l2 / (m - l2)) {
    throw Error(ErrorKind::ExponentRangeViolation, "l1 exceeds the Sobolev exponent m l2 / (m - l2)");
  }
  return std::pow(V / sphere_volume(m), 1.0 / l1 - 1.0 / l2) * R * Sigma;
}

MoserExponents moser_exponents(int m, double p) {
  if (m < 3) throw Error(ErrorKind::ExponentRangeViolation, "Moser iteration needs m >= 3");
  if (!(p > 0.5 * m)) throw Error(ErrorKind::ExponentRangeViolation, "Moser iteration needs p > m/2");
  MoserExponents e;
  e.m = m;
  e.p = p;
  e.mu = static_cast<double>(m) / (m - 2);
  e.eps = (e.mu * (p - 1.0) - p) / (p * (e.mu - 1.0));
  if (!(e.eps > 0.0 && e.eps < 1.0)) throw Error(ErrorKind::ExponentRangeViolation, "eps outside (0,1)");
  const double r = 1.0 / e.mu;
  e.K1 = r / ((1.0 - r) * (1.0 - r));
  e.K2 = 1.0 / (1.0 - r);
  return e;
}

std::pair<double, double> moser_partial_sums(double mu, int terms) {
  double k1 = 0.0;
  double k2 = 0.0;
  for (int i = terms; i >= 0; --i) {
    const double w = std::pow(mu, -i);
    k1 += i * w;
    k2 += w;
  }
  return {k1, k2};
}

double moser_constant(int m, double p, double R, double Lambda, double Cmp) {
  const MoserExponents e = moser_exponents(m, p);
  if (!(R > 0.0) || !(Lambda >= 0.0) || !(Cmp > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "need R > 0, Lambda >= 0, Cmp > 0");
  }
  const double den = e.mu * (p - 1.0) - p;
  const double B = Cmp * std::pow(Lambda, 0.5 * (e.mu - 1.0) / den) * std::pow(R, p * (e.mu - 1.0) / den) + 2.0;
  return std::pow(e.mu, 2.0 * e.K1 * p * (e.mu - 1.0) / den) * std::pow(B, 2.0 * e.K2);
}

}  // namespace ellgen
