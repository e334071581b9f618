#include "ellgen/theta.hpp"

#include "ellgen/error.hpp"

namespace ellgen {

std::string_view to_string(GenusKind kind) {
  switch (kind) {
    case GenusKind::AHat: return "ahat";
    case GenusKind::LHat: return "lhat";
    case GenusKind::Ell1: return "ell1";
    case GenusKind::Ell2: return "ell2";
    case GenusKind::Witten: return "witten";
  }
  return "?";
}

std::optional<GenusKind> parse_genus_kind(std::string_view name) {
  if (name == "ahat") return GenusKind::AHat;
  if (name == "lhat" || name == "signature") return GenusKind::LHat;
  if (name == "ell1") return GenusKind::Ell1;
  if (name == "ell2") return GenusKind::Ell2;
  if (name == "witten") return GenusKind::Witten;
  return std::nullopt;
}

RootSeries cosh_series(const Rat& scale, int xdeg, int uorder) {
  return RootSeries::from_rationals(xdeg, uorder, [&](int k) -> Rat {
    if (k % 2) return 0;
    Rat s = 1;
    for (int i = 0; i < k; ++i) s *= scale;
    return s / factorial(static_cast<unsigned>(k));
  });
}

RootSeries sinh_over_x_series(const Rat& scale, int xdeg, int uorder) {
  return RootSeries::from_rationals(xdeg, uorder, [&](int k) -> Rat {
    if (k % 2) return 0;
    Rat s = 1;
    for (int i = 0; i < k; ++i) s *= scale;
    return s / factorial(static_cast<unsigned>(k + 1));
  });
}

RootSeries ahat_root(int xdeg, int uorder) { return inverse(sinh_over_x_series(Rat(1, 2), xdeg, uorder)); }

RootSeries lhat_root(int xdeg, int uorder) {
  // x/tanh(x/2) = 2 cosh(x/2) * (x/2)/sinh(x/2)
  return Rat(2) * (cosh_series(Rat(1, 2), xdeg, uorder) * ahat_root(xdeg, uorder));
}

namespace {

// 1 + c*(e^x + e^-x) + c^2 style building block: a + b*cosh(x), with a, b
// u-series and cosh expanded exactly.
RootSeries affine_cosh(const USeries& a, const USeries& b, int xdeg) {
  const RootSeries ch = cosh_series(1, xdeg, a.order());
  return RootSeries::constant(a, xdeg) + b * ch;
}

// Factor m of the theta quotient: (1-q^m)^2 / (1 - 2 q^m cosh x + q^{2m}).
RootSeries theta_quotient_factor(int m, int xdeg, int uorder) {
  const int e = 2 * m;  // u-exponent of q^m
  const USeries one = USeries::constant(1, uorder);
  const USeries qm = USeries::monomial(e, 1, uorder);
  const USeries num = (one - qm) * (one - qm);
  const USeries den_a = one + USeries::monomial(2 * e, 1, uorder);
  const USeries den_b = Rat(-2) * qm;
  return num * inverse(affine_cosh(den_a, den_b, xdeg));
}

// Factor m of theta1: (1 + 2 q^m cosh x + q^{2m}) / (1+q^m)^2.
RootSeries theta1_quotient_factor(int m, int xdeg, int uorder) {
  const int e = 2 * m;
  const USeries one = USeries::constant(1, uorder);
  const USeries qm = USeries::monomial(e, 1, uorder);
  const USeries num_a = one + USeries::monomial(2 * e, 1, uorder);
  const USeries num_b = Rat(2) * qm;
  return inverse((one + qm) * (one + qm)) * affine_cosh(num_a, num_b, xdeg);
}

// Factor m of theta2: (1 - 2 q^{m-1/2} cosh x + q^{2m-1}) / (1-q^{m-1/2})^2.
RootSeries theta2_quotient_factor(int m, int xdeg, int uorder) {
  const int e = 2 * m - 1;
  const USeries one = USeries::constant(1, uorder);
  const USeries qh = USeries::monomial(e, 1, uorder);
  const USeries num_a = one + USeries::monomial(2 * e, 1, uorder);
  const USeries num_b = Rat(-2) * qh;
  return inverse((one - qh) * (one - qh)) * affine_cosh(num_a, num_b, xdeg);
}

}  // namespace

RootSeries theta_factor(ThetaKind kind, int xdeg, int uorder) {
  if (xdeg < 1 || uorder < 1) throw Error(ErrorKind::DimMismatch, "theta_factor needs xdeg, uorder >= 1");
  switch (kind) {
    case ThetaKind::Theta:
      return ahat_root(xdeg, uorder) *
             product([&](int m) { return theta_quotient_factor(m, xdeg, uorder); },
                     [](int m) { return 2 * m; }, xdeg, uorder);
    case ThetaKind::Theta1:
      return cosh_series(Rat(1, 2), xdeg, uorder) *
             product([&](int m) { return theta1_quotient_factor(m, xdeg, uorder); },
                     [](int m) { return 2 * m; }, xdeg, uorder);
    case ThetaKind::Theta2:
      return product([&](int m) { return theta2_quotient_factor(m, xdeg, uorder); },
                     [](int m) { return 2 * m - 1; }, xdeg, uorder);
  }
  throw Error(ErrorKind::Parse, "unknown theta kind");
}

RootSeries genus_root_series(GenusKind kind, int xdeg, int uorder) {
  switch (kind) {
    case GenusKind::AHat: return ahat_root(xdeg, uorder);
    case GenusKind::LHat: return lhat_root(xdeg, uorder);
    case GenusKind::Ell1:
      return Rat(2) * (theta_factor(ThetaKind::Theta, xdeg, uorder) * theta_factor(ThetaKind::Theta1, xdeg, uorder));
    case GenusKind::Ell2:
      return theta_factor(ThetaKind::Theta, xdeg, uorder) * theta_factor(ThetaKind::Theta2, xdeg, uorder);
    case GenusKind::Witten: return theta_factor(ThetaKind::Theta, xdeg, uorder);
  }
  throw Error(ErrorKind::Parse, "unknown genus kind");
}

}  // namespace ellgen
