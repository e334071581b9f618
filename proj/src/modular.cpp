#include "ellgen/modular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ellgen/error.hpp"
#include "ellgen/kernels.hpp"

namespace ellgen {

namespace {

template <typename Fn>
Int divisor_sum(int n, Fn term) {
  Int s = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) s += term(d, n / d);
  }
  return s;
}

Int cube(int d) { return Int(d) * d * d; }

}  // namespace

USeries delta1(int uorder) {
  std::vector<Rat> c(static_cast<std::size_t>(std::max(uorder, 0)));
  if (uorder > 0) c[0] = Rat(1, 4);
  for (int n = 1; 2 * n < uorder; ++n) {
    c[2 * n] = Rat(6 * divisor_sum(n, [](int d, int) { return d % 2 ? Int(d) : Int(0); }));
  }
  return USeries(std::move(c), uorder);
}

USeries eps1(int uorder) {
  std::vector<Rat> c(static_cast<std::size_t>(std::max(uorder, 0)));
  if (uorder > 0) c[0] = Rat(1, 16);
  for (int n = 1; 2 * n < uorder; ++n) {
    c[2 * n] = Rat(divisor_sum(n, [](int d, int) { return d % 2 ? Int(-cube(d)) : cube(d); }));
  }
  return USeries(std::move(c), uorder);
}

USeries delta2(int uorder) {
  std::vector<Rat> c(static_cast<std::size_t>(std::max(uorder, 0)));
  if (uorder > 0) c[0] = Rat(-1, 8);
  for (int n = 1; n < uorder; ++n) {
    c[n] = Rat(-3 * divisor_sum(n, [](int d, int) { return d % 2 ? Int(d) : Int(0); }));
  }
  return USeries(std::move(c), uorder);
}

USeries eps2(int uorder) {
  std::vector<Rat> c(static_cast<std::size_t>(std::max(uorder, 0)));
  for (int n = 1; n < uorder; ++n) {
    c[n] = Rat(divisor_sum(n, [](int d, int cofactor) { return cofactor % 2 ? cube(d) : Int(0); }));
  }
  return USeries(std::move(c), uorder);
}

bool ModBasisDecomp::integral() const {
  return std::all_of(h.begin(), h.end(), [](const Rat& r) { return is_integer(r); });
}

namespace {

std::vector<USeries> basis(int n, const USeries& d8, const USeries& e, int uorder) {
  std::vector<USeries> out;
  for (int r = 0; 2 * r <= n; ++r) out.push_back(power(d8, n - 2 * r) * power(e, r));
  (void)uorder;
  return out;
}

}  // namespace

ModBasisDecomp expand_in_basis(const USeries& e2, int n) {
  const int half = n / 2;
  const int uorder = e2.order();
  if (uorder < half + 1) {
    throw Error(ErrorKind::DimMismatch, "series too short to determine " + std::to_string(half + 1) + " coordinates");
  }
  const auto b = basis(n, Rat(8) * delta2(uorder), eps2(uorder), uorder);
  // b_r = (-1)^{n-2r} u^r + O(u^{r+1}): solve top-down from u^0.
  ModBasisDecomp d{n, std::vector<Rat>(static_cast<std::size_t>(half) + 1)};
  USeries rest = e2;
  for (int r = 0; r <= half; ++r) {
    d.h[r] = rest[r] / b[r][r];
    rest -= d.h[r] * b[r];
  }
  if (!rest.is_zero()) {
    const auto s = rest.support();
    throw Error(ErrorKind::ResidualNonzero,
                "series is not a weight-" + std::to_string(2 * n) + " form in the (8 delta2, eps2) basis; residual at u^" +
                    std::to_string(s.front()) + " is " + rat_string(rest[s.front()]));
  }
  return d;
}

USeries reconstruct_ell2(const ModBasisDecomp& d, int uorder) {
  const auto b = basis(d.n, Rat(8) * delta2(uorder), eps2(uorder), uorder);
  USeries out(uorder);
  for (std::size_t r = 0; r < d.h.size(); ++r) out += d.h[r] * b[r];
  return out;
}

USeries reconstruct_ell1(const ModBasisDecomp& d, int uorder) {
  const auto b = basis(d.n, Rat(8) * delta1(uorder), eps1(uorder), uorder);
  USeries out(uorder);
  for (std::size_t r = 0; r < d.h.size(); ++r) out += d.h[r] * b[r];
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(2 * d.n));
  return Rat(scale) * out;
}

std::vector<NumericValue> numeric_eval_many(const USeries& s, std::span<const std::complex<double>> taus) {
  const std::size_t count = taus.size();
  std::vector<double> coeffs(static_cast<std::size_t>(s.order()));
  for (int k = 0; k < s.order(); ++k) coeffs[k] = rat_to_double(s[k]);
  std::vector<double> ur(count), ui(count), vr(count), vi(count);
  for (std::size_t j = 0; j < count; ++j) {
    if (!(taus[j].imag() > 0.0)) {
      throw Error(ErrorKind::NotInUpperHalfPlane, "tau must have positive imaginary part");
    }
    // u = q^(1/2) = exp(pi i tau)
    const std::complex<double> u = std::exp(std::complex<double>(0.0, std::numbers::pi) * taus[j]);
    ur[j] = u.real();
    ui[j] = u.imag();
  }
  kernels::series_eval(coeffs, ur, ui, vr, vi);

  const int k = s.order();
  double last = 0.0;
  for (int i = std::max(0, k - 2); i < k; ++i) last = std::max(last, std::abs(coeffs[i]));
  std::vector<NumericValue> out(count);
  for (std::size_t j = 0; j < count; ++j) {
    const double r = std::hypot(ur[j], ui[j]);
    const double tail = k == 0 ? 0.0 : 2.0 * last * std::pow(r, k) / (1.0 - r);
    out[j] = NumericValue{{vr[j], vi[j]}, tail};
  }
  return out;
}

NumericValue numeric_eval(const USeries& s, std::complex<double> tau) {
  return numeric_eval_many(s, std::span<const std::complex<double>>(&tau, 1)).front();
}

}  // namespace ellgen
