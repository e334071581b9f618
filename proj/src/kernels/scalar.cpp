#include <cmath>

#include "ellgen/kernels.hpp"

namespace ellgen::kernels::scalar {

void series_eval(std::span<const double> coeffs, std::span<const double> u_re, std::span<const double> u_im,
                 std::span<double> out_re, std::span<double> out_im) {
  const std::size_t points = u_re.size();
  for (std::size_t j = 0; j < points; ++j) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
      const double nr = re * u_re[j] - im * u_im[j] + coeffs[k];
      const double ni = re * u_im[j] + im * u_re[j];
      re = nr;
      im = ni;
    }
    out_re[j] = re;
    out_im[j] = im;
  }
}

void expm1_batch(std::span<const double> t, std::span<double> out) {
  for (std::size_t j = 0; j < t.size(); ++j) out[j] = std::expm1(t[j]);
}

void cosh_sinh_power(std::span<const double> t, double x, int power, double scale, std::span<double> out) {
  for (std::size_t j = 0; j < t.size(); ++j) {
    // With e = expm1(t): sinh t = (e + e/(1+e))/2, cosh t = 1 + e^2/(2(1+e));
    // no cancellation for t >= 0.
    const double e = std::expm1(t[j]);
    const double sh = 0.5 * (e + e / (1.0 + e));
    const double ch = 1.0 + 0.5 * e * e / (1.0 + e);
    const double base = ch + x * sh;
    double acc = 1.0;
    double b = base;
    for (int p = power; p > 0; p >>= 1) {
      if (p & 1) acc *= b;
      b *= b;
    }
    out[j] = scale * acc;
  }
}

}  // namespace ellgen::kernels::scalar
