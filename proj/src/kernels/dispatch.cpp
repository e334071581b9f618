#include <cstdlib>
#include <string>

#include "ellgen/kernels.hpp"

namespace ellgen::kernels {

std::string_view to_string(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

bool avx2_available() {
#if defined(ELLGEN_HAVE_AVX2_KERNELS)
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok;
#else
  return false;
#endif
}

Backend active_backend() {
  static const Backend chosen = [] {
    const char* env = std::getenv("ELLGEN_KERNELS");
    if (env != nullptr && std::string(env) == "scalar") return Backend::Scalar;
    return avx2_available() ? Backend::Avx2 : Backend::Scalar;
  }();
  return chosen;
}

void series_eval(std::span<const double> coeffs, std::span<const double> u_re, std::span<const double> u_im,
                 std::span<double> out_re, std::span<double> out_im) {
#if defined(ELLGEN_HAVE_AVX2_KERNELS)
  if (active_backend() == Backend::Avx2) return avx2::series_eval(coeffs, u_re, u_im, out_re, out_im);
#endif
  scalar::series_eval(coeffs, u_re, u_im, out_re, out_im);
}

void cosh_sinh_power(std::span<const double> t, double x, int power, double scale, std::span<double> out) {
#if defined(ELLGEN_HAVE_AVX2_KERNELS)
  if (active_backend() == Backend::Avx2) return avx2::cosh_sinh_power(t, x, power, scale, out);
#endif
  scalar::cosh_sinh_power(t, x, power, scale, out);
}

void expm1_batch(std::span<const double> t, std::span<double> out) {
#if defined(ELLGEN_HAVE_AVX2_KERNELS)
  if (active_backend() == Backend::Avx2) return avx2::expm1_batch(t, out);
#endif
  scalar::expm1_batch(t, out);
}

}  // namespace ellgen::kernels
