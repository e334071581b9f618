#pragma once

#include <span>
#include <string_view>

// Double-precision inner loops behind the numeric checks. Each kernel has a
// scalar reference and an AVX2/FMA variant; the variant is chosen once at
// runtime from CPUID and can be pinned with ELLGEN_KERNELS=scalar.

namespace ellgen::kernels {

enum class Backend { Scalar, Avx2 };

std::string_view to_string(Backend b);

/// True when the CPU (and the build) can run the AVX2 variants.
bool avx2_available();

/// Backend used by the dispatching entry points below.
Backend active_backend();

/// Horner evaluation of sum_k coeffs[k] u_j^k at many complex points
/// u_j = u_re[j] + i u_im[j]. All spans must have equal length.
void series_eval(std::span<const double> coeffs, std::span<const double> u_re, std::span<const double> u_im,
                 std::span<double> out_re, std::span<double> out_im);

/// out[j] = scale * (cosh t_j + x sinh t_j)^power for t_j >= 0.
void cosh_sinh_power(std::span<const double> t, double x, int power, double scale, std::span<double> out);

/// expm1 on a batch of arguments in [-700, 700].
void expm1_batch(std::span<const double> t, std::span<double> out);

namespace scalar {
void series_eval(std::span<const double> coeffs, std::span<const double> u_re, std::span<const double> u_im,
                 std::span<double> out_re, std::span<double> out_im);
void cosh_sinh_power(std::span<const double> t, double x, int power, double scale, std::span<double> out);
void expm1_batch(std::span<const double> t, std::span<double> out);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define ELLGEN_HAVE_AVX2_KERNELS 1
namespace avx2 {
void series_eval(std::span<const double> coeffs, std::span<const double> u_re, std::span<const double> u_im,
                 std::span<double> out_re, std::span<double> out_im);
void cosh_sinh_power(std::span<const double> t, double x, int power, double scale, std::span<double> out);
void expm1_batch(std::span<const double> t, std::span<double> out);
}  // namespace avx2
#endif

}  // namespace ellgen::kernels
