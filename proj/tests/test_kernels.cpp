#include "ellgen/kernels.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "helpers.hpp"

using namespace ellgen;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

}  // namespace

TEST_CASE("backend selection") {
  const kernels::Backend b = kernels::active_backend();
  MESSAGE("active backend: ", kernels::to_string(b));
  if (!kernels::avx2_available()) CHECK(b == kernels::Backend::Scalar);
}

TEST_CASE("scalar kernels against libm") {
  std::vector<double> t = {0.0, 1e-12, 0.25, 3.0, 30.0};
  std::vector<double> out(t.size());
  kernels::scalar::cosh_sinh_power(t, 0.5, 3, 2.0, out);
  for (std::size_t j = 0; j < t.size(); ++j) {
    CHECK(rel(out[j], 2.0 * std::pow(std::cosh(t[j]) + 0.5 * std::sinh(t[j]), 3)) < 1e-14);
  }
}

#if defined(ELLGEN_HAVE_AVX2_KERNELS)

TEST_CASE("AVX2 kernels agree with the scalar reference") {
  if (!kernels::avx2_available()) {
    MESSAGE("AVX2 not available on this CPU; skipping");
    return;
  }
  std::mt19937_64 rng(test::kSeed + 60);
  std::uniform_real_distribution<double> wide(-700.0, 700.0);
  std::uniform_real_distribution<double> narrow(-1e-3, 1e-3);

  for (std::size_t count : {1u, 3u, 4u, 7u, 64u, 1001u}) {
    std::vector<double> t(count), a(count), b(count);
    for (std::size_t j = 0; j < count; ++j) t[j] = (j % 3 == 0) ? narrow(rng) : wide(rng);
    kernels::scalar::expm1_batch(t, a);
    kernels::avx2::expm1_batch(t, b);
    for (std::size_t j = 0; j < count; ++j) CHECK(rel(a[j], b[j]) < 4e-15);

    std::uniform_real_distribution<double> pos(0.0, 6.0);
    for (auto& v : t) v = pos(rng);
    for (int power : {0, 1, 2, 7, 19}) {
      kernels::scalar::cosh_sinh_power(t, 1.7, power, 0.3, a);
      kernels::avx2::cosh_sinh_power(t, 1.7, power, 0.3, b);
      for (std::size_t j = 0; j < count; ++j) CHECK(rel(a[j], b[j]) < 1e-13);
    }

    std::vector<double> coeffs(40);
    std::uniform_real_distribution<double> c(-50.0, 50.0);
    for (auto& v : coeffs) v = c(rng);
    std::vector<double> ur(count), ui(count), ar(count), ai(count), br(count), bi(count);
    std::uniform_real_distribution<double> u(-0.6, 0.6);
    for (std::size_t j = 0; j < count; ++j) {
      ur[j] = u(rng);
      ui[j] = u(rng);
    }
    kernels::scalar::series_eval(coeffs, ur, ui, ar, ai);
    kernels::avx2::series_eval(coeffs, ur, ui, br, bi);
    for (std::size_t j = 0; j < count; ++j) {
      const double scale = std::max(1.0, std::hypot(ar[j], ai[j]));
      CHECK(std::abs(ar[j] - br[j]) < 1e-12 * scale);
      CHECK(std::abs(ai[j] - bi[j]) < 1e-12 * scale);
    }
  }
}

#endif

TEST_CASE("dispatching entry points match the scalar reference") {
  std::vector<double> t(37), a(37), b(37);
  for (std::size_t j = 0; j < t.size(); ++j) t[j] = 0.1 * static_cast<double>(j);
  kernels::expm1_batch(t, a);
  kernels::scalar::expm1_batch(t, b);
  for (std::size_t j = 0; j < t.size(); ++j) CHECK(rel(a[j], b[j]) < 4e-15);
}
