#include "ellgen/modular.hpp"

#include <cmath>

#include "ellgen/genera.hpp"
#include "ellgen/sampling.hpp"
#include "ellgen/theta.hpp"
#include "helpers.hpp"

using namespace ellgen;
using ellgen::test::from_ints;
using ellgen::test::kind_of;

TEST_CASE("leading coefficients of delta and epsilon") {
  const USeries d1 = delta1(6), e1 = eps1(6), d2 = delta2(4), e2 = eps2(4);
  CHECK(d1[0] == Rat(1, 4));
  CHECK(d1[2] == 6);
  CHECK(d1[4] == 6);
  CHECK(e1[0] == Rat(1, 16));
  CHECK(e1[2] == -1);
  CHECK(e1[4] == 7);
  CHECK(d2[0] == Rat(-1, 8));
  CHECK(d2[1] == -3);
  CHECK(d2[2] == -3);
  CHECK(e2[0] == 0);
  CHECK(e2[1] == 1);
  CHECK(e2[2] == 8);
  CHECK(d1.is_even());
  CHECK(e1.is_even());
}

TEST_CASE("basis decomposition of Ell2 and the Ell1 image") {
  std::mt19937_64 rng(test::kSeed + 50);
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      const Manifold m = random_manifold(n, rng);
      const int k = 12;
      const USeries e2 = genus(m, GenusKind::Ell2, k);
      const ModBasisDecomp d = expand_in_basis(e2, n);
      CHECK(d.h.size() == static_cast<std::size_t>(n / 2 + 1));
      CHECK(reconstruct_ell2(d, k) == e2);
      CHECK(reconstruct_ell1(d, k) == genus(m, GenusKind::Ell1, k));
    }
  }
}

TEST_CASE("integrality flag") {
  const Manifold q = hypersurface_pont({5, 2});
  const ModBasisDecomp d = expand_in_basis(genus(q, GenusKind::Ell2, 10), 2);
  CHECK(d.h[0] == 0);
  CHECK(d.h[1] == 2);
  CHECK(d.integral());
  const ModBasisDecomp frac{1, {Rat(1, 3)}};
  CHECK_FALSE(frac.integral());
}

TEST_CASE("series outside the span are rejected") {
  const USeries not_a_form = from_ints({1, 1, 0, 0, 0, 0}, 6);
  CHECK(kind_of([&] { expand_in_basis(not_a_form, 2); }) == ErrorKind::ResidualNonzero);
  CHECK(kind_of([&] { expand_in_basis(from_ints({1}, 1), 2); }) == ErrorKind::DimMismatch);
}

TEST_CASE("numeric transformation laws") {
  const int k = 60;
  const std::complex<double> I(0.0, 1.0);
  CHECK(std::abs(numeric_eval(delta2(k), I).value + numeric_eval(delta1(k), I).value) < 1e-12);
  CHECK(std::abs(numeric_eval(eps2(k), I).value - numeric_eval(eps1(k), I).value) < 1e-12);
  for (std::complex<double> tau : {std::complex<double>(0.3, 1.1), std::complex<double>(-0.45, 0.8), 2.0 * I}) {
    const std::complex<double> inv = -1.0 / tau;
    CHECK(std::abs(numeric_eval(delta1(k), inv).value - tau * tau * numeric_eval(delta2(k), tau).value) < 1e-10);
    CHECK(std::abs(numeric_eval(eps1(k), inv).value - std::pow(tau, 4) * numeric_eval(eps2(k), tau).value) <
          1e-10);
  }
  CHECK(kind_of([&] { numeric_eval(delta1(4), std::complex<double>(1.0, 0.0)); }) ==
        ErrorKind::NotInUpperHalfPlane);
}

TEST_CASE("tail bound shrinks with the order") {
  const std::complex<double> tau(0.0, 1.0);
  CHECK(numeric_eval(delta2(40), tau).tail_bound < numeric_eval(delta2(20), tau).tail_bound);
  CHECK(numeric_eval(delta2(40), tau).tail_bound < 1e-30);
}
