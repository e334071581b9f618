#pragma once

#include <complex>
#include <span>
#include <vector>

#include "ellgen/series.hpp"

namespace ellgen {

// Divisor-sum q-expansions of the weight-2 and weight-4 forms over
// Gamma_0(2) (index 1) and Gamma^0(2) (index 2), all as u = q^(1/2) series.
//   delta1 =  1/4  + 6 sum_n (sum_{d|n, d odd} d) q^n
//   eps1   =  1/16 +   sum_n (sum_{d|n} (-1)^d d^3) q^n
//   delta2 = -1/8  - 3 sum_n (sum_{d|n, d odd} d) q^{n/2}
//   eps2   =           sum_n (sum_{d|n, n/d odd} d^3) q^{n/2}
USeries delta1(int uorder);
USeries eps1(int uorder);
USeries delta2(int uorder);
USeries eps2(int uorder);

/// Coordinates of a weight-2n form over Gamma^0(2) in the basis
/// (8 delta2)^{n-2r} eps2^r, r = 0..floor(n/2).
struct ModBasisDecomp {
  int n = 0;
  std::vector<Rat> h;

  /// Integrality is reported, not enforced: rational Pontryagin data give
  /// rational h_r in general.
  bool integral() const;
};

/// Solves the triangular system on u^0..u^{floor(n/2)} and then checks the
/// whole available series; throws ResidualNonzero when the input is not in the
/// span.
ModBasisDecomp expand_in_basis(const USeries& e2, int n);

/// sum_r h_r (8 delta2)^{n-2r} eps2^r.
USeries reconstruct_ell2(const ModBasisDecomp& d, int uorder);

/// 2^{2n} sum_r h_r (8 delta1)^{n-2r} eps1^r: the image of Ell2 under
/// tau -> -1/tau, i.e. Ell1.
USeries reconstruct_ell1(const ModBasisDecomp& d, int uorder);

struct NumericValue {
  std::complex<double> value;
  /// Geometric estimate of the omitted tail from the last retained coefficient.
  double tail_bound = 0.0;
};

/// Evaluates the truncated series at q = exp(2 pi i tau). Throws
/// NotInUpperHalfPlane unless Im(tau) > 0.
NumericValue numeric_eval(const USeries& s, std::complex<double> tau);

/// Same as numeric_eval at many points; uses the vectorized kernel.
std::vector<NumericValue> numeric_eval_many(const USeries& s, std::span<const std::complex<double>> taus);

}  // namespace ellgen
