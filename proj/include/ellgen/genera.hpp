#pragma once

#include "ellgen/chern.hpp"
#include "ellgen/theta.hpp"

namespace ellgen {

/// Genus of a manifold as an exact u-series: the selected per-root factor,
/// reduced to Pontryagin classes and paired with [M]. AHat/LHat give constant
/// series of the requested order.
USeries genus(const Manifold& m, GenusKind kind, int uorder = kDefaultUOrder);

/// <Ahat(TM) c, [M]>, using only the u^0 part of c.
Rat twisted_ahat(const Manifold& m, const PontPoly& c);
/// q-graded index: <Ahat(TM) c, [M]> with the full u-dependence of c kept.
USeries twisted_ahat_series(const Manifold& m, const PontPoly& c);
/// <Lhat(TM) c, [M]>, using only the u^0 part of c.
Rat twisted_lhat(const Manifold& m, const PontPoly& c);

/// sigma - (24 Ahat - <Ahat ch(T_C M), [M]>) for an 8-manifold with
/// p1^2[M] = p11 and p2[M] = p2. Vanishes identically.
Rat cancellation_residual(const Rat& p11, const Rat& p2);

/// Smooth degree-d hypersurface X(N; d) in CP^N, real dimension 2(N-1).
struct Hypersurface {
  int ambient = 2;  // N
  int degree = 1;   // d

  int real_dim() const { return 2 * (ambient - 1); }
};

/// Pontryagin numbers of X(N; d) from p(X) = (1+x^2)^{N+1} / (1+d^2 x^2):
/// p_lambda[X] = d * [x^{N-1}] p_lambda(x). Throws InvalidDegree for d < 1 or
/// N < 2 and DimNotMultipleOf4 unless 2(N-1) is divisible by 4.
Manifold hypersurface_pont(const Hypersurface& h);

/// Residue route: [x^N] f(x)^{N+1} (d x) / (f(d x) f(0)), with x the hyperplane
/// class. The f(0) divisor accounts for the trivial summand in
/// T CP^N + C = (N+1) O(1) and is 1 for normalized factors.
USeries hypersurface_genus(const Hypersurface& h, const RootSeries& f);

enum class RootConvention {
  Hyperbolic,    // x/tanh x, (x/2)/sinh(x/2)
  Trigonometric  // x/tan x, (x/2)/sin(x/2)
};

/// Complex-root factor for the residue route. The trigonometric factors are
/// the hyperbolic ones at sqrt(-1) x, so on a manifold of complex dimension
/// 2n they return (-1)^n times the hyperbolic value.
RootSeries complex_root_factor(GenusKind kind, RootConvention convention, int xdeg);

}  // namespace ellgen
