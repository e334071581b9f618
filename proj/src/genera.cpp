#include "ellgen/genera.hpp"

#include "ellgen/error.hpp"

namespace ellgen {

namespace {

PontPoly ahat_class(int n, int uorder) { return genus_class(ahat_root(2 * n + 1, uorder), n); }
PontPoly lhat_class(int n, int uorder) { return genus_class(lhat_root(2 * n + 1, uorder), n); }

}  // namespace

USeries genus(const Manifold& m, GenusKind kind, int uorder) {
  const int n = m.n();
  const RootSeries f = genus_root_series(kind, 2 * n + 1, uorder);
  return pair(genus_class(f, n), m);
}

Rat twisted_ahat(const Manifold& m, const PontPoly& c) {
  if (c.nmax() < m.n()) throw Error(ErrorKind::DimMismatch, "twisting class truncated below the manifold's degree");
  return pair(ahat_class(m.n(), 1) * c.u0_part(), m)[0];
}

USeries twisted_ahat_series(const Manifold& m, const PontPoly& c) {
  if (c.nmax() < m.n()) throw Error(ErrorKind::DimMismatch, "twisting class truncated below the manifold's degree");
  return pair(ahat_class(m.n(), c.uorder()) * c, m);
}

Rat twisted_lhat(const Manifold& m, const PontPoly& c) {
  if (c.nmax() < m.n()) throw Error(ErrorKind::DimMismatch, "twisting class truncated below the manifold's degree");
  return pair(lhat_class(m.n(), 1) * c.u0_part(), m)[0];
}

Rat cancellation_residual(const Rat& p11, const Rat& p2) {
  const Manifold m("dim8", 8, {{Partition({1, 1}), p11}, {Partition({2}), p2}});
  const Rat signature = genus(m, GenusKind::LHat, 1)[0];
  const Rat ahat = genus(m, GenusKind::AHat, 1)[0];
  const Rat twisted = twisted_ahat(m, ch_tangent(2, 2));
  return signature - (24 * ahat - twisted);
}

Manifold hypersurface_pont(const Hypersurface& h) {
  if (h.degree < 1) throw Error(ErrorKind::InvalidDegree, "hypersurface degree must be positive");
  if (h.ambient < 2) throw Error(ErrorKind::InvalidDegree, "ambient projective space must have N >= 2");
  if (h.real_dim() % 4 != 0) {
    throw Error(ErrorKind::DimNotMultipleOf4,
                "X(" + std::to_string(h.ambient) + ";" + std::to_string(h.degree) + ") has real dimension " +
                    std::to_string(h.real_dim()));
  }
  const int n = h.real_dim() / 4;
  // p(X) in powers of x^2: (1+y)^{N+1} / (1 + d^2 y), y = x^2, up to y^n.
  std::vector<Int> total(static_cast<std::size_t>(n) + 1);
  const Int d2 = Int(h.degree) * h.degree;
  for (int i = 0; i <= n; ++i) {
    Int acc = 0;
    Int geometric = 1;  // (-d^2)^j
    for (int j = 0; j <= i; ++j) {
      acc += binomial(h.ambient + 1, static_cast<unsigned>(i - j)) * geometric;
      geometric *= -d2;
    }
    total[i] = acc;
  }
  std::map<Partition, Rat> numbers;
  for (const auto& lambda : partitions_of(n)) {
    Int value = h.degree;
    for (int part : lambda.parts()) value *= total[part];
    numbers.emplace(lambda, Rat(value));
  }
  return Manifold("X(" + std::to_string(h.ambient) + ";" + std::to_string(h.degree) + ")", h.real_dim(),
                  std::move(numbers));
}

USeries hypersurface_genus(const Hypersurface& h, const RootSeries& f) {
  if (h.degree < 1) throw Error(ErrorKind::InvalidDegree, "hypersurface degree must be positive");
  if (h.ambient < 1) throw Error(ErrorKind::InvalidDegree, "ambient dimension must be positive");
  const int top = h.ambient;  // coefficient of x^N
  if (f.xdeg() < top) throw Error(ErrorKind::DimMismatch, "x-truncation too small for the residue");
  const USeries& f0 = f.at_zero();
  if (f0.order() > 0 && f0[0] == 0) throw Error(ErrorKind::NonUnitConstant, "factor is not invertible at x = 0");
  const RootSeries g = f.truncated(top, f.uorder());
  const RootSeries cls = inverse(f0) * (power(g, h.ambient + 1) * inverse(g.scaled(Rat(h.degree))));
  // [x^N] of d x * cls = d [x^{N-1}] cls
  return Rat(h.degree) * cls[top - 1];
}

RootSeries complex_root_factor(GenusKind kind, RootConvention convention, int xdeg) {
  // Trigonometric series are the hyperbolic ones with x^{2k} -> (-1)^k x^{2k}.
  auto signed_series = [&](const RootSeries& hyperbolic) {
    if (convention == RootConvention::Hyperbolic) return hyperbolic;
    std::vector<USeries> c;
    for (int k = 0; k < hyperbolic.xdeg(); ++k) c.push_back((k % 4 == 2 ? Rat(-1) : Rat(1)) * hyperbolic[k]);
    return RootSeries(std::move(c), hyperbolic.xdeg(), hyperbolic.uorder());
  };
  switch (kind) {
    case GenusKind::AHat: return signed_series(ahat_root(xdeg, 1));
    case GenusKind::LHat:
      // x/tanh x = cosh(x) * x/sinh(x)
      return signed_series(cosh_series(1, xdeg, 1) * inverse(sinh_over_x_series(1, xdeg, 1)));
    default: throw Error(ErrorKind::DimMismatch, "complex-root factors exist for ahat and lhat only");
  }
}

}  // namespace ellgen
