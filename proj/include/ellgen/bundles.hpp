#pragma once

#include <map>
#include <string>
#include <vector>

#include "ellgen/chern.hpp"

namespace ellgen {

/// S^{a_1}T (x) ... (x) S^{a_r}T (x) L^{b_1}T (x) ... (x) L^{b_s}T for T = T_C M.
///
/// Power lists are kept sorted descending. The degree-one generators S^1 and
/// L^1 are the same bundle T and are stored as L^1.
class BundleMonomial {
 public:
  BundleMonomial() = default;
  BundleMonomial(std::vector<int> sym_powers, std::vector<int> ext_powers);

  const std::vector<int>& sym() const noexcept { return sym_; }
  const std::vector<int>& ext() const noexcept { return ext_; }
  bool is_unit() const noexcept { return sym_.empty() && ext_.empty(); }
  /// Total tensor power sum(a) + sum(b).
  int tensor_power() const;
  /// Rank for a rank-r base bundle: prod C(r+a-1, a) * prod C(r, b).
  Int rank(int r) const;

  BundleMonomial operator*(const BundleMonomial& other) const;

  std::string to_text() const;

  friend auto operator<=>(const BundleMonomial&, const BundleMonomial&) = default;
  friend bool operator==(const BundleMonomial&, const BundleMonomial&) = default;

 private:
  std::vector<int> sym_;
  std::vector<int> ext_;
};

/// Integer combination of bundle monomials over a 4n-manifold (T of rank 4n).
class VirtualBundlePoly {
 public:
  VirtualBundlePoly() = default;
  explicit VirtualBundlePoly(int n) : n_(n) {}

  static VirtualBundlePoly unit(int n, const Int& c = 1);

  int n() const noexcept { return n_; }
  const std::map<BundleMonomial, Int>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds c * m; monomials containing L^b with b > 4n vanish.
  void add(const BundleMonomial& m, const Int& c);

  Int virtual_rank() const;
  int max_tensor_power() const;

  friend VirtualBundlePoly operator+(const VirtualBundlePoly& a, const VirtualBundlePoly& b);
  friend VirtualBundlePoly operator*(const VirtualBundlePoly& a, const VirtualBundlePoly& b);
  friend bool operator==(const VirtualBundlePoly&, const VirtualBundlePoly&) = default;

  /// e.g. "-L^1(T) + 8*1" rendered with the Unicode Lambda.
  std::string to_text() const;

 private:
  int n_ = 1;
  std::map<BundleMonomial, Int> terms_;  // nonzero coefficients only
};

/// u-series with virtual bundle coefficients (u = q^(1/2)).
struct BundleQSeries {
  int order = 0;
  std::vector<VirtualBundlePoly> coeffs;  // size == order

  const VirtualBundlePoly& operator[](int k) const { return coeffs.at(static_cast<std::size_t>(k)); }
};

enum class WittenTwist {
  Theta1Twist,  // Theta(T~) (x) Theta_1(T~): coefficients A_k at u^{2k}
  Theta2Twist   // Theta(T~) (x) Theta_2(T~): coefficients B_k at u^k
};

/// Lambda-ring expansion of the Witten bundles of a 4n-manifold to u-order
/// `uorder`, with T~ = T - C^{4n} handled through S_t(T~) = S_t(T)(1-t)^{4n}
/// and L_t(T~) = L_t(T)(1+t)^{-4n}.
BundleQSeries expand_witten(WittenTwist which, int n, int uorder);

/// ch of a bundle monomial as a class in p_1..p_nmax (u-constant).
PontPoly ch_monomial(const BundleMonomial& m, int n, int nmax);

/// <Ahat(TM) ch(v), [M]>; DimMismatch when v is built for another n.
Rat index_bundle(const Manifold& m, const VirtualBundlePoly& v);
/// <Lhat(TM) ch(v), [M]>.
Rat signature_index_bundle(const Manifold& m, const VirtualBundlePoly& v);

/// sum_k index(D (x) B_k) u^k: Ell2 computed through the bundle route.
USeries ell2_via_bundles(const Manifold& m, int uorder);
/// sum_k index(d_s (x) A_k) q^k: Ell1 computed through the bundle route.
USeries ell1_via_bundles(const Manifold& m, int uorder);

}  // namespace ellgen
