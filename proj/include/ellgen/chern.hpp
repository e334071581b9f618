#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ellgen/root_series.hpp"
#include "ellgen/series.hpp"

namespace ellgen {

/// Weakly decreasing list of positive parts. Indexes the Pontryagin monomial
/// p_{l1} p_{l2} ... of real degree 4*weight.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts descending; throws Parse on a nonpositive part.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int weight() const noexcept { return weight_; }
  bool empty() const noexcept { return parts_.empty(); }

  /// Canonical key, e.g. "[2,1,1]"; the empty partition is "[]".
  std::string key() const;
  static Partition parse(std::string_view key);

  Partition merged(const Partition& other) const;

  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
  friend bool operator==(const Partition& a, const Partition& b) = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// All partitions of `weight`, in a fixed deterministic order.
std::vector<Partition> partitions_of(int weight);

/// A 4n-dimensional oriented manifold known through its rational Pontryagin
/// numbers. Absent partitions read as zero.
class Manifold {
 public:
  Manifold() = default;
  /// Throws DimNotMultipleOf4 for a bad dimension and DimMismatch for keys of
  /// the wrong weight.
  Manifold(std::string name, int dim, std::map<Partition, Rat> pont);

  const std::string& name() const noexcept { return name_; }
  int dim() const noexcept { return dim_; }
  int n() const noexcept { return dim_ / 4; }
  const std::map<Partition, Rat>& pontryagin_numbers() const noexcept { return pont_; }
  Rat number(const Partition& p) const;

  friend bool operator==(const Manifold& a, const Manifold& b) = default;

 private:
  std::string name_;
  int dim_ = 4;
  std::map<Partition, Rat> pont_;
};

/// Graded polynomial in p_1..p_nmax with u-series coefficients; p_i has weight
/// i and terms above nmax are dropped.
class PontPoly {
 public:
  PontPoly() = default;
  PontPoly(int nmax, int uorder);

  static PontPoly constant(const USeries& c, int nmax);
  /// The single generator p_i (zero when i > nmax).
  static PontPoly generator(int i, int nmax, int uorder);

  int nmax() const noexcept { return nmax_; }
  int uorder() const noexcept { return uorder_; }
  const std::map<Partition, USeries>& terms() const noexcept { return terms_; }

  USeries coefficient(const Partition& p) const;
  /// Part of weight exactly w.
  PontPoly weight_part(int w) const;
  /// Apply a map to every coefficient (e.g. extracting the u^0 part).
  PontPoly u0_part() const;

  friend bool operator==(const PontPoly& a, const PontPoly& b);
  friend PontPoly operator+(const PontPoly& a, const PontPoly& b);
  friend PontPoly operator-(const PontPoly& a, const PontPoly& b);
  friend PontPoly operator*(const PontPoly& a, const PontPoly& b);
  friend PontPoly operator*(const USeries& s, const PontPoly& a);
  friend PontPoly operator*(const Rat& s, const PontPoly& a);

  PontPoly& operator+=(const PontPoly& b) { return *this = *this + b; }
  PontPoly& operator*=(const PontPoly& b) { return *this = *this * b; }

 private:
  void add_term(const Partition& p, const USeries& c);

  int nmax_ = 0;
  int uorder_ = 1;
  std::map<Partition, USeries> terms_;  // only nonzero coefficients
};

/// exp of a class with vanishing weight-0 part (nilpotent, exact to nmax).
PontPoly exp(const PontPoly& a);

/// Power sum s_k = sum_j (x_j^2)^k written in p_1..p_nmax (Newton identities).
PontPoly newton_power_sum(int k, int nmax, int uorder = 1);

/// prod_{j=1}^{2n} f(x_j) written in Pontryagin classes, truncated at weight n.
///
/// Computed as f(0)^{2n} exp(sum_k a_k s_k) with log(f/f(0)) = sum_k a_k x^{2k}.
/// Throws OddTermPresent if f is not even and NonUnitConstant if f(0) has no
/// invertible u^0 coefficient; needs f.xdeg() >= 2n + 1.
PontPoly genus_class(const RootSeries& f, int n);

/// ch(T_C M) = 4n + sum_k 2 s_k / (2k)!, truncated at weight nmax.
PontPoly ch_tangent(int n, int nmax, int uorder = 1);

/// <c, [M]>: sum over partitions of weight n of c[lambda] * p_lambda[M].
USeries pair(const PontPoly& c, const Manifold& m);

/// Pontryagin numbers add under disjoint union (DimMismatch if dims differ).
Manifold disjoint_union(const Manifold& a, const Manifold& b);

}  // namespace ellgen
