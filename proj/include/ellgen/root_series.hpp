#pragma once

#include <functional>
#include <vector>

#include "ellgen/series.hpp"

namespace ellgen {

/// Truncated polynomial in one formal Chern root x whose coefficients are
/// u-series: f(x, u) = sum_{k < xdeg} c_k(u) x^k.
///
/// The root is normalized as x = 2*pi*sqrt(-1)*z, so the Chern roots of the
/// complexified tangent bundle are +-x_j and p_i = e_i(x_1^2, ..., x_{2n}^2).
/// All coefficients share the same u-order.
class RootSeries {
 public:
  RootSeries() = default;
  RootSeries(int xdeg, int uorder);
  RootSeries(std::vector<USeries> coeffs, int xdeg, int uorder);

  /// Series with rational coefficients r(k), constant in u.
  static RootSeries from_rationals(int xdeg, int uorder, const std::function<Rat(int)>& coeff);
  static RootSeries constant(const USeries& c, int xdeg);

  int xdeg() const noexcept { return xdeg_; }
  int uorder() const noexcept { return uorder_; }

  /// Coefficient of x^k (zero series when k is out of range).
  const USeries& operator[](int k) const;
  const USeries& at_zero() const { return (*this)[0]; }

  bool is_even() const;
  /// Keep only the u^0 part of every x-coefficient (order unchanged).
  RootSeries u0_part() const;
  /// x -> d*x.
  RootSeries scaled(const Rat& d) const;
  RootSeries truncated(int xdeg, int uorder) const;

  friend bool operator==(const RootSeries& a, const RootSeries& b);
  friend RootSeries operator+(const RootSeries& a, const RootSeries& b);
  friend RootSeries operator-(const RootSeries& a, const RootSeries& b);
  friend RootSeries operator*(const RootSeries& a, const RootSeries& b);
  friend RootSeries operator*(const USeries& s, const RootSeries& a);
  friend RootSeries operator*(const Rat& s, const RootSeries& a);

  RootSeries& operator*=(const RootSeries& b) { return *this = *this * b; }

 private:
  std::vector<USeries> coeffs_;  // size == xdeg_, each of order uorder_
  int xdeg_ = 0;
  int uorder_ = 0;
  USeries zero_;
};

/// Inverse in x; requires an invertible x^0 coefficient.
RootSeries inverse(const RootSeries& a);
/// log in x; requires x^0 coefficient equal to the series 1.
RootSeries log(const RootSeries& a);
/// exp in x; requires a zero x^0 coefficient.
RootSeries exp(const RootSeries& a);
RootSeries power(const RootSeries& a, long e);

/// Weight-declared infinite product over m >= 1 of x-series factors, in the
/// same contract as the USeries `product`: factor m must be 1 + O(u^w(m)).
RootSeries product(const std::function<RootSeries(int m)>& factor, const WeightFn& weight, int xdeg, int uorder);

}  // namespace ellgen
