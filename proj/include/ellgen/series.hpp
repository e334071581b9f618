#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ellgen/rational.hpp"

namespace ellgen {

/// Truncation order used when the caller does not specify one (u-order 24,
/// i.e. q-order 12).
inline constexpr int kDefaultUOrder = 24;

/// Truncated power series in u = q^(1/2) with exact rational coefficients.
///
/// A series of order K carries the coefficients of u^0 .. u^(K-1); everything
/// from u^K on is unknown. Integral-q series simply have even support.
/// Values are immutable once built; arithmetic truncates to the smaller order
/// of its operands.
class USeries {
 public:
  USeries() = default;
  explicit USeries(int order);
  USeries(std::vector<Rat> coeffs, int order);

  static USeries constant(const Rat& c, int order);
  static USeries monomial(int exponent, const Rat& c, int order);

  int order() const noexcept { return order_; }

  /// Coefficient of u^k; zero for absent exponents (including k >= order).
  const Rat& operator[](int k) const;

  bool is_zero() const;
  /// True when every odd power of u vanishes (an honest series in q).
  bool is_even() const;
  /// Exponents with a nonzero coefficient, ascending.
  std::vector<int> support() const;

  USeries truncated(int order) const;

  friend bool operator==(const USeries& a, const USeries& b);

  friend USeries operator+(const USeries& a, const USeries& b);
  friend USeries operator-(const USeries& a, const USeries& b);
  friend USeries operator-(const USeries& a);
  friend USeries operator*(const USeries& a, const USeries& b);
  friend USeries operator*(const Rat& s, const USeries& a);
  friend USeries operator*(const USeries& a, const Rat& s) { return s * a; }

  USeries& operator+=(const USeries& b) { return *this = *this + b; }
  USeries& operator-=(const USeries& b) { return *this = *this - b; }
  USeries& operator*=(const USeries& b) { return *this = *this * b; }

 private:
  std::vector<Rat> coeffs_;  // size == order_
  int order_ = 0;
};

/// Multiplicative inverse; throws ZeroConstantTerm when u^0 vanishes.
USeries inverse(const USeries& a);

/// a^e for any integer e; negative e requires an invertible constant term.
USeries power(const USeries& a, long e);

/// exp of a series with zero constant term (BadConstantTerm otherwise).
USeries exp(const USeries& a);

/// log of a series with constant term 1 (BadConstantTerm otherwise).
USeries log(const USeries& a);

/// Factor generator for `product`: the m-th factor (m >= 1) at a given order.
using FactorFn = std::function<USeries(int m, int order)>;
/// Declared weight w(m): the m-th factor equals 1 + O(u^w(m)).
using WeightFn = std::function<int(int m)>;

/// Infinite product over m >= 1 truncated at `order`. Only factors with
/// w(m) < order are materialized, so the result does not depend on the tail.
/// Throws WeightViolation if a factor deviates from 1 below its declared
/// weight or if the weights are not strictly increasing.
USeries product(const FactorFn& factor, const WeightFn& weight, int order);

std::string to_text(const USeries& s, bool show_order = true);

}  // namespace ellgen
