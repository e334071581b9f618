#include "ellgen/root_series.hpp"

#include <algorithm>

#include "ellgen/error.hpp"

namespace ellgen {

RootSeries::RootSeries(int xdeg, int uorder)
    : coeffs_(static_cast<std::size_t>(std::max(xdeg, 0)), USeries(uorder)),
      xdeg_(std::max(xdeg, 0)),
      uorder_(uorder),
      zero_(uorder) {}

RootSeries::RootSeries(std::vector<USeries> coeffs, int xdeg, int uorder)
    : coeffs_(std::move(coeffs)), xdeg_(std::max(xdeg, 0)), uorder_(uorder), zero_(uorder) {
  coeffs_.resize(static_cast<std::size_t>(xdeg_), USeries(uorder_));
  for (auto& c : coeffs_) {
    if (c.order() > uorder_) c = c.truncated(uorder_);
    if (c.order() != uorder_) throw Error(ErrorKind::DimMismatch, "RootSeries coefficient has a smaller u-order");
  }
}

RootSeries RootSeries::from_rationals(int xdeg, int uorder, const std::function<Rat(int)>& coeff) {
  std::vector<USeries> c;
  c.reserve(static_cast<std::size_t>(xdeg));
  for (int k = 0; k < xdeg; ++k) c.push_back(USeries::constant(coeff(k), uorder));
  return RootSeries(std::move(c), xdeg, uorder);
}

RootSeries RootSeries::constant(const USeries& c, int xdeg) {
  RootSeries r(xdeg, c.order());
  if (xdeg > 0) r.coeffs_[0] = c;
  return r;
}

const USeries& RootSeries::operator[](int k) const {
  if (k < 0 || k >= xdeg_) return zero_;
  return coeffs_[static_cast<std::size_t>(k)];
}

bool RootSeries::is_even() const {
  for (int k = 1; k < xdeg_; k += 2) {
    if (!coeffs_[k].is_zero()) return false;
  }
  return true;
}

RootSeries RootSeries::u0_part() const {
  std::vector<USeries> c;
  c.reserve(coeffs_.size());
  for (const auto& s : coeffs_) c.push_back(USeries::constant(s[0], uorder_));
  return RootSeries(std::move(c), xdeg_, uorder_);
}

RootSeries RootSeries::scaled(const Rat& d) const {
  std::vector<USeries> c;
  c.reserve(coeffs_.size());
  Rat scale = 1;
  for (const auto& s : coeffs_) {
    c.push_back(scale * s);
    scale *= d;
  }
  return RootSeries(std::move(c), xdeg_, uorder_);
}

RootSeries RootSeries::truncated(int xdeg, int uorder) const {
  const int xd = std::min(xdeg, xdeg_);
  const int uo = std::min(uorder, uorder_);
  std::vector<USeries> c;
  for (int k = 0; k < xd; ++k) c.push_back(coeffs_[k].truncated(uo));
  return RootSeries(std::move(c), xd, uo);
}

bool operator==(const RootSeries& a, const RootSeries& b) {
  return a.xdeg_ == b.xdeg_ && a.uorder_ == b.uorder_ && a.coeffs_ == b.coeffs_;
}

RootSeries operator+(const RootSeries& a, const RootSeries& b) {
  const int xd = std::min(a.xdeg_, b.xdeg_);
  const int uo = std::min(a.uorder_, b.uorder_);
  std::vector<USeries> c;
  c.reserve(static_cast<std::size_t>(xd));
  for (int k = 0; k < xd; ++k) c.push_back(a.coeffs_[k] + b.coeffs_[k]);
  return RootSeries(std::move(c), xd, uo);
}

RootSeries operator-(const RootSeries& a, const RootSeries& b) { return a + Rat(-1) * b; }

RootSeries operator*(const RootSeries& a, const RootSeries& b) {
  const int xd = std::min(a.xdeg_, b.xdeg_);
  const int uo = std::min(a.uorder_, b.uorder_);
  std::vector<USeries> c(static_cast<std::size_t>(xd), USeries(uo));
  for (int i = 0; i < xd; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j < xd; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return RootSeries(std::move(c), xd, uo);
}

RootSeries operator*(const USeries& s, const RootSeries& a) {
  std::vector<USeries> c;
  c.reserve(a.coeffs_.size());
  for (const auto& x : a.coeffs_) c.push_back(s * x);
  return RootSeries(std::move(c), a.xdeg_, std::min(s.order(), a.uorder_));
}

RootSeries operator*(const Rat& s, const RootSeries& a) {
  std::vector<USeries> c;
  c.reserve(a.coeffs_.size());
  for (const auto& x : a.coeffs_) c.push_back(s * x);
  return RootSeries(std::move(c), a.xdeg_, a.uorder_);
}

RootSeries inverse(const RootSeries& a) {
  const int xd = a.xdeg();
  const int uo = a.uorder();
  if (xd == 0) return a;
  const USeries inv0 = inverse(a[0]);
  std::vector<USeries> r(static_cast<std::size_t>(xd), USeries(uo));
  r[0] = inv0;
  for (int n = 1; n < xd; ++n) {
    USeries acc(uo);
    for (int i = 1; i <= n; ++i) {
      if (a[i].is_zero() || r[n - i].is_zero()) continue;
      acc += a[i] * r[n - i];
    }
    r[n] = -(inv0 * acc);
  }
  return RootSeries(std::move(r), xd, uo);
}

RootSeries log(const RootSeries& a) {
  const int xd = a.xdeg();
  const int uo = a.uorder();
  if (xd > 0 && !(a[0] == USeries::constant(1, uo))) {
    throw Error(ErrorKind::BadConstantTerm, "log needs x^0 coefficient equal to 1");
  }
  std::vector<USeries> l(static_cast<std::size_t>(xd), USeries(uo));
  for (int n = 1; n < xd; ++n) {
    USeries acc = Rat(n) * a[n];
    for (int i = 1; i < n; ++i) {
      if (a[i].is_zero() || l[n - i].is_zero()) continue;
      acc -= Rat(n - i) * (l[n - i] * a[i]);
    }
    l[n] = Rat(1, n) * acc;
  }
  return RootSeries(std::move(l), xd, uo);
}

RootSeries exp(const RootSeries& a) {
  const int xd = a.xdeg();
  const int uo = a.uorder();
  if (xd > 0 && !a[0].is_zero()) throw Error(ErrorKind::BadConstantTerm, "exp needs a zero x^0 coefficient");
  std::vector<USeries> e(static_cast<std::size_t>(xd), USeries(uo));
  if (xd == 0) return RootSeries(std::move(e), 0, uo);
  e[0] = USeries::constant(1, uo);
  for (int n = 1; n < xd; ++n) {
    USeries acc(uo);
    for (int j = 1; j <= n; ++j) {
      if (a[j].is_zero() || e[n - j].is_zero()) continue;
      acc += Rat(j) * (a[j] * e[n - j]);
    }
    e[n] = Rat(1, n) * acc;
  }
  return RootSeries(std::move(e), xd, uo);
}

RootSeries power(const RootSeries& a, long e) {
  if (e < 0) return power(inverse(a), -e);
  RootSeries result = RootSeries::constant(USeries::constant(1, a.uorder()), a.xdeg());
  RootSeries base = a;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

RootSeries product(const std::function<RootSeries(int m)>& factor, const WeightFn& weight, int xdeg, int uorder) {
  RootSeries result = RootSeries::constant(USeries::constant(1, uorder), xdeg);
  int previous = -1;
  for (int m = 1;; ++m) {
    const int w = weight(m);
    if (w <= previous) throw Error(ErrorKind::WeightViolation, "factor weights must be strictly increasing");
    previous = w;
    if (w >= uorder) break;
    const RootSeries f = factor(m);
    for (int k = 0; k < f.xdeg(); ++k) {
      const USeries& c = f[k];
      const Rat expect0 = k == 0 ? Rat(1) : Rat(0);
      if (c[0] != expect0) throw Error(ErrorKind::WeightViolation, "factor " + std::to_string(m) + " is not 1 at u^0");
      for (int j = 1; j < std::min(w, c.order()); ++j) {
        if (c[j] != 0) {
          throw Error(ErrorKind::WeightViolation,
                      "factor " + std::to_string(m) + " deviates below its declared weight " + std::to_string(w));
        }
      }
    }
    result *= f;
  }
  return result;
}

}  // namespace ellgen
