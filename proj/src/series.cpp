#include "ellgen/series.hpp"

#include <algorithm>
#include <sstream>

#include "ellgen/error.hpp"

namespace ellgen {

namespace {

const Rat& zero_rat() {
  static const Rat zero(0);
  return zero;
}

std::string q_power(int k) {
  if (k % 2 == 0) return k == 2 ? "q" : "q^" + std::to_string(k / 2);
  return "q^(" + std::to_string(k) + "/2)";
}

}  // namespace

USeries::USeries(int order) : coeffs_(static_cast<std::size_t>(std::max(order, 0))), order_(std::max(order, 0)) {}

USeries::USeries(std::vector<Rat> coeffs, int order) : coeffs_(std::move(coeffs)), order_(std::max(order, 0)) {
  coeffs_.resize(static_cast<std::size_t>(order_));
}

USeries USeries::constant(const Rat& c, int order) {
  USeries s(order);
  if (order > 0) s.coeffs_[0] = c;
  return s;
}

USeries USeries::monomial(int exponent, const Rat& c, int order) {
  USeries s(order);
  if (exponent >= 0 && exponent < order) s.coeffs_[static_cast<std::size_t>(exponent)] = c;
  return s;
}

const Rat& USeries::operator[](int k) const {
  if (k < 0 || k >= order_) return zero_rat();
  return coeffs_[static_cast<std::size_t>(k)];
}

bool USeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

bool USeries::is_even() const {
  for (int k = 1; k < order_; k += 2) {
    if (coeffs_[static_cast<std::size_t>(k)] != 0) return false;
  }
  return true;
}

std::vector<int> USeries::support() const {
  std::vector<int> idx;
  for (int k = 0; k < order_; ++k) {
    if (coeffs_[static_cast<std::size_t>(k)] != 0) idx.push_back(k);
  }
  return idx;
}

USeries USeries::truncated(int order) const {
  const int k = std::min(order, order_);
  return USeries(std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + std::max(k, 0)), k);
}

bool operator==(const USeries& a, const USeries& b) { return a.order_ == b.order_ && a.coeffs_ == b.coeffs_; }

USeries operator+(const USeries& a, const USeries& b) {
  const int k = std::min(a.order_, b.order_);
  std::vector<Rat> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
  return USeries(std::move(c), k);
}

USeries operator-(const USeries& a, const USeries& b) {
  const int k = std::min(a.order_, b.order_);
  std::vector<Rat> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[i] = a.coeffs_[i] - b.coeffs_[i];
  return USeries(std::move(c), k);
}

USeries operator-(const USeries& a) {
  std::vector<Rat> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.coeffs_[i];
  return USeries(std::move(c), a.order_);
}

USeries operator*(const Rat& s, const USeries& a) {
  std::vector<Rat> c(a.coeffs_.size());
  if (s != 0) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (a.coeffs_[i] != 0) c[i] = s * a.coeffs_[i];
    }
  }
  return USeries(std::move(c), a.order_);
}

USeries operator*(const USeries& a, const USeries& b) {
  const int k = std::min(a.order_, b.order_);
  std::vector<Rat> c(static_cast<std::size_t>(k));
  // Iterate over nonzero supports only: divisor-sum forms and low-order
  // bundle data are sparse, theta products become dense as the order grows.
  const auto sa = a.truncated(k).support();
  const auto sb = b.truncated(k).support();
  Rat t;
  for (int i : sa) {
    for (int j : sb) {
      if (i + j >= k) break;
      mpq_mul(t.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      c[i + j] += t;
    }
  }
  return USeries(std::move(c), k);
}

USeries inverse(const USeries& a) {
  const int k = a.order();
  if (k > 0 && a[0] == 0) throw Error(ErrorKind::ZeroConstantTerm, "cannot invert a series without constant term");
  std::vector<Rat> r(static_cast<std::size_t>(k));
  if (k == 0) return USeries(std::move(r), 0);
  const Rat inv0 = 1 / a[0];
  r[0] = inv0;
  const auto sa = a.support();
  for (int n = 1; n < k; ++n) {
    Rat acc;
    for (int i : sa) {
      if (i == 0) continue;
      if (i > n) break;
      acc += a[i] * r[n - i];
    }
    r[n] = -inv0 * acc;
  }
  return USeries(std::move(r), k);
}

USeries power(const USeries& a, long e) {
  if (e < 0) return power(inverse(a), -e);
  USeries result = USeries::constant(1, a.order());
  USeries base = a;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

USeries exp(const USeries& a) {
  const int k = a.order();
  if (k > 0 && a[0] != 0) throw Error(ErrorKind::BadConstantTerm, "exp needs a zero constant term");
  std::vector<Rat> e(static_cast<std::size_t>(k));
  if (k == 0) return USeries(std::move(e), 0);
  e[0] = 1;
  const auto sa = a.support();
  // n e_n = sum_{j>=1} j a_j e_{n-j}
  for (int n = 1; n < k; ++n) {
    Rat acc;
    for (int j : sa) {
      if (j > n) break;
      acc += j * a[j] * e[n - j];
    }
    e[n] = acc / n;
  }
  return USeries(std::move(e), k);
}

USeries log(const USeries& a) {
  const int k = a.order();
  if (k > 0 && a[0] != 1) throw Error(ErrorKind::BadConstantTerm, "log needs constant term 1");
  std::vector<Rat> l(static_cast<std::size_t>(k));
  const auto sa = a.support();
  // n a_n = sum_{j=1}^{n} j l_j a_{n-j}, with a_0 = 1
  for (int n = 1; n < k; ++n) {
    Rat acc = n * a[n];
    for (int i : sa) {
      if (i == 0) continue;
      if (i >= n) break;
      acc -= (n - i) * l[n - i] * a[i];
    }
    l[n] = acc / n;
  }
  return USeries(std::move(l), k);
}

USeries product(const FactorFn& factor, const WeightFn& weight, int order) {
  USeries result = USeries::constant(1, order);
  int previous = -1;
  for (int m = 1;; ++m) {
    const int w = weight(m);
    if (w <= previous) {
      throw Error(ErrorKind::WeightViolation, "factor weights must be strictly increasing (m=" + std::to_string(m) + ")");
    }
    previous = w;
    if (w >= order) break;
    const USeries f = factor(m, order);
    if (f[0] != 1) throw Error(ErrorKind::WeightViolation, "factor " + std::to_string(m) + " does not start with 1");
    for (int k = 1; k < std::min(w, f.order()); ++k) {
      if (f[k] != 0) {
        throw Error(ErrorKind::WeightViolation,
                    "factor " + std::to_string(m) + " deviates at u^" + std::to_string(k) + " below weight " +
                        std::to_string(w));
      }
    }
    result *= f;
  }
  return result;
}

std::string to_text(const USeries& s, bool show_order) {
  std::ostringstream out;
  bool first = true;
  for (int k : s.support()) {
    const Rat& c = s[k];
    const bool negative = c < 0;
    const Rat mag = negative ? Rat(-c) : c;
    if (first) {
      out << (negative ? "-" : "");
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << rat_string(mag);
    } else {
      if (mag != 1) out << rat_string(mag) << ' ';
      out << q_power(k);
    }
  }
  if (first) out << '0';
  if (show_order && !first) out << " + O(" << q_power(s.order()) << ')';
  return out.str();
}

}  // namespace ellgen
