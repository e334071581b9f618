#include "ellgen/bundles.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>

#include "ellgen/error.hpp"
#include "ellgen/theta.hpp"

namespace ellgen {

// ----------------------------------------------------------- BundleMonomial

BundleMonomial::BundleMonomial(std::vector<int> sym_powers, std::vector<int> ext_powers) {
  for (int a : sym_powers) {
    if (a < 0) throw Error(ErrorKind::Parse, "negative symmetric power");
    if (a == 1) {
      ext_.push_back(1);
    } else if (a > 1) {
      sym_.push_back(a);
    }
  }
  for (int b : ext_powers) {
    if (b < 0) throw Error(ErrorKind::Parse, "negative exterior power");
    if (b > 0) ext_.push_back(b);
  }
  std::sort(sym_.begin(), sym_.end(), std::greater<>());
  std::sort(ext_.begin(), ext_.end(), std::greater<>());
}

int BundleMonomial::tensor_power() const {
  return std::accumulate(sym_.begin(), sym_.end(), 0) + std::accumulate(ext_.begin(), ext_.end(), 0);
}

Int BundleMonomial::rank(int r) const {
  Int result = 1;
  for (int a : sym_) result *= binomial(r + a - 1, static_cast<unsigned>(a));
  for (int b : ext_) result *= binomial(r, static_cast<unsigned>(b));
  return result;
}

BundleMonomial BundleMonomial::operator*(const BundleMonomial& other) const {
  std::vector<int> s = sym_;
  s.insert(s.end(), other.sym_.begin(), other.sym_.end());
  std::vector<int> e = ext_;
  e.insert(e.end(), other.ext_.begin(), other.ext_.end());
  return BundleMonomial(std::move(s), std::move(e));
}

std::string BundleMonomial::to_text() const {
  if (is_unit()) return "1";
  std::string out;
  auto append = [&](const std::string& piece) {
    if (!out.empty()) out += "⊗";
    out += piece;
  };
  for (int a : sym_) append("S^" + std::to_string(a) + "(T)");
  for (int b : ext_) append("Λ^" + std::to_string(b) + "(T)");
  return out;
}

// -------------------------------------------------------- VirtualBundlePoly

VirtualBundlePoly VirtualBundlePoly::unit(int n, const Int& c) {
  VirtualBundlePoly v(n);
  v.add(BundleMonomial(), c);
  return v;
}

void VirtualBundlePoly::add(const BundleMonomial& m, const Int& c) {
  if (c == 0) return;
  for (int b : m.ext()) {
    if (b > 4 * n_) return;  // exterior power above the rank
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Int VirtualBundlePoly::virtual_rank() const {
  Int r = 0;
  for (const auto& [m, c] : terms_) r += c * m.rank(4 * n_);
  return r;
}

int VirtualBundlePoly::max_tensor_power() const {
  int p = 0;
  for (const auto& [m, c] : terms_) p = std::max(p, m.tensor_power());
  return p;
}

VirtualBundlePoly operator+(const VirtualBundlePoly& a, const VirtualBundlePoly& b) {
  VirtualBundlePoly out = a;
  for (const auto& [m, c] : b.terms_) out.add(m, c);
  return out;
}

VirtualBundlePoly operator*(const VirtualBundlePoly& a, const VirtualBundlePoly& b) {
  if (a.n_ != b.n_) throw Error(ErrorKind::DimMismatch, "bundle polynomials over different manifolds");
  VirtualBundlePoly out(a.n_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add(ma * mb, ca * cb);
  }
  return out;
}

std::string VirtualBundlePoly::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const BundleMonomial& m, const Int& c) {
    const bool negative = c < 0;
    const Int mag = negative ? Int(-c) : c;
    out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    if (m.is_unit()) {
      out << (mag == 1 ? std::string("1") : mag.get_str() + "·1");
    } else {
      if (mag != 1) out << mag.get_str() << "·";
      out << m.to_text();
    }
  };
  for (const auto& [m, c] : terms_) {
    if (!m.is_unit()) emit(m, c);
  }
  auto unit = terms_.find(BundleMonomial());
  if (unit != terms_.end()) emit(unit->first, unit->second);
  return out.str();
}

// ------------------------------------------------------------ expansion

namespace {

using BundleSeries = std::vector<VirtualBundlePoly>;

BundleSeries multiply(const BundleSeries& a, const BundleSeries& b, int n) {
  const std::size_t k = std::min(a.size(), b.size());
  BundleSeries c(k, VirtualBundlePoly(n));
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < k; ++j) {
      if (b[j].is_zero()) continue;
      c[i + j] = c[i + j] + a[i] * b[j];
    }
  }
  return c;
}

// Integer u-series product helper for the (1 -+ t)^{+-r} normalizations.
std::vector<Int> multiply(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < c.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// (1 + sign*u^step)^exponent as an integer u-series of length `order`.
std::vector<Int> binomial_series(int step, int sign, long exponent, int order) {
  std::vector<Int> out(static_cast<std::size_t>(order));
  for (long j = 0; j * step < order; ++j) {
    // C(exponent, j) for any integer exponent
    Int c = binomial(exponent, static_cast<unsigned>(j));
    if (sign < 0 && (j % 2)) c = -c;
    out[static_cast<std::size_t>(j * step)] = c;
  }
  return out;
}

}  // namespace

BundleQSeries expand_witten(WittenTwist which, int n, int uorder) {
  if (uorder < 1) throw Error(ErrorKind::DimMismatch, "expand_witten needs uorder >= 1");
  const int r = 4 * n;
  BundleSeries series(static_cast<std::size_t>(uorder), VirtualBundlePoly(n));
  series[0] = VirtualBundlePoly::unit(n);
  std::vector<Int> scalar(static_cast<std::size_t>(uorder));
  scalar[0] = 1;

  // Theta(T~) = prod_m S_{q^m}(T) (1-q^m)^r
  for (int m = 1; 2 * m < uorder; ++m) {
    BundleSeries factor(static_cast<std::size_t>(uorder), VirtualBundlePoly(n));
    for (int a = 0; 2 * m * a < uorder; ++a) factor[2 * m * a].add(BundleMonomial({a}, {}), 1);
    series = multiply(series, factor, n);
    scalar = multiply(scalar, binomial_series(2 * m, -1, r, uorder));
  }

  if (which == WittenTwist::Theta2Twist) {
    // Theta_2(T~) = prod_m L_{-q^{m-1/2}}(T) (1-q^{m-1/2})^{-r}
    for (int m = 1; 2 * m - 1 < uorder; ++m) {
      const int step = 2 * m - 1;
      BundleSeries factor(static_cast<std::size_t>(uorder), VirtualBundlePoly(n));
      for (int b = 0; b <= r && step * b < uorder; ++b) factor[step * b].add(BundleMonomial({}, {b}), b % 2 ? -1 : 1);
      series = multiply(series, factor, n);
      scalar = multiply(scalar, binomial_series(step, -1, -r, uorder));
    }
  } else {
    // Theta_1(T~) = prod_m L_{q^m}(T) (1+q^m)^{-r}
    for (int m = 1; 2 * m < uorder; ++m) {
      BundleSeries factor(static_cast<std::size_t>(uorder), VirtualBundlePoly(n));
      for (int b = 0; b <= r && 2 * m * b < uorder; ++b) factor[2 * m * b].add(BundleMonomial({}, {b}), 1);
      series = multiply(series, factor, n);
      scalar = multiply(scalar, binomial_series(2 * m, +1, -r, uorder));
    }
  }

  BundleSeries scalar_series(static_cast<std::size_t>(uorder), VirtualBundlePoly(n));
  for (int k = 0; k < uorder; ++k) scalar_series[k] = VirtualBundlePoly::unit(n, scalar[k]);
  return BundleQSeries{uorder, multiply(series, scalar_series, n)};
}

// --------------------------------------------------------------- ch

namespace {

// ch(L^b T) and ch(S^a T) from the Adams-operation generating functions
//   ch L_t(T) = exp(sum_l (-1)^{l+1} t^l/l psi^l ch T)
//   ch S_t(T) = exp(sum_l t^l/l psi^l ch T)
// with psi^l ch T = 4n + sum_k 2 l^{2k} s_k/(2k)!.
class PowerChCache {
 public:
  PontPoly exterior(int b, int n, int nmax) { return get(b, n, nmax, true); }
  PontPoly symmetric(int a, int n, int nmax) { return get(a, n, nmax, false); }

 private:
  struct Entry {
    std::vector<PontPoly> adams;  // index l >= 1
    std::vector<PontPoly> ext{};
    std::vector<PontPoly> sym{};
  };

  PontPoly get(int k, int n, int nmax, bool exterior) {
    std::lock_guard lock(mutex_);
    Entry& e = entries_[{n, nmax}];
    auto& table = exterior ? e.ext : e.sym;
    if (table.empty()) table.push_back(PontPoly::constant(USeries::constant(1, 1), nmax));
    while (e.adams.size() <= static_cast<std::size_t>(k)) {
      const int l = static_cast<int>(e.adams.size());
      PontPoly psi = PontPoly::constant(USeries::constant(4 * n, 1), nmax);
      if (l == 0) {
        e.adams.push_back(psi);
        continue;
      }
      Rat l2 = Rat(l) * l;
      Rat lpow = 1;
      for (int kk = 1; kk <= nmax; ++kk) {
        lpow *= l2;
        psi += (2 * lpow / factorial(2 * kk)) * newton_power_sum(kk, nmax, 1);
      }
      e.adams.push_back(psi);
    }
    while (table.size() <= static_cast<std::size_t>(k)) {
      const int b = static_cast<int>(table.size());
      // b E_b = sum_{l=1}^{b} (+-1)^{l+1} psi^l E_{b-l}
      PontPoly acc(nmax, 1);
      for (int l = 1; l <= b; ++l) {
        const Rat sign = (exterior && l % 2 == 0) ? -1 : 1;
        acc += sign * (e.adams[l] * table[b - l]);
      }
      table.push_back(Rat(1, b) * acc);
    }
    return table[k];
  }

  std::mutex mutex_;
  std::map<std::pair<int, int>, Entry> entries_;
};

PowerChCache& ch_cache() {
  static PowerChCache cache;
  return cache;
}

PontPoly ahat_class(int n) { return genus_class(ahat_root(2 * n + 1, 1), n); }
PontPoly lhat_class(int n) { return genus_class(lhat_root(2 * n + 1, 1), n); }

Rat pair_bundle(const Manifold& m, const VirtualBundlePoly& v, const PontPoly& base) {
  if (v.n() != m.n()) throw Error(ErrorKind::DimMismatch, "bundle polynomial built for another dimension");
  const int n = m.n();
  Rat total = 0;
  for (const auto& [mono, c] : v.terms()) {
    total += Rat(c) * pair(base * ch_monomial(mono, n, n), m)[0];
  }
  return total;
}

}  // namespace

PontPoly ch_monomial(const BundleMonomial& m, int n, int nmax) {
  PontPoly ch = PontPoly::constant(USeries::constant(1, 1), nmax);
  for (int b : m.ext()) {
    if (b > 4 * n) return PontPoly(nmax, 1);
    ch *= ch_cache().exterior(b, n, nmax);
  }
  for (int a : m.sym()) ch *= ch_cache().symmetric(a, n, nmax);
  return ch;
}

Rat index_bundle(const Manifold& m, const VirtualBundlePoly& v) { return pair_bundle(m, v, ahat_class(m.n())); }

Rat signature_index_bundle(const Manifold& m, const VirtualBundlePoly& v) {
  return pair_bundle(m, v, lhat_class(m.n()));
}

USeries ell2_via_bundles(const Manifold& m, int uorder) {
  const BundleQSeries b = expand_witten(WittenTwist::Theta2Twist, m.n(), uorder);
  const PontPoly ahat = ahat_class(m.n());
  std::vector<Rat> c(static_cast<std::size_t>(uorder));
  for (int k = 0; k < uorder; ++k) c[k] = pair_bundle(m, b[k], ahat);
  return USeries(std::move(c), uorder);
}

USeries ell1_via_bundles(const Manifold& m, int uorder) {
  const BundleQSeries a = expand_witten(WittenTwist::Theta1Twist, m.n(), uorder);
  const PontPoly lhat = lhat_class(m.n());
  std::vector<Rat> c(static_cast<std::size_t>(uorder));
  for (int k = 0; k < uorder; ++k) c[k] = pair_bundle(m, a[k], lhat);
  return USeries(std::move(c), uorder);
}

}  // namespace ellgen
