#include "ellgen/chern.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include "ellgen/error.hpp"

namespace ellgen {

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw Error(ErrorKind::Parse, "partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::key() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

Partition Partition::parse(std::string_view key) {
  std::string text;
  for (char c : key) {
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  }
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw Error(ErrorKind::Parse, "partition key must look like [2,1]: '" + std::string(key) + "'");
  }
  std::vector<int> parts;
  std::string body = text.substr(1, text.size() - 2);
  if (!body.empty()) {
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw Error(ErrorKind::Parse, "bad partition part in '" + std::string(key) + "'");
      }
      parts.push_back(std::stoi(item));
    }
    if (body.back() == ',') throw Error(ErrorKind::Parse, "trailing comma in '" + std::string(key) + "'");
  }
  return Partition(std::move(parts));
}

Partition Partition::merged(const Partition& other) const {
  std::vector<int> p = parts_;
  p.insert(p.end(), other.parts_.begin(), other.parts_.end());
  return Partition(std::move(p));
}

std::vector<Partition> partitions_of(int weight) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  if (weight >= 0) rec(weight, weight);
  return out;
}

// ----------------------------------------------------------------- Manifold

Manifold::Manifold(std::string name, int dim, std::map<Partition, Rat> pont)
    : name_(std::move(name)), dim_(dim), pont_(std::move(pont)) {
  if (dim <= 0 || dim % 4 != 0) {
    throw Error(ErrorKind::DimNotMultipleOf4, "dimension " + std::to_string(dim) + " is not a positive multiple of 4");
  }
  for (const auto& [p, v] : pont_) {
    if (p.weight() != n()) {
      throw Error(ErrorKind::DimMismatch,
                  "Pontryagin number " + p.key() + " has weight " + std::to_string(p.weight()) + ", expected " +
                      std::to_string(n()));
    }
  }
  std::erase_if(pont_, [](const auto& kv) { return kv.second == 0; });
}

Rat Manifold::number(const Partition& p) const {
  auto it = pont_.find(p);
  return it == pont_.end() ? Rat(0) : it->second;
}

Manifold disjoint_union(const Manifold& a, const Manifold& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimMismatch, "disjoint union needs equal dimensions");
  std::map<Partition, Rat> sum = a.pontryagin_numbers();
  for (const auto& [p, v] : b.pontryagin_numbers()) sum[p] += v;
  return Manifold(a.name() + "+" + b.name(), a.dim(), std::move(sum));
}

// ----------------------------------------------------------------- PontPoly

PontPoly::PontPoly(int nmax, int uorder) : nmax_(nmax), uorder_(uorder) {}

PontPoly PontPoly::constant(const USeries& c, int nmax) {
  PontPoly p(nmax, c.order());
  p.add_term(Partition(), c);
  return p;
}

PontPoly PontPoly::generator(int i, int nmax, int uorder) {
  PontPoly p(nmax, uorder);
  if (i <= nmax) p.add_term(Partition({i}), USeries::constant(1, uorder));
  return p;
}

void PontPoly::add_term(const Partition& p, const USeries& c) {
  if (p.weight() > nmax_) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(p, c.truncated(uorder_));
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

USeries PontPoly::coefficient(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? USeries(uorder_) : it->second;
}

PontPoly PontPoly::weight_part(int w) const {
  PontPoly out(nmax_, uorder_);
  for (const auto& [p, c] : terms_) {
    if (p.weight() == w) out.terms_.emplace(p, c);
  }
  return out;
}

PontPoly PontPoly::u0_part() const {
  PontPoly out(nmax_, uorder_);
  for (const auto& [p, c] : terms_) out.add_term(p, USeries::constant(c[0], uorder_));
  return out;
}

bool operator==(const PontPoly& a, const PontPoly& b) {
  return a.nmax_ == b.nmax_ && a.uorder_ == b.uorder_ && a.terms_ == b.terms_;
}

PontPoly operator+(const PontPoly& a, const PontPoly& b) {
  PontPoly out(std::min(a.nmax_, b.nmax_), std::min(a.uorder_, b.uorder_));
  for (const auto& [p, c] : a.terms_) out.add_term(p, c);
  for (const auto& [p, c] : b.terms_) out.add_term(p, c);
  return out;
}

PontPoly operator-(const PontPoly& a, const PontPoly& b) { return a + Rat(-1) * b; }

PontPoly operator*(const PontPoly& a, const PontPoly& b) {
  PontPoly out(std::min(a.nmax_, b.nmax_), std::min(a.uorder_, b.uorder_));
  for (const auto& [pa, ca] : a.terms_) {
    for (const auto& [pb, cb] : b.terms_) {
      if (pa.weight() + pb.weight() > out.nmax_) continue;
      out.add_term(pa.merged(pb), ca * cb);
    }
  }
  return out;
}

PontPoly operator*(const USeries& s, const PontPoly& a) {
  PontPoly out(a.nmax_, std::min(a.uorder_, s.order()));
  for (const auto& [p, c] : a.terms_) out.add_term(p, s * c);
  return out;
}

PontPoly operator*(const Rat& s, const PontPoly& a) {
  PontPoly out(a.nmax_, a.uorder_);
  for (const auto& [p, c] : a.terms_) out.add_term(p, s * c);
  return out;
}

PontPoly exp(const PontPoly& a) {
  if (!a.coefficient(Partition()).is_zero()) {
    throw Error(ErrorKind::BadConstantTerm, "exp of a class needs a vanishing weight-0 part");
  }
  PontPoly result = PontPoly::constant(USeries::constant(1, a.uorder()), a.nmax());
  PontPoly term = result;
  for (int m = 1; m <= a.nmax(); ++m) {
    term = Rat(1, m) * (term * a);
    result += term;
  }
  return result;
}

// ------------------------------------------------------ symmetric functions

PontPoly newton_power_sum(int k, int nmax, int uorder) {
  // s_k = sum_{i=1}^{k-1} (-1)^{i-1} p_i s_{k-i} + (-1)^{k-1} k p_k
  std::vector<PontPoly> s(static_cast<std::size_t>(k) + 1, PontPoly(nmax, uorder));
  for (int j = 1; j <= k; ++j) {
    PontPoly acc(nmax, uorder);
    for (int i = 1; i < j; ++i) {
      const Rat sign = (i % 2 == 1) ? 1 : -1;
      acc += sign * (PontPoly::generator(i, nmax, uorder) * s[j - i]);
    }
    const Rat last = ((j % 2 == 1) ? 1 : -1) * Rat(j);
    acc += last * PontPoly::generator(j, nmax, uorder);
    s[j] = acc;
  }
  return s[k];
}

PontPoly genus_class(const RootSeries& f, int n) {
  const int uorder = f.uorder();
  if (!f.is_even()) throw Error(ErrorKind::OddTermPresent, "characteristic factor must be even in x");
  const USeries& f0 = f.at_zero();
  if (f0[0] == 0) throw Error(ErrorKind::NonUnitConstant, "characteristic factor has no invertible value at x=0");
  if (f.xdeg() < 2 * n + 1) {
    throw Error(ErrorKind::DimMismatch, "x-truncation " + std::to_string(f.xdeg()) + " too small for n=" + std::to_string(n));
  }
  const RootSeries normalized = inverse(f0) * f.truncated(2 * n + 1, uorder);
  const RootSeries logs = log(normalized);

  PontPoly exponent(n, uorder);
  for (int k = 1; k <= n; ++k) {
    const USeries& a = logs[2 * k];
    if (a.is_zero()) continue;
    exponent += a * newton_power_sum(k, n, uorder);
  }
  return power(f0, 2L * n) * exp(exponent);
}

PontPoly ch_tangent(int n, int nmax, int uorder) {
  PontPoly ch = PontPoly::constant(USeries::constant(4 * n, uorder), nmax);
  for (int k = 1; k <= nmax; ++k) ch += (Rat(2) / factorial(2 * k)) * newton_power_sum(k, nmax, uorder);
  return ch;
}

USeries pair(const PontPoly& c, const Manifold& m) {
  const int n = m.n();
  if (m.dim() % 4 != 0) throw Error(ErrorKind::DimMismatch, "manifold dimension is not a multiple of 4");
  if (c.nmax() < n) {
    throw Error(ErrorKind::DimMismatch,
                "class truncated at weight " + std::to_string(c.nmax()) + " cannot pair with a " +
                    std::to_string(m.dim()) + "-manifold");
  }
  USeries total(c.uorder());
  for (const auto& [p, coeff] : c.terms()) {
    if (p.weight() != n) continue;
    const Rat v = m.number(p);
    if (v != 0) total += v * coeff;
  }
  return total;
}

}  // namespace ellgen
