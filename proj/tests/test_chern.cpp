#include "ellgen/chern.hpp"

#include "ellgen/sampling.hpp"
#include "ellgen/theta.hpp"
#include "helpers.hpp"

using namespace ellgen;
using ellgen::test::kind_of;

namespace {

// e_i(c_1..c_r) for i = 0..r.
std::vector<Rat> elementary(const std::vector<Rat>& c) {
  std::vector<Rat> e(c.size() + 1);
  e[0] = 1;
  for (const Rat& v : c) {
    for (std::size_t i = e.size() - 1; i >= 1; --i) e[i] += v * e[i - 1];
  }
  return e;
}

// Coefficient of t^w in prod_j f(sqrt(t c_j)) for an even, u-constant f,
// by multiplying the 2n one-variable polynomials directly.
std::vector<Rat> brute_force_product(const RootSeries& f, const std::vector<Rat>& c, int n) {
  std::vector<Rat> acc(n + 1);
  acc[0] = 1;
  for (const Rat& cj : c) {
    std::vector<Rat> fj(n + 1);
    Rat pw = 1;
    for (int k = 0; k <= n; ++k) {
      fj[k] = f[2 * k][0] * pw;
      pw *= cj;
    }
    std::vector<Rat> next(n + 1);
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) next[a + b] += acc[a] * fj[b];
    acc = std::move(next);
  }
  return acc;
}

std::vector<Rat> evaluate_graded(const PontPoly& p, const std::vector<Rat>& e, int n) {
  std::vector<Rat> out(n + 1);
  for (const auto& [part, coeff] : p.terms()) {
    Rat v = coeff[0];
    for (int i : part.parts()) v *= e[i];
    out[part.weight()] += v;
  }
  return out;
}

}  // namespace

TEST_CASE("partitions") {
  CHECK(Partition({1, 2, 1}).key() == "[2,1,1]");
  CHECK(Partition::parse("[1, 2]") == Partition({2, 1}));
  CHECK(Partition::parse("[]").empty());
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(6).size() == 11);
  CHECK(kind_of([] { Partition::parse("[1,x]"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { Partition({0, 1}); }) == ErrorKind::Parse);
}

TEST_CASE("Newton power sums") {
  const PontPoly p1 = PontPoly::generator(1, 3, 1);
  const PontPoly p2 = PontPoly::generator(2, 3, 1);
  const PontPoly p3 = PontPoly::generator(3, 3, 1);
  CHECK(newton_power_sum(1, 3) == p1);
  CHECK(newton_power_sum(2, 3) == p1 * p1 - Rat(2) * p2);
  CHECK(newton_power_sum(3, 3) == p1 * p1 * p1 - Rat(3) * p1 * p2 + Rat(3) * p3);
}

TEST_CASE("genus_class agrees with a brute-force product over the roots") {
  std::mt19937_64 rng(test::kSeed + 20);
  for (int n = 1; n <= 3; ++n) {
    for (GenusKind kind : {GenusKind::AHat, GenusKind::LHat}) {
      const RootSeries f = genus_root_series(kind, 2 * n + 1, 1);
      const PontPoly cls = genus_class(f, n);
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<Rat> c;
        for (int j = 0; j < 2 * n; ++j) c.push_back(random_rat(rng, 9, 4));
        CHECK(evaluate_graded(cls, elementary(c), n) == brute_force_product(f, c, n));
      }
    }
  }
}

TEST_CASE("classical values") {
  const Manifold cp2("CP2", 4, {{Partition({1}), Rat(3)}});
  const PontPoly lclass = genus_class(genus_root_series(GenusKind::LHat, 3, 1), 1);
  CHECK(pair(lclass, cp2)[0] == 1);
  const Manifold k3("K3", 4, {{Partition({1}), Rat(-48)}});
  CHECK(pair(genus_class(genus_root_series(GenusKind::AHat, 3, 1), 1), k3)[0] == 2);
  // ch(T_C) on a 4-manifold: 4 + p1.
  CHECK(ch_tangent(1, 1) == PontPoly::constant(USeries::constant(4, 1), 1) + PontPoly::generator(1, 1, 1));
}

TEST_CASE("genus_class input checks") {
  const RootSeries odd = RootSeries::from_rationals(5, 1, [](int k) { return k <= 1 ? Rat(1) : Rat(0); });
  CHECK(kind_of([&] { genus_class(odd, 1); }) == ErrorKind::OddTermPresent);
  const RootSeries two = RootSeries::from_rationals(5, 1, [](int k) { return k == 0 ? Rat(2) : Rat(0); });
  CHECK_NOTHROW(genus_class(two, 2));
  const RootSeries zero_start = RootSeries::from_rationals(5, 1, [](int k) { return k == 2 ? Rat(1) : Rat(0); });
  CHECK(kind_of([&] { genus_class(zero_start, 2); }) == ErrorKind::NonUnitConstant);
  CHECK(kind_of([] { genus_class(ahat_root(3, 1), 2); }) == ErrorKind::DimMismatch);
}

TEST_CASE("manifold validation") {
  CHECK(kind_of([] { Manifold("x", 6, {}); }) == ErrorKind::DimNotMultipleOf4);
  CHECK(kind_of([] { Manifold("x", 8, {{Partition({1}), Rat(1)}}); }) == ErrorKind::DimMismatch);
  const Manifold m("x", 8, {{Partition({2}), Rat(0)}, {Partition({1, 1}), Rat(5)}});
  CHECK(m.pontryagin_numbers().size() == 1);
  CHECK(m.number(Partition({2})) == 0);
}

TEST_CASE("pairing is linear and additive under disjoint union") {
  std::mt19937_64 rng(test::kSeed + 21);
  for (int n = 1; n <= 3; ++n) {
    const PontPoly a = genus_class(genus_root_series(GenusKind::Ell2, 2 * n + 1, 6), n);
    const PontPoly b = genus_class(genus_root_series(GenusKind::AHat, 2 * n + 1, 6), n);
    for (int trial = 0; trial < 5; ++trial) {
      const Manifold m1 = random_manifold(n, rng);
      const Manifold m2 = random_manifold(n, rng);
      const Rat s = random_rat(rng);
      CHECK(pair(a + s * b, m1) == pair(a, m1) + s * pair(b, m1));
      CHECK(pair(a, disjoint_union(m1, m2)) == pair(a, m1) + pair(a, m2));
    }
  }
  CHECK(kind_of([] {
          disjoint_union(Manifold("a", 4, {}), Manifold("b", 8, {}));
        }) == ErrorKind::DimMismatch);
}
