#include "ellgen/root_series.hpp"

#include "helpers.hpp"

using namespace ellgen;
using ellgen::test::kind_of;
using ellgen::test::random_series;

namespace {

RootSeries random_root(std::mt19937_64& rng, int xdeg, int uorder) {
  std::vector<USeries> c;
  for (int k = 0; k < xdeg; ++k) c.push_back(random_series(rng, uorder, 5, 3));
  return RootSeries(std::move(c), xdeg, uorder);
}

}  // namespace

TEST_CASE("root series ring laws and inverse") {
  std::mt19937_64 rng(test::kSeed + 10);
  for (int trial = 0; trial < 10; ++trial) {
    const RootSeries a = random_root(rng, 5, 4);
    const RootSeries b = random_root(rng, 5, 4);
    const RootSeries c = random_root(rng, 5, 4);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    RootSeries unit = a;
    if (unit.at_zero()[0] == 0) unit = unit + RootSeries::constant(USeries::constant(1, 4), 5);
    CHECK(unit * inverse(unit) == RootSeries::constant(USeries::constant(1, 4), 5));
  }
}

TEST_CASE("x-exp and x-log invert each other") {
  std::mt19937_64 rng(test::kSeed + 11);
  for (int trial = 0; trial < 10; ++trial) {
    RootSeries z = random_root(rng, 6, 3);
    z = z - RootSeries::constant(z.at_zero(), 6);
    CHECK(log(exp(z)) == z);
    CHECK(power(exp(z), 3) == exp(Rat(3) * z));
  }
}

TEST_CASE("scaling x") {
  const RootSeries e = exp(RootSeries::from_rationals(4, 1, [](int k) { return k == 1 ? Rat(1) : Rat(0); }));
  const RootSeries e2 = e.scaled(2);
  for (int k = 0; k < 4; ++k) CHECK(e2[k][0] == Rat(1 << k) / factorial(k));
}

TEST_CASE("constructor and product contracts") {
  CHECK(kind_of([] { RootSeries({USeries(2)}, 1, 5); }) == ErrorKind::DimMismatch);
  CHECK(kind_of([] { log(RootSeries::constant(USeries::constant(2, 3), 3)); }) == ErrorKind::BadConstantTerm);
  auto bad = [](int) {
    return RootSeries::constant(USeries::constant(1, 6) + USeries::monomial(1, 1, 6), 3);
  };
  CHECK(kind_of([&] { product(bad, [](int m) { return 2 * m; }, 3, 6); }) == ErrorKind::WeightViolation);
  CHECK(RootSeries(3, 2)[10].is_zero());
}
