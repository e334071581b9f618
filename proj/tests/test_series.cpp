#include "helpers.hpp"

using namespace ellgen;
using ellgen::test::from_ints;
using ellgen::test::kind_of;
using ellgen::test::random_series;

TEST_CASE("parse and print rationals") {
  CHECK(parse_rat("-3/6") == Rat(-1, 2));
  CHECK(parse_rat("+7") == 7);
  CHECK(rat_string(Rat(4, 2)) == "2");
  CHECK(rat_string(Rat(-1, 8)) == "-1/8");
  CHECK(kind_of([] { parse_rat("1/0"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_rat("abc"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_rat(""); }) == ErrorKind::Parse);
  CHECK(binomial(-3, 2) == 6);
  CHECK(factorial(5) == 120);
}

TEST_CASE("ring laws on random series") {
  std::mt19937_64 rng(test::kSeed);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 12);
    const USeries a = random_series(rng, k);
    const USeries b = random_series(rng, k);
    const USeries c = random_series(rng, k);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == USeries(k));
    CHECK(a * USeries::constant(1, k) == a);
  }
}

TEST_CASE("inverse, power and exp/log round trips") {
  std::mt19937_64 rng(test::kSeed + 1);
  for (int trial = 0; trial < 25; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 10);
    USeries a = random_series(rng, k);
    if (a[0] == 0) a += USeries::constant(1, k);
    CHECK(a * inverse(a) == USeries::constant(1, k));
    CHECK(power(a, 3) == a * a * a);
    CHECK(power(a, -2) * power(a, 2) == USeries::constant(1, k));

    const USeries z = a - USeries::constant(a[0], k);  // no constant term
    CHECK(log(exp(z)) == z);
    const USeries one_plus = USeries::constant(1, k) + z;
    CHECK(exp(log(one_plus)) == one_plus);
    CHECK(exp(z + z) == exp(z) * exp(z));
  }
}

TEST_CASE("exp matches the factorial series") {
  const int k = 10;
  const USeries e = exp(USeries::monomial(1, 1, k));
  for (int j = 0; j < k; ++j) CHECK(e[j] == 1 / factorial(j));
}

TEST_CASE("domain errors") {
  CHECK(kind_of([] { inverse(from_ints({0, 1}, 4)); }) == ErrorKind::ZeroConstantTerm);
  CHECK(kind_of([] { exp(from_ints({1, 1}, 4)); }) == ErrorKind::BadConstantTerm);
  CHECK(kind_of([] { log(from_ints({2, 1}, 4)); }) == ErrorKind::BadConstantTerm);
}

TEST_CASE("truncation takes the smaller order") {
  const USeries a = from_ints({1, 2, 3, 4, 5}, 5);
  const USeries b = from_ints({1, 1}, 2);
  CHECK((a * b).order() == 2);
  CHECK((a + b).order() == 2);
  CHECK(a.truncated(3) == from_ints({1, 2, 3}, 3));
  CHECK(a[7] == 0);
}

TEST_CASE("product of (1 - q^m) is the pentagonal-number series") {
  const int order = 60;  // u-order, q-order 30
  const USeries euler = product(
      [](int m, int k) { return USeries::constant(1, k) - USeries::monomial(2 * m, 1, k); },
      [](int m) { return 2 * m; }, order);
  std::vector<Rat> oracle(order);
  for (int j = -10; j <= 10; ++j) {
    const int e = j * (3 * j - 1) / 2;  // q-exponent
    if (2 * e < order) oracle[2 * e] += (j % 2 == 0) ? 1 : -1;
  }
  CHECK(euler == USeries(oracle, order));
}

TEST_CASE("product rejects factors that break their declared weight") {
  auto bad_factor = [](int m, int k) { return USeries::constant(1, k) + USeries::monomial(m, 1, k); };
  CHECK(kind_of([&] { product(bad_factor, [](int m) { return 2 * m; }, 10); }) == ErrorKind::WeightViolation);
  auto ok = [](int m, int k) { return USeries::constant(1, k) + USeries::monomial(2 * m, 1, k); };
  CHECK(kind_of([&] { product(ok, [](int) { return 2; }, 10); }) == ErrorKind::WeightViolation);
}

TEST_CASE("text rendering") {
  CHECK(to_text(from_ints({2, 48, -3}, 4)) == "2 + 48 q^(1/2) - 3 q + O(q^2)");
  CHECK(to_text(USeries(6)) == "0");
  CHECK(to_text(from_ints({0, 0, 1, 0, -1}, 5)) == "q - q^2 + O(q^(5/2))");
  CHECK(from_ints({1, 0, 5}, 3).is_even());
  CHECK_FALSE(from_ints({1, 2}, 3).is_even());
}
