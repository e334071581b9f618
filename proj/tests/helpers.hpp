#pragma once

#include <doctest.h>

#include <random>
#include <string>

#include "ellgen/error.hpp"
#include "ellgen/series.hpp"

namespace ellgen::test {

inline constexpr std::uint64_t kSeed = 0x5eed2024;

inline USeries random_series(std::mt19937_64& rng, int order, int max_num = 9, int max_den = 5) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  std::vector<Rat> c(static_cast<std::size_t>(order));
  for (auto& x : c) {
    x = Rat(num(rng), den(rng));
    x.canonicalize();
  }
  return USeries(std::move(c), order);
}

inline USeries from_ints(std::initializer_list<long> v, int order) {
  std::vector<Rat> c(static_cast<std::size_t>(order));
  int k = 0;
  for (long x : v) {
    if (k < order) c[k] = x;
    ++k;
  }
  return USeries(std::move(c), order);
}

template <typename Fn>
ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an ellgen::Error");
  return ErrorKind::Parse;
}

}  // namespace ellgen::test
