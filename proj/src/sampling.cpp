#include "ellgen/sampling.hpp"

namespace ellgen {

Rat random_rat(std::mt19937_64& rng, int max_num, int max_den) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  Rat r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

Manifold random_manifold(int n, std::mt19937_64& rng, int max_num, int max_den) {
  std::map<Partition, Rat> numbers;
  for (const Partition& p : partitions_of(n)) numbers[p] = random_rat(rng, max_num, max_den);
  return Manifold("random", 4 * n, std::move(numbers));
}

}  // namespace ellgen
