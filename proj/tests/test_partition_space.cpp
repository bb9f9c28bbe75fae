#include <doctest.h>

#include "pdual/errors.hpp"
#include "pdual/partition_space.hpp"

using namespace pdual;

namespace {

PartitionSpace space(int n, std::vector<std::vector<Mask>> crevasses) {
  const Algebra a(n);
  std::vector<Partition> ps;
  for (auto& c : crevasses) ps.push_back(Partition::make(a, std::move(c)));
  return PartitionSpace(n, std::move(ps));
}

const PartitionSpace kSingletons4 = space(4, {{1, 2, 4, 8}});
const PartitionSpace kPairs4 = space(4, {{0b0011, 0b1100}});

}  // namespace

TEST_CASE("separation examples") {
  CHECK(is_separating(kSingletons4));
  CHECK_FALSE(is_separating(kPairs4));
  CHECK(is_separating(space(4, {{0b0011, 0b1100}, {0b0101, 0b1010}})));
  CHECK(is_separating(space(1, {})));
}

TEST_CASE("uniform continuity examples") {
  CHECK(is_uniformly_continuous(UniformMap::identity(kPairs4)));
  const auto two = space(2, {{1, 2}});
  CHECK(is_uniformly_continuous(UniformMap(kSingletons4, two, {0, 1, 0, 1})));
  CHECK(is_uniformly_continuous(UniformMap(kPairs4, two, {0, 0, 1, 1})));
  CHECK_FALSE(is_uniformly_continuous(UniformMap(kPairs4, two, {0, 1, 0, 1})));
  CHECK(is_uniformly_continuous(UniformMap(kPairs4, kSingletons4, {3, 3, 3, 3})));
  CHECK_THROWS_AS(UniformMap(kPairs4, two, {0, 1, 2, 0}), InvalidInput);
  CHECK_THROWS_AS(UniformMap(kPairs4, two, {0, 1}), InvalidInput);
}

TEST_CASE("preimages and composition") {
  const auto two = space(2, {{1, 2}});
  const UniformMap parity(kSingletons4, two, {0, 1, 0, 1});
  CHECK(parity.preimage(Algebra(2).atom(0)).bits() == 0b0101);
  CHECK(parity.preimage(Partition::atoms(Algebra(2))) == Partition::make(Algebra(4), {0b0101, 0b1010}));
  const UniformMap back(two, kSingletons4, {2, 3});
  CHECK(then(back, parity) == UniformMap(two, two, {0, 1}));
  CHECK_THROWS(then(parity, parity));
}

TEST_CASE("completeness examples") {
  CHECK(is_complete(kSingletons4));
  CHECK_FALSE(is_complete(kPairs4));
  CHECK(coherent_points(kPairs4).size() == 2);
  CHECK(coherent_points(kSingletons4).size() == 4);
}

TEST_CASE("point map examples") {
  const auto u = c_map(kSingletons4, 2);
  CHECK(u.least().bits() == 0b0100);
  CHECK(c_map(kPairs4, 0) == c_map(kPairs4, 1));
  CHECK_FALSE(c_map(kPairs4, 0) == c_map(kPairs4, 2));
  CHECK_THROWS_AS(c_map(kPairs4, 4), InvalidInput);
}

TEST_CASE("space algebra examples") {
  CHECK(space_algebra(kSingletons4).bpa.algebra.atoms() == 4);
  CHECK(space_algebra(kPairs4).bpa.algebra.atoms() == 2);
  CHECK(space_algebra(space(1, {})).bpa.algebra.atoms() == 1);
}

TEST_CASE("separating iff the meet of the crevasses is the singleton partition") {
  for (int n = 1; n <= 4; ++n) {
    const Algebra a(n);
    for (const auto& p : enumerate_partitions(a)) {
      for (const auto& q : enumerate_partitions(a)) {
        const PartitionSpace x(n, {p, q});
        CHECK(is_separating(x) == (meet(p, q) == Partition::atoms(a)));
        CHECK(is_complete(x) == is_separating(x));
      }
    }
  }
}
