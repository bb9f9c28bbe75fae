#include <doctest.h>

#include <algorithm>
#include <set>

#include "pdual/errors.hpp"
#include "pdual/partition_lattice.hpp"

using namespace pdual;

namespace {

const Algebra kFour(4);

Partition part(std::vector<Mask> blocks) { return Partition::make(kFour, std::move(blocks)); }

// Set partitions of {0..n-1} by inserting each atom into an existing block or a new one.
std::set<std::vector<Mask>> brute_partitions(int n) {
  std::vector<std::vector<Mask>> acc{{}};
  for (int a = 0; a < n; ++a) {
    std::vector<std::vector<Mask>> next;
    for (const auto& p : acc) {
      for (std::size_t i = 0; i < p.size(); ++i) {
        auto q = p;
        q[i] |= Mask{1} << a;
        next.push_back(q);
      }
      auto q = p;
      q.push_back(Mask{1} << a);
      next.push_back(q);
    }
    acc = std::move(next);
  }
  std::set<std::vector<Mask>> out;
  for (auto& p : acc) {
    std::sort(p.begin(), p.end());
    out.insert(p);
  }
  return out;
}

bool brute_refines(const Partition& a, const Partition& b) {
  return std::all_of(a.blocks().begin(), a.blocks().end(), [&](Mask x) {
    return std::any_of(b.blocks().begin(), b.blocks().end(), [&](Mask y) { return (x & ~y) == 0; });
  });
}

std::vector<Mask> sorted(std::span<const Mask> s) {
  std::vector<Mask> v(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("cellular and partition examples") {
  const auto e = [](std::initializer_list<int> a) { return kFour.from_atoms(a); };
  CHECK(is_cellular(std::vector{e({0, 1}), e({2, 3})}));
  CHECK_FALSE(is_cellular(std::vector{e({0, 1}), e({1, 2})}));
  CHECK(is_cellular(std::vector<Element>{}));
  CHECK(is_partition(std::vector{e({0, 1}), e({2, 3})}));
  CHECK_FALSE(is_partition(std::vector{e({0, 1})}));
  CHECK(is_partition(std::vector{kFour.one()}));
  CHECK_THROWS(Partition::make(kFour, {0b0011}));
  CHECK_THROWS(CellularFamily::make(kFour, {0b0011, 0b0110}));
}

TEST_CASE("maximal extension examples") {
  CHECK(extend_to_maximal_cellular(CellularFamily::make(kFour, {0b0011})) == part({0b0011, 0b0100, 0b1000}));
  for (const auto& p : enumerate_partitions(kFour)) CHECK(extend_to_maximal_cellular(p) == p);
  const Algebra one(1);
  CHECK(extend_to_maximal_cellular(CellularFamily::make(one, {})) == Partition::atoms(one));
}

TEST_CASE("refinement examples") {
  CHECK(refines(Partition::atoms(kFour), part({0b0011, 0b1100})));
  CHECK_FALSE(refines(part({0b0011, 0b1100}), part({0b0101, 0b1010})));
  for (const auto& p : enumerate_partitions(kFour)) CHECK(refines(p, p));
}

TEST_CASE("meet examples") {
  CHECK(meet(part({0b0011, 0b1100}), part({0b0101, 0b1010})) == Partition::atoms(kFour));
  for (const auto& p : enumerate_partitions(kFour)) {
    CHECK(meet(p, p) == p);
    CHECK(meet(p, Partition::top(kFour)) == p);
  }
}

TEST_CASE("enumeration matches brute force and Bell numbers") {
  const std::uint64_t bells[] = {1, 1, 2, 5, 15, 52, 203};
  for (int n = 1; n <= 6; ++n) {
    const Algebra a(n);
    CHECK(bell_number(n) == bells[n]);
    std::set<std::vector<Mask>> lib;
    for (const auto& p : enumerate_partitions(a)) lib.insert(sorted(p.blocks()));
    CHECK(lib == brute_partitions(n));
    CHECK(restricted_growth_strings(n).size() == bells[n]);
  }
}

TEST_CASE("refinement agrees with brute force; meet is the greatest lower bound") {
  const auto all = enumerate_partitions(kFour);
  for (const auto& p : all) {
    for (const auto& q : all) {
      CHECK(refines(p, q) == brute_refines(p, q));
      const Partition m = meet(p, q);
      CHECK(refines(m, p));
      CHECK(refines(m, q));
      for (const auto& r : all) {
        if (refines(r, p) && refines(r, q)) CHECK(refines(r, m));
      }
    }
  }
}

TEST_CASE("coarsening maps") {
  const auto fine = Partition::atoms(kFour);
  const auto mid = part({0b0011, 0b1100});
  const auto top = Partition::top(kFour);
  const auto f = coarsening_map(fine, mid);
  CHECK(f(kFour.atom(3)) == kFour.from_atoms({2, 3}));
  CHECK(then(f, coarsening_map(mid, top)) == coarsening_map(fine, top));
  CHECK_THROWS_AS(coarsening_map(mid, fine), RefinementError);
}

TEST_CASE("coarsenings and cellular families") {
  const auto mid = part({0b0011, 0b1100});
  const auto up = coarsenings(mid);
  CHECK(up.size() == 2);
  for (const auto& q : up) CHECK(refines(mid, q));
  std::size_t maximal = 0;
  for (const auto& c : enumerate_cellular_families(Algebra(3))) {
    maximal += is_partition(c.elements());
  }
  CHECK(maximal == 5);
}

TEST_CASE("subcomplete embedding") {
  const auto p = part({0b0001, 0b0110, 0b1000});
  CHECK(is_subcomplete(p));
  const auto e = subcomplete_embedding(p);
  CHECK(e.source().atoms() == 3);
  CHECK(e.is_injective());
  CHECK(e.apply(0b011) == 0b0111);
  CHECK(e.apply(0b111) == 0b1111);
}

TEST_CASE("meet_all") {
  const std::vector ps{part({0b0011, 0b1100}), part({0b0101, 0b1010})};
  CHECK(meet_all(kFour, ps) == Partition::atoms(kFour));
  CHECK(meet_all(kFour, std::vector<Partition>{}) == Partition::top(kFour));
}
