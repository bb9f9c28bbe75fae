#include <doctest.h>

#include <algorithm>

#include "pdual/errors.hpp"
#include "pdual/partition_algebra.hpp"

using namespace pdual;

namespace {

const Algebra kFour(4);

Partition part(const Algebra& a, std::vector<Mask> blocks) { return Partition::make(a, std::move(blocks)); }

Bpa principal(const Algebra& a, std::vector<Mask> base) {
  return Bpa(PartitionFilter(a, {part(a, std::move(base))}));
}

// Ultrafilters of a finite algebra by brute force: subsets of elements that are
// upward closed, meet closed, proper, and contain x or x' for each x.
std::vector<std::vector<Mask>> brute_f_ultrafilters(const Bpa& b) {
  const Mask top = b.algebra.top_mask();
  const std::size_t n = b.algebra.size();
  std::vector<std::vector<Mask>> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const auto in = [&](Mask x) { return ((s >> x) & 1U) != 0; };
    bool ok = !in(0) && in(top);
    for (Mask x = 0; ok && x <= top; ++x) {
      if (in(x) == in(top & ~x)) ok = false;
      for (Mask y = 0; ok && y <= top; ++y) {
        if (in(x) && in(y) && !in(x & y)) ok = false;
        if (in(x) && (x & ~y) == 0 && !in(y)) ok = false;
      }
    }
    for (const auto& p : b.filter.members()) {
      if (!ok) break;
      ok = std::count_if(p.blocks().begin(), p.blocks().end(), in) == 1;
    }
    if (!ok) continue;
    std::vector<Mask> members;
    for (Mask x = 0; x <= top; ++x) {
      if (in(x)) members.push_back(x);
    }
    out.push_back(members);
  }
  return out;
}

}  // namespace

TEST_CASE("filter examples") {
  const PartitionFilter atoms(kFour, {Partition::atoms(kFour)});
  CHECK(atoms.members().size() == 15);
  const PartitionFilter top(kFour, {Partition::top(kFour)});
  CHECK(top.members().size() == 1);
  const PartitionFilter empty(kFour, {});
  CHECK(empty.base() == Partition::top(kFour));
  const PartitionFilter pair(kFour, {part(kFour, {0b0011, 0b1100}), part(kFour, {0b0101, 0b1010})});
  CHECK(pair.base() == Partition::atoms(kFour));
  CHECK(filter_contains(atoms, part(kFour, {0b0011, 0b1100})));
  CHECK_FALSE(filter_contains(PartitionFilter(kFour, {part(kFour, {0b0011, 0b1100})}), Partition::atoms(kFour)));
  CHECK_THROWS_AS(filter_from_generators(kFour, {Partition::atoms(Algebra(3))}), InvalidInput);
}

TEST_CASE("validity examples") {
  CHECK(validate_bpa(make_full_bpa(kFour)).all());
  const auto bad = validate_bpa(principal(kFour, {0b0011, 0b1100}));
  CHECK_FALSE(bad.complement_pairs);
  CHECK_FALSE(bad.covers_elements);
  CHECK_FALSE(bad.all_finite_partitions);
  REQUIRE(bad.witness);
  const Algebra one(1);
  CHECK(validate_bpa(Bpa(PartitionFilter(one, {Partition::top(one)}))).all());
  CHECK(make_full_bpa(kFour).filter.members().size() == 15);
  CHECK(make_full_bpa(one).filter.members().size() == 1);
  CHECK(make_full_bpa(kFour, PartitionBound::Finite).filter.base() == Partition::atoms(kFour));
}

TEST_CASE("induced algebra examples") {
  const auto ind = induced_bpa(kFour, PartitionFilter(kFour, {part(kFour, {0b0011, 0b1100})}));
  CHECK(ind.bpa.algebra.atoms() == 2);
  CHECK(std::vector<Mask>(ind.embedding.atom_images().begin(), ind.embedding.atom_images().end()) ==
        std::vector<Mask>{0b0011, 0b1100});
  CHECK(ind.bpa.filter.base() == Partition::atoms(ind.bpa.algebra));
  CHECK(enumerate_f_ultrafilters(ind.bpa).size() == 2);
  CHECK(induced_bpa(kFour, make_full_bpa(kFour).filter).bpa.algebra == kFour);
  const Algebra two(2);
  CHECK(induced_bpa(two, PartitionFilter(two, {})).bpa.algebra.atoms() == 1);
}

TEST_CASE("spectrum examples") {
  const auto s = enumerate_f_ultrafilters(make_full_bpa(kFour));
  REQUIRE(s.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(s[static_cast<std::size_t>(i)] == FUltrafilter::principal(kFour.atom(i)));
  CHECK(enumerate_f_ultrafilters(make_full_bpa(Algebra(1))).size() == 1);
  CHECK_THROWS_AS(enumerate_f_ultrafilters(principal(kFour, {0b0011, 0b1100})), ValidityError);
}

TEST_CASE("spectrum matches brute force on every induced algebra of P(3)") {
  const Algebra three(3);
  for (const auto& base : enumerate_partitions(three)) {
    const Bpa ind = induced_bpa(three, PartitionFilter(three, {base})).bpa;
    const auto lib = enumerate_f_ultrafilters(ind);
    const auto brute = brute_f_ultrafilters(ind);
    std::vector<Mask> lib_least;
    std::vector<Mask> brute_least;
    for (const auto& u : lib) lib_least.push_back(u.least().bits());
    for (const auto& u : brute) brute_least.push_back(u.front());
    std::sort(brute_least.begin(), brute_least.end());
    CHECK(lib_least == brute_least);
  }
}

TEST_CASE("L and M") {
  const Algebra three(3);
  const Bpa full = make_full_bpa(three);
  const auto members = full.filter.members();
  std::vector<Mask> pick;
  for (const auto& p : members) pick.push_back(p.blocks()[p.block_of_atom(1)]);
  const InverseLimitPoint x(members, pick);
  CHECK(x.coherent());
  CHECK(limit_to_ultrafilter(full, x) == FUltrafilter::principal(three.atom(1)));

  const Bpa four = make_full_bpa(kFour);
  const auto m = ultrafilter_to_limit(four, FUltrafilter::principal(kFour.atom(2)));
  CHECK(m.at(part(kFour, {0b0011, 0b1100})) == kFour.from_atoms({2, 3}));
  CHECK(m.at(Partition::top(kFour)) == kFour.one());

  const Algebra one(1);
  const auto sel = coherent_selections(make_full_bpa(one).filter);
  REQUIRE(sel.size() == 1);
  CHECK(limit_to_ultrafilter(make_full_bpa(one), sel[0]) == FUltrafilter::principal(one.one()));

  const InverseLimitPoint bad({Partition::atoms(three), Partition::top(three)}, {0b001, 0b111});
  CHECK(bad.coherent());
  const InverseLimitPoint clash({Partition::atoms(three), part(three, {0b011, 0b100})}, {0b001, 0b100});
  CHECK_FALSE(clash.coherent());
  CHECK_THROWS_AS(limit_to_ultrafilter(full, clash), CoherenceError);
}

TEST_CASE("stability and iota") {
  for (int n = 1; n <= 4; ++n) {
    const auto r = stability_report(make_full_bpa(Algebra(n)));
    CHECK(r.stable());
    CHECK(r.agree());
  }
  const Bpa four = make_full_bpa(kFour);
  const auto s = enumerate_f_ultrafilters(four);
  CHECK(iota(s, kFour.from_atoms({0, 1})).bits() == 0b0011);
  const auto img = iota_image(s, part(kFour, {0b0011, 0b1100}));
  CHECK(img.size() == 2);
}

TEST_CASE("every principal filter: induced algebra is valid and stable with |spectrum| = atoms") {
  for (int n = 1; n <= 4; ++n) {
    const Algebra a(n);
    for (const auto& base : enumerate_partitions(a)) {
      const auto ind = induced_bpa(a, PartitionFilter(a, {base}));
      CHECK(validate_bpa(ind.bpa).all());
      CHECK(stability_report(ind.bpa).stable());
      CHECK(enumerate_f_ultrafilters(ind.bpa).size() == base.size());
      const auto v = validate_bpa(Bpa(PartitionFilter(a, {base})));
      CHECK(v.agree());
      CHECK(v.all() == (base == Partition::atoms(a)));
    }
  }
}
