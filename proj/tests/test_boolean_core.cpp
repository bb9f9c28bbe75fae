#include <doctest.h>

#include "pdual/boolean_core.hpp"
#include "pdual/errors.hpp"

using namespace pdual;

namespace {

// Homomorphism check straight from the axioms, on raw masks.
bool brute_hom(const FunctionTable& f) {
  const Mask top_s = f.source().top_mask();
  const Mask top_t = f.target().top_mask();
  if (f.apply(0) != 0 || f.apply(top_s) != top_t) return false;
  for (Mask x = 0; x <= top_s; ++x) {
    if (f.apply(top_s & ~x) != (top_t & ~f.apply(x))) return false;
    for (Mask y = 0; y <= top_s; ++y) {
      if (f.apply(x & y) != (f.apply(x) & f.apply(y))) return false;
      if (f.apply(x | y) != (f.apply(x) | f.apply(y))) return false;
    }
  }
  return true;
}

FunctionTable atom_map(const Algebra& s, const Algebra& t, const std::vector<int>& target_of_atom) {
  return FunctionTable::from_function(s, t, [&](const Element& x) {
    Mask m = 0;
    for (int a : x.atom_list()) m |= Mask{1} << target_of_atom[static_cast<std::size_t>(a)];
    return t.element(m);
  });
}

}  // namespace

TEST_CASE("algebra construction") {
  CHECK_THROWS_AS(Algebra(0), InvalidInput);
  CHECK_THROWS_AS(Algebra(17), InvalidInput);
  const Algebra a(4);
  CHECK(a.size() == 16);
  CHECK(a.elements().size() == 16);
  CHECK_THROWS_AS(a.element(0x10), InvalidInput);
  CHECK(a.one().is_one());
  CHECK(a.atom(2).is_atom());
}

TEST_CASE("meet and order examples") {
  const Algebra a(4);
  CHECK(meet(a.from_atoms({0, 1}), a.from_atoms({1, 2})) == a.from_atoms({1}));
  CHECK(leq(a.from_atoms({0}), a.from_atoms({0, 1})));
  CHECK_FALSE(leq(a.from_atoms({0, 2}), a.from_atoms({0, 1})));
  for (const auto& x : a.elements()) {
    CHECK(meet(x, a.one()) == x);
    CHECK(meet(x, complement(x)).is_zero());
    CHECK(join(x, complement(x)).is_one());
    CHECK(leq(a.zero(), x));
  }
  CHECK_THROWS_AS(meet(a.one(), Algebra(3).one()), AlgebraMismatch);
}

TEST_CASE("lattice laws on P(3)") {
  const Algebra a(3);
  for (const auto& x : a.elements()) {
    for (const auto& y : a.elements()) {
      CHECK(meet(x, y) == meet(y, x));
      CHECK(join(x, meet(x, y)) == x);
      CHECK(complement(join(x, y)) == meet(complement(x), complement(y)));
      CHECK(leq(x, y) == (meet(x, y) == x));
      for (const auto& z : a.elements()) {
        CHECK(meet(x, join(y, z)) == join(meet(x, y), meet(x, z)));
      }
    }
  }
}

TEST_CASE("extended partitions") {
  const Algebra a(2);
  const auto z = a.zero();
  const auto o = a.one();
  CHECK(is_extended_partition(std::vector{z, z, o}));
  for (const auto& x : a.elements()) CHECK(is_extended_partition(std::vector{x, complement(x), z}));
  CHECK_FALSE(is_extended_partition(std::vector{a.from_atoms({0}), o}));
  CHECK_FALSE(is_extended_partition(std::vector{o, o}));
  CHECK(is_extended_partition(std::vector{o}));
}

TEST_CASE("homomorphism examples") {
  CHECK(is_boolean_homomorphism(FunctionTable::identity(Algebra(4))));
  CHECK(hom_via_triples(FunctionTable::identity(Algebra(4))));
  const Algebra two(2);
  const FunctionTable zero(two, two, std::vector<Mask>(4, 0));
  CHECK_FALSE(is_boolean_homomorphism(zero));
  const Algebra three(3);
  const auto relabel = atom_map(three, three, {2, 0, 1});
  CHECK(is_boolean_homomorphism(relabel));
  CHECK(brute_hom(relabel));
  // Swap 0 and 1, fix the atoms.
  const FunctionTable swap(two, two, {3, 1, 2, 0});
  CHECK_FALSE(hom_via_triples(swap));
  CHECK_FALSE(is_boolean_homomorphism(swap));
}

TEST_CASE("axioms and triples agree with brute force on P(2) -> P(2)") {
  const Algebra two(2);
  std::vector<Mask> images(4, 0);
  int homs = 0;
  for (int code = 0; code < 256; ++code) {
    for (int i = 0; i < 4; ++i) images[static_cast<std::size_t>(i)] = static_cast<Mask>((code >> (2 * i)) & 3);
    const FunctionTable f(two, two, images);
    const bool expected = brute_hom(f);
    CHECK(is_boolean_homomorphism(f) == expected);
    CHECK(hom_via_triples(f) == expected);
    homs += expected;
  }
  CHECK(homs == 4);  // 2^2 atom assignments
}

TEST_CASE("tables") {
  const Algebra s(2);
  const Algebra t(3);
  const auto f = atom_map(s, t, {0, 2});
  const auto g = atom_map(t, s, {0, 0, 1});
  CHECK(then(f, g) == FunctionTable::identity(s));
  CHECK(f.is_injective());
  CHECK_FALSE(f.is_surjective());
  CHECK(g.is_surjective());
  CHECK_THROWS(then(f, f));
  CHECK_THROWS(FunctionTable(s, t, {0, 1}));
  const std::vector<Element> fam{s.atom(0), s.atom(1), s.one()};
  CHECK(image(g, std::vector{t.atom(0), t.atom(1)}).size() == 1);
  CHECK(image(f, fam).size() == 3);
}
