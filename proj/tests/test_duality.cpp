#include <doctest.h>

#include "pdual/duality.hpp"
#include "pdual/errors.hpp"

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

FunctionTable preimage_map(const Algebra& s, const Algebra& t, const std::vector<int>& atom_to_s) {
  return FunctionTable::from_function(s, t, [&](const Element& x) {
    Mask m = 0;
    for (int a = 0; a < t.atoms(); ++a) {
      if ((x.bits() >> atom_to_s[static_cast<std::size_t>(a)]) & 1U) m |= Mask{1} << a;
    }
    return t.element(m);
  });
}

}  // namespace

TEST_CASE("spectrum space examples") {
  const auto s = spectrum_space(make_full_bpa(Algebra(4)));
  CHECK(s == kSingletons4);
  CHECK(spectrum_space(make_full_bpa(Algebra(1))).points() == 1);
  const Algebra four(4);
  CHECK_THROWS_AS(spectrum_space(Bpa(PartitionFilter(four, {Partition::make(four, {0b0011, 0b1100})}))),
                  ValidityError);
}

TEST_CASE("algebra of space examples") {
  const auto a = algebra_of_space(kSingletons4).bpa;
  CHECK(a.algebra.atoms() == 4);
  CHECK(a.filter.base() == Partition::atoms(a.algebra));
  CHECK(algebra_of_space(kPairs4).bpa.algebra.atoms() == 2);
  CHECK(algebra_of_space(space(1, {})).bpa.algebra.size() == 2);
}

TEST_CASE("psi") {
  for (int n = 1; n <= 4; ++n) {
    const auto w = psi_witness(make_full_bpa(Algebra(n)));
    CHECK(w.isomorphism);
    CHECK(w.recheck());
    REQUIRE(w.backward);
    CHECK(compose(w.forward, *w.backward) == PartitionHom::identity(w.forward.source()));
  }
}

TEST_CASE("b_star and s_star examples") {
  CHECK(b_star_map(UniformMap::identity(kSingletons4)).table() == FunctionTable::identity(Algebra(4)));
  const auto two = space(2, {{1, 2}});
  const UniformMap parity(kSingletons4, two, {0, 1, 0, 1});
  const auto b = b_star_map(parity);
  CHECK(b(Algebra(2).atom(0)).bits() == 0b0101);
  const Bpa full4 = make_full_bpa(Algebra(4));
  CHECK(s_star_map(PartitionHom::identity(full4)) == UniformMap::identity(spectrum_space(full4)));
  // Atom {0} of P(2) goes to {0,1}: the ultrafilter at atom 0 of P(4) pulls back to the one at {0}.
  const auto phi = PartitionHom::make(preimage_map(Algebra(2), Algebra(4), {0, 0, 1, 1}),
                                      make_full_bpa(Algebra(2)), full4);
  const UniformMap s = s_star_map(phi);
  CHECK(s(0) == 0);
  CHECK(s(1) == 0);
  CHECK(s(2) == 1);
  CHECK(s(3) == 1);
  CHECK_THROWS_AS(b_star_map(UniformMap(kPairs4, two, {0, 1, 0, 1})), UniformContinuityError);
}

TEST_CASE("completion examples") {
  const auto sep = completion(kSingletons4);
  CHECK(sep.report.homeomorphism);
  CHECK(sep.report.embedding);
  CHECK(sep.c.is_injective());
  CHECK(sep.c.is_surjective());
  const auto pairs = completion(kPairs4);
  CHECK(pairs.space.points() == 2);
  CHECK(pairs.report.dense);
  CHECK(pairs.report.uniformly_continuous);
  CHECK_FALSE(pairs.report.embedding);
  CHECK_FALSE(pairs.report.homeomorphism);
  CHECK(std::vector<int>(pairs.c.table().begin(), pairs.c.table().end()) == std::vector<int>{0, 0, 1, 1});
}

TEST_CASE("round trips over all principal spaces on at most 4 points") {
  for (int n = 1; n <= 4; ++n) {
    const Algebra a(n);
    for (const auto& p : enumerate_partitions(a)) {
      const PartitionSpace x(n, {p});
      const Bpa alg = algebra_of_space(x).bpa;
      CHECK(compose(psi(alg), b_star_map(c_uniform_map(x))).table() == FunctionTable::identity(alg.algebra));
      const auto c = completion(x);
      CHECK(c.report.homeomorphism == is_separating(x));
      CHECK(has_dense_image(c.c));
      CHECK(is_uniform_embedding(c.c) == is_separating(x));
    }
  }
}
