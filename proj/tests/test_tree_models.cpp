#include <doctest.h>

#include <set>

#include "pdual/errors.hpp"
#include "pdual/tree_models.hpp"

using namespace pdual;

namespace {

const TreeModel kAll({2});
const TreeModel kEventuallyZero({2}, 12, Subspace::eventually_zero());

// Cylinder sets at a fixed depth as bitsets over the level nodes.
Mask as_level_set(const TreeModel& m, const TreeElement& e, int depth) {
  const auto nodes = m.level_nodes(depth);
  Mask out = 0;
  for (const auto& w : m.expand(e, depth)) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i] == w) out |= Mask{1} << i;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("branches") {
  CHECK(Branch("1000", "0") == Branch("1", "0"));
  CHECK(Branch("", "0101") == Branch("", "01"));
  CHECK(Branch("0", "10") == Branch("", "01"));
  CHECK(to_string(Branch("10", "0")) == "1(0)");
  CHECK(Branch("1", "0").node(3) == "100");
  CHECK(first_difference(Branch("1", "0"), Branch("", "0")) == std::optional<std::size_t>{0});
  CHECK_FALSE(first_difference(Branch("", "0"), Branch("00", "0")));
  CHECK_THROWS_AS(Branch("", ""), InvalidInput);
  CHECK_THROWS_AS(Branch("a", "0"), InvalidInput);
  CHECK_FALSE(kAll.is_branch(Branch("2", "0")));
}

TEST_CASE("element encoding is reduced and canonical") {
  CHECK(kAll.element({"0", "1"}) == kAll.one());
  CHECK(kAll.element({"00", "01", "1"}) == kAll.one());
  CHECK(kAll.element({"0", "01"}) == kAll.node("0"));
  CHECK(to_string(kAll.zero()) == "{}");
  CHECK(to_string(kAll.one()) == "{*}");
  CHECK(to_string(kAll.element({"10", "0"})) == "{0,10}");
  CHECK(kAll.complement(kAll.node("01")) == kAll.element({"00", "1"}));
  CHECK_THROWS_AS(kAll.node("2"), InvalidInput);
}

TEST_CASE("Boolean operations agree with level sets at depth 3") {
  const auto nodes = kAll.level_nodes(3);
  std::vector<TreeElement> elems;
  for (Mask m = 0; m < 256; m += 7) {
    std::vector<std::string> chosen;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if ((m >> i) & 1U) chosen.push_back(nodes[i]);
    }
    elems.push_back(kAll.element(chosen));
    CHECK(as_level_set(kAll, elems.back(), 3) == m);
  }
  for (const auto& a : elems) {
    CHECK(as_level_set(kAll, kAll.complement(a), 3) == (0xFFu & ~as_level_set(kAll, a, 3)));
    for (const auto& b : elems) {
      CHECK(as_level_set(kAll, kAll.meet(a, b), 3) == (as_level_set(kAll, a, 3) & as_level_set(kAll, b, 3)));
      CHECK(as_level_set(kAll, kAll.join(a, b), 3) == (as_level_set(kAll, a, 3) | as_level_set(kAll, b, 3)));
      CHECK(kAll.leq(a, b) == ((as_level_set(kAll, a, 3) & ~as_level_set(kAll, b, 3)) == 0));
    }
  }
}

TEST_CASE("branch ultrafilter examples") {
  const auto zeros = branch_ultrafilter(kAll, Branch("", "0"));
  CHECK(zeros.contains(kAll.node("0")));
  CHECK(zeros.contains(kAll.node("000")));
  CHECK(zeros.contains(kAll.complement(kAll.node("1"))));
  CHECK(zeros.contains(kAll.complement(kAll.node("01"))));
  CHECK_FALSE(zeros.contains(kAll.node("1")));
  CHECK(zeros.contains(kAll.one()));
  CHECK(first_difference(Branch("1", "0"), Branch("", "0")).value() + 1 == 1);
  CHECK_THROWS_AS(branch_ultrafilter(kAll, Branch("3", "0")), InvalidInput);
}

TEST_CASE("level partitions and the level filter") {
  for (int k = 0; k < 6; ++k) {
    CHECK(refines(kAll, kAll.level_partition(k + 1), kAll.level_partition(k)));
    CHECK(level_filter_contains(kAll, kAll.level_partition(k)));
  }
  const auto split = TreePartition::finite(kAll, {kAll.node("00"), kAll.element({"01", "1"})});
  CHECK(level_filter_contains(kAll, split));
  CHECK(validate_tree_bpa(kAll, 3).all());
  CHECK_THROWS_AS(TreePartition::finite(kAll, {kAll.node("0")}), InvalidInput);
  CHECK_THROWS_AS(TreePartition::finite(kAll, {kAll.node("0"), kAll.one()}), InvalidInput);
}

TEST_CASE("truncation examples") {
  const auto t2 = truncate(kAll, 2);
  CHECK(t2.bpa.algebra.atoms() == 4);
  REQUIRE(t2.bpa.filter.generators().size() == 2);
  CHECK(t2.bpa.filter.generators()[0] == Partition::make(t2.bpa.algebra, {0b0011, 0b1100}));
  CHECK(t2.bpa.filter.generators()[1] == Partition::atoms(t2.bpa.algebra));
  CHECK(t2.bpa.filter.base() == Partition::atoms(t2.bpa.algebra));
  const auto t0 = truncate(kAll, 0);
  CHECK(t0.space.points() == 1);
  CHECK(t0.bpa.algebra.size() == 2);
  CHECK_THROWS_AS(truncate(kAll, 13), DepthOverflow);
  CHECK_THROWS_AS(truncate(kAll, 5), CapacityError);
}

TEST_CASE("density examples") {
  for (int d = 0; d <= 12; ++d) {
    CHECK(density_check(kEventuallyZero, d));
    CHECK(density_check(kAll, d));
  }
  const TreeModel single({2}, 12, Subspace::explicit_list({Branch("", "0")}));
  CHECK_FALSE(density_check(single, 1));
  CHECK_THROWS_AS(density_check(kAll, 13), DepthOverflow);
}

TEST_CASE("probe examples") {
  const auto r = nonsurjectivity_probe(kEventuallyZero, Branch("", "1"), 6);
  CHECK(r.bounded_evidence);
  CHECK(r.divergences.size() == 64);
  for (const auto& d : r.divergences) CHECK(d.depth <= d.representative.prefix().size() + 1);
  CHECK_THROWS_AS(nonsurjectivity_probe(kAll, Branch("", "1"), 6), MisuseError);
  CHECK_THROWS_AS(nonsurjectivity_probe(kEventuallyZero, Branch("1", "0"), 6), MisuseError);
  const TreeModel listed({2}, 12, Subspace::explicit_list({Branch("", "0"), Branch("1", "0"), Branch("", "01")}));
  const auto l = nonsurjectivity_probe(listed, Branch("", "1"), 3);
  REQUIRE(l.divergences.size() == 3);
  std::set<std::size_t> depths;
  for (const auto& d : l.divergences) depths.insert(d.depth);
  CHECK(depths == std::set<std::size_t>{1, 2});
}

TEST_CASE("completeness and completion") {
  const auto c = tree_is_complete(kEventuallyZero, 8);
  CHECK_FALSE(c.complete);
  REQUIRE(c.unrealized);
  CHECK(*c.unrealized == Branch("", "1"));
  CHECK(tree_is_complete(kAll, 8).complete);
  const auto r = tree_completion(kEventuallyZero, 8);
  CHECK(r.dense);
  CHECK(r.embedding);
  CHECK_FALSE(r.homeomorphism);
  CHECK(r.levels.size() == 9);
  const auto all = tree_completion(kAll, 8);
  CHECK(all.homeomorphism);
  for (const auto& l : all.levels) CHECK(l.bijective());
}

TEST_CASE("combs are not subcomplete") {
  const Comb comb{Branch("", "0"), 1};
  const auto p = TreePartition::comb(kAll, comb.spine, comb.group);
  CHECK_FALSE(is_subcomplete(kAll, p));
  CHECK(annulus(kAll, comb, 0) == kAll.node("1"));
  CHECK(annulus(kAll, comb, 2) == kAll.node("001"));
  const Branch alternate("", "10");
  CHECK_FALSE(comb_join(kAll, comb, alternate));
  const auto v = smaller_upper_bound(kAll, comb, alternate, kAll.one());
  REQUIRE(v);
  CHECK(kAll.leq(*v, kAll.one()));
  CHECK(is_upper_bound(kAll, comb, alternate, *v));
  const auto finite = comb_join(kAll, comb, Branch("11", "0"));
  REQUIRE(finite);
  CHECK(*finite == kAll.element({"1", "01"}));
  CHECK_THROWS_AS(smaller_upper_bound(kAll, comb, alternate, kAll.node("0")), MisuseError);
  CHECK(refines(kAll, p, kAll.level_partition(0)));
  CHECK_FALSE(level_filter_contains(kAll, p));
}

TEST_CASE("level embeddings commute with truncation") {
  const auto e = level_embedding(kAll, 1, 3);
  CHECK(e.table()(e.source().algebra.atom(0)).bits() == 0b00001111);
  const auto s = s_star_map(e);
  CHECK(s(5) == 1);
  CHECK(compose(level_embedding(kAll, 1, 2), level_embedding(kAll, 2, 3)) == e);
}
