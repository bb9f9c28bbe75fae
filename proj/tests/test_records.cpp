#include <doctest.h>

#include "pdual/duality.hpp"
#include "pdual/errors.hpp"
#include "pdual/records.hpp"

using namespace pdual;

TEST_CASE("bpa records round trip") {
  for (int n = 1; n <= 4; ++n) {
    const Algebra a(n);
    for (const auto& p : enumerate_partitions(a)) {
      const Bpa b(PartitionFilter(a, {p}));
      const Json j = to_record(b);
      CHECK(record_kind(j) == RecordKind::Bpa);
      const Bpa back = bpa_from_record(parse_record(j.dump()));
      CHECK(back.algebra == b.algebra);
      CHECK(back.filter.base() == b.filter.base());
      CHECK(to_record(back) == j);
    }
  }
}

TEST_CASE("space, map and morphism records round trip") {
  const Algebra four(4);
  const PartitionSpace x(4, {Partition::make(four, {0b0011, 0b1100})});
  CHECK(space_from_record(to_record(x)) == x);
  const auto c = completion(x);
  const UniformMap back = map_from_record(to_record(c.c));
  CHECK(back == c.c);
  const auto id = PartitionHom::identity(make_full_bpa(Algebra(2)));
  const auto m = morphism_from_record(to_record(id));
  CHECK(m.table == id.table());
}

TEST_CASE("tree and branch records") {
  const Json t = parse_record(R"({"branching": [2], "depth_bound": 12, "subspace": "eventually-zero"})");
  CHECK(record_kind(t) == RecordKind::Tree);
  const TreeModel m = tree_from_record(t);
  CHECK(m.subspace().kind == SubspaceKind::EventuallyZero);
  CHECK(tree_from_record(to_record(m)) == m);
  const Json b = parse_record(R"({"prefix": "10", "period": "0"})");
  CHECK(record_kind(b) == RecordKind::Branch);
  CHECK(branch_from_record(b) == Branch("1", "0"));
  const TreeModel listed({2}, 6, Subspace::explicit_list({Branch("", "0"), Branch("1", "01")}));
  CHECK(tree_from_record(to_record(listed)) == listed);
  const auto e = m.element({"0", "11"});
  CHECK(tree_element_from_record(m, to_record(e)) == e);
}

TEST_CASE("malformed records are parse errors") {
  CHECK_THROWS_AS(parse_record("{\"kind\": "), ParseError);
  CHECK_THROWS_AS(record_kind(parse_record("[1, 2]")), ParseError);
  CHECK_THROWS_AS(record_kind(parse_record(R"({"kind": "nosuch"})")), ParseError);
  CHECK_THROWS_AS(bpa_from_record(parse_record(R"({"algebra": {"atoms": 3}, "generators": [[[0, 1], [1, 2]]]})")),
                  ParseError);
  CHECK_THROWS_AS(bpa_from_record(parse_record(R"({"algebra": {"atoms": 3}, "generators": [[[0, 1]]]})")),
                  ParseError);
  CHECK_THROWS_AS(bpa_from_record(parse_record(R"({"algebra": {"atoms": 99}, "generators": []})")), ParseError);
  CHECK_THROWS_AS(bpa_from_record(parse_record(R"({"algebra": {"atoms": 2}})")), ParseError);
  CHECK_THROWS_AS(space_from_record(parse_record(R"({"points": "four", "crevasses": []})")), ParseError);
  CHECK_THROWS_AS(map_from_record(parse_record(R"({"kind": "map"})")), ParseError);
  CHECK_THROWS_AS(tree_from_record(parse_record(R"({"branching": [1]})")), ParseError);
  CHECK_THROWS_AS(branch_from_record(parse_record(R"({"prefix": "x", "period": "0"})")), ParseError);
}
