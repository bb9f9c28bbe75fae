#include <algorithm>

#include "check.hpp"
#include "pdual/duality.hpp"

namespace pdual::verify {

Json encode_tuple(const PartitionTuple& t) {
  Json parts = Json::array();
  for (const auto& p : t.parts) parts.push_back(to_record(p));
  return Json{{"algebra", to_record(t.algebra)}, {"partitions", std::move(parts)}};
}

PartitionTuple decode_tuple(const Json& j) {
  const Algebra algebra = algebra_from_record(j.at("algebra"));
  PartitionTuple t{algebra, {}};
  for (const auto& p : j.at("partitions")) t.parts.push_back(partition_from_record(algebra, p));
  return t;
}

Json encode_chain(const MorphismChain& c) {
  Json links = Json::array();
  for (const auto& m : c.links) links.push_back(to_record(m));
  return Json{{"chain", std::move(links)}};
}

MorphismChain decode_chain(const Json& j) {
  MorphismChain c;
  for (const auto& m : j.at("chain")) c.links.push_back(morphism_from_record(m));
  return c;
}

Json encode_chain(const MapChain& c) {
  Json links = Json::array();
  for (const auto& m : c.links) links.push_back(to_record(m));
  return Json{{"chain", std::move(links)}};
}

MapChain decode_map_chain(const Json& j) {
  MapChain c;
  for (const auto& m : j.at("chain")) c.links.push_back(map_from_record(m));
  return c;
}

std::vector<Bpa> principal_bpas(int max_atoms) {
  std::vector<Bpa> out;
  for (int n = 1; n <= max_atoms; ++n) {
    const Algebra algebra(n);
    for (const auto& p : enumerate_partitions(algebra)) out.emplace_back(PartitionFilter(algebra, {p}));
  }
  return out;
}

std::vector<PartitionSpace> principal_spaces(int max_points) {
  std::vector<PartitionSpace> out;
  for (int n = 1; n <= max_points; ++n) {
    for (const auto& p : enumerate_partitions(Algebra(n))) out.emplace_back(n, std::vector{p});
  }
  return out;
}

std::vector<Bpa> full_bpas(int max_atoms) {
  std::vector<Bpa> out;
  for (int n = 1; n <= max_atoms; ++n) out.push_back(make_full_bpa(Algebra(n)));
  return out;
}

std::vector<PartitionHom> full_partition_homs(int max_atoms) {
  std::vector<PartitionHom> out;
  for (const auto& a : full_bpas(max_atoms)) {
    for (const auto& b : full_bpas(max_atoms)) {
      for (auto& f : enumerate_homomorphisms(a.algebra, b.algebra)) {
        if (is_partition_hom(f, a, b)) out.push_back(PartitionHom::make(std::move(f), a, b));
      }
    }
  }
  return out;
}

std::vector<UniformMap> uniform_maps(int max_points) {
  std::vector<UniformMap> out;
  const auto spaces = principal_spaces(max_points);
  for (const auto& x : spaces) {
    for (const auto& y : spaces) {
      std::vector<int> table(static_cast<std::size_t>(x.points()), 0);
      while (true) {
        UniformMap f(x, y, table);
        if (is_uniformly_continuous(f)) out.push_back(std::move(f));
        std::size_t i = 0;
        while (i < table.size() && ++table[i] == y.points()) table[i++] = 0;
        if (i == table.size()) break;
      }
    }
  }
  return out;
}

}  // namespace pdual::verify
