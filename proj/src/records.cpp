#include "pdual/records.hpp"

#include <algorithm>

#include "pdual/errors.hpp"

namespace pdual {

namespace {

template <class Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  } catch (const Error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected an object with key '" + std::string(key) + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError("missing key '" + std::string(key) + "'");
  return *it;
}

int integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  return j;
}

std::vector<Partition> partitions_from(const Algebra& algebra, const Json& j, const char* what) {
  std::vector<Partition> out;
  for (const auto& p : array(j, what)) out.push_back(partition_from_record(algebra, p));
  return out;
}

}  // namespace

RecordKind record_kind(const Json& j) {
  if (!j.is_object()) throw ParseError("a record is a JSON object");
  if (auto it = j.find("kind"); it != j.end()) {
    const std::string k = it->is_string() ? it->get<std::string>() : "";
    if (k == "bpa") return RecordKind::Bpa;
    if (k == "space") return RecordKind::Space;
    if (k == "morphism") return RecordKind::Morphism;
    if (k == "map") return RecordKind::Map;
    if (k == "tree") return RecordKind::Tree;
    if (k == "branch") return RecordKind::Branch;
    throw ParseError("unknown record kind");
  }
  if (j.contains("generators")) return RecordKind::Bpa;
  if (j.contains("crevasses")) return RecordKind::Space;
  if (j.contains("branching")) return RecordKind::Tree;
  if (j.contains("period")) return RecordKind::Branch;
  if (j.contains("source") && j.contains("table")) {
    return field(j, "source").contains("points") ? RecordKind::Map : RecordKind::Morphism;
  }
  throw ParseError("cannot tell the record kind");
}

std::string kind_name(RecordKind kind) {
  switch (kind) {
    case RecordKind::Bpa:
      return "bpa";
    case RecordKind::Space:
      return "space";
    case RecordKind::Morphism:
      return "morphism";
    case RecordKind::Map:
      return "map";
    case RecordKind::Tree:
      return "tree";
    case RecordKind::Branch:
      return "branch";
  }
  return "";
}

Json parse_record(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Json to_record(const Algebra& a) { return Json{{"atoms", a.atoms()}}; }

Algebra algebra_from_record(const Json& j) {
  return guarded("algebra", [&] { return Algebra(integer(field(j, "atoms"), "atoms")); });
}

Json to_record(const Element& x) {
  Json out = Json::array();
  for (int a : x.atom_list()) out.push_back(a);
  return out;
}

Element element_from_record(const Algebra& algebra, const Json& j) {
  return guarded("element", [&] {
    Mask bits = 0;
    for (const auto& a : array(j, "element")) {
      const int i = integer(a, "atom");
      if (i < 0 || i >= algebra.atoms()) throw ParseError("atom " + std::to_string(i) + " out of range");
      if ((bits >> i) & 1U) throw ParseError("atom " + std::to_string(i) + " repeated");
      bits |= Mask{1} << i;
    }
    return algebra.element(bits);
  });
}

Json to_record(const CellularFamily& p) {
  Json out = Json::array();
  for (const auto& b : p.elements()) out.push_back(to_record(b));
  return out;
}

Partition partition_from_record(const Algebra& algebra, const Json& j) {
  return guarded("partition", [&] {
    std::vector<Mask> blocks;
    for (const auto& b : array(j, "partition")) {
      blocks.push_back(element_from_record(algebra, b).bits());
    }
    return Partition::make(algebra, std::move(blocks));
  });
}

Json to_record(const FunctionTable& f) {
  Json out = Json::array();
  for (const auto& x : f.source().elements()) out.push_back(Json::array({to_record(x), to_record(f(x))}));
  return out;
}

FunctionTable table_from_record(const Algebra& source, const Algebra& target, const Json& j) {
  return guarded("table", [&] {
    std::vector<Mask> images(source.size(), 0);
    std::vector<bool> seen(source.size(), false);
    for (const auto& row : array(j, "table")) {
      if (!row.is_array() || row.size() != 2) throw ParseError("table rows are [input, output] pairs");
      const Element x = element_from_record(source, row[0]);
      if (seen[x.bits()]) throw ParseError("input " + to_string(x) + " listed twice");
      seen[x.bits()] = true;
      images[x.bits()] = element_from_record(target, row[1]).bits();
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
      throw ParseError("table does not list every source element");
    }
    return FunctionTable(source, target, std::move(images));
  });
}

Json to_record(const Bpa& b) {
  Json gens = Json::array();
  for (const auto& g : b.filter.generators()) gens.push_back(to_record(g));
  return Json{{"kind", "bpa"}, {"algebra", to_record(b.algebra)}, {"generators", std::move(gens)}};
}

Bpa bpa_from_record(const Json& j) {
  return guarded("bpa", [&] {
    const Algebra algebra = algebra_from_record(field(j, "algebra"));
    return Bpa(PartitionFilter(algebra, partitions_from(algebra, field(j, "generators"), "generators")));
  });
}

Json to_record(const PartitionSpace& x) {
  Json crevasses = Json::array();
  for (const auto& g : x.crevasses().generators()) crevasses.push_back(to_record(g));
  return Json{{"kind", "space"}, {"points", x.points()}, {"crevasses", std::move(crevasses)}};
}

PartitionSpace space_from_record(const Json& j) {
  return guarded("space", [&] {
    const int points = integer(field(j, "points"), "points");
    const Algebra algebra(points);
    return PartitionSpace(points, partitions_from(algebra, field(j, "crevasses"), "crevasses"));
  });
}

Json to_record(const MorphismRecord& m) {
  return Json{{"kind", "morphism"},
              {"source", to_record(m.source)},
              {"target", to_record(m.target)},
              {"table", to_record(m.table)}};
}

Json to_record(const PartitionHom& f) {
  return to_record(MorphismRecord{f.source(), f.target(), f.table()});
}

MorphismRecord morphism_from_record(const Json& j) {
  return guarded("morphism", [&] {
    Bpa source = bpa_from_record(field(j, "source"));
    Bpa target = bpa_from_record(field(j, "target"));
    FunctionTable table = table_from_record(source.algebra, target.algebra, field(j, "table"));
    return MorphismRecord{std::move(source), std::move(target), std::move(table)};
  });
}

Json to_record(const UniformMap& f) {
  Json table = Json::array();
  for (int y : f.table()) table.push_back(y);
  return Json{{"kind", "map"},
              {"source", to_record(f.source())},
              {"target", to_record(f.target())},
              {"table", std::move(table)}};
}

UniformMap map_from_record(const Json& j) {
  return guarded("map", [&] {
    std::vector<int> table;
    for (const auto& y : array(field(j, "table"), "table")) table.push_back(integer(y, "map value"));
    return UniformMap(space_from_record(field(j, "source")), space_from_record(field(j, "target")),
                      std::move(table));
  });
}

Json to_record(const Branch& b) { return Json{{"prefix", b.prefix()}, {"period", b.period()}}; }

Branch branch_from_record(const Json& j) {
  return guarded("branch", [&] {
    const auto& prefix = field(j, "prefix");
    const auto& period = field(j, "period");
    if (!prefix.is_string() || !period.is_string()) throw ParseError("branch words are strings");
    return Branch(prefix.get<std::string>(), period.get<std::string>());
  });
}

Json to_record(const TreeModel& t) {
  Json subspace;
  if (t.subspace().kind == SubspaceKind::Explicit) {
    subspace = Json::array();
    for (const auto& m : t.subspace().members) subspace.push_back(to_record(m));
  } else {
    subspace = t.subspace().name();
  }
  return Json{{"kind", "tree"},
              {"branching", t.branching()},
              {"depth_bound", t.depth_bound()},
              {"subspace", std::move(subspace)}};
}

TreeModel tree_from_record(const Json& j) {
  return guarded("tree", [&] {
    std::vector<int> branching;
    for (const auto& b : array(field(j, "branching"), "branching")) {
      branching.push_back(integer(b, "fan-out"));
    }
    int depth_bound = TreeModel::kDefaultDepthBound;
    if (j.contains("depth_bound")) depth_bound = integer(j["depth_bound"], "depth_bound");
    Subspace subspace;
    if (j.contains("subspace")) {
      const auto& s = j["subspace"];
      if (s.is_array()) {
        std::vector<Branch> members;
        for (const auto& m : s) members.push_back(branch_from_record(m));
        subspace = Subspace::explicit_list(std::move(members));
      } else if (s == "all") {
        subspace = Subspace::all();
      } else if (s == "eventually-zero") {
        subspace = Subspace::eventually_zero();
      } else if (s == "finitely-many-ones") {
        subspace = Subspace::finitely_many_ones();
      } else {
        throw ParseError("unknown subspace");
      }
    }
    return TreeModel(std::move(branching), depth_bound, std::move(subspace));
  });
}

Json to_record(const TreeElement& e) {
  Json out = Json::array();
  for (const auto& n : e.nodes()) out.push_back(n);
  return out;
}

TreeElement tree_element_from_record(const TreeModel& model, const Json& j) {
  return guarded("tree element", [&] {
    std::vector<std::string> nodes;
    for (const auto& n : array(j, "tree element")) {
      if (!n.is_string()) throw ParseError("nodes are strings");
      nodes.push_back(n.get<std::string>());
    }
    return model.element(std::move(nodes));
  });
}

}  // namespace pdual
