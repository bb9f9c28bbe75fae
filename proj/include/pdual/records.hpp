#pragma once

// JSON records for every object the CLI reads or writes.
//
//   algebra    {"atoms": 4}
//   element    [0, 2]                      (atom list)
//   partition  [[0, 1], [2, 3]]
//   bpa        {"kind": "bpa", "algebra": {"atoms": 4}, "generators": [partition, ...]}
//   space      {"kind": "space", "points": 4, "crevasses": [partition, ...]}
//   morphism   {"kind": "morphism", "source": bpa, "target": bpa, "table": [[element, element], ...]}
//   map        {"kind": "map", "source": space, "target": space, "table": [y0, y1, ...]}
//   tree       {"kind": "tree", "branching": [2], "depth_bound": 12, "subspace": "eventually-zero"}
//   branch     {"prefix": "10", "period": "0"}
//
// "kind" is optional on input. Unknown keys are ignored. Every reader throws
// ParseError, including for records that describe an ill-formed object.

#include <string>
#include <string_view>

#include <json.hpp>

#include "pdual/boolean_core.hpp"
#include "pdual/morphisms.hpp"
#include "pdual/partition_algebra.hpp"
#include "pdual/partition_lattice.hpp"
#include "pdual/partition_space.hpp"
#include "pdual/tree_models.hpp"

namespace pdual {

using Json = nlohmann::ordered_json;

enum class RecordKind { Bpa, Space, Morphism, Map, Tree, Branch };

RecordKind record_kind(const Json& j);
std::string kind_name(RecordKind kind);

/// Throws ParseError on malformed JSON text.
Json parse_record(std::string_view text);

Json to_record(const Algebra& a);
Algebra algebra_from_record(const Json& j);

Json to_record(const Element& x);
Element element_from_record(const Algebra& algebra, const Json& j);

Json to_record(const CellularFamily& p);
Partition partition_from_record(const Algebra& algebra, const Json& j);

/// Every source element paired with its image.
Json to_record(const FunctionTable& f);
FunctionTable table_from_record(const Algebra& source, const Algebra& target, const Json& j);

Json to_record(const Bpa& b);
Bpa bpa_from_record(const Json& j);

Json to_record(const PartitionSpace& x);
PartitionSpace space_from_record(const Json& j);

/// A table between two BPAs that need not be a partition homomorphism.
struct MorphismRecord {
  Bpa source;
  Bpa target;
  FunctionTable table;
};

Json to_record(const MorphismRecord& m);
Json to_record(const PartitionHom& f);
MorphismRecord morphism_from_record(const Json& j);

Json to_record(const UniformMap& f);
UniformMap map_from_record(const Json& j);

Json to_record(const Branch& b);
Branch branch_from_record(const Json& j);

Json to_record(const TreeModel& t);
TreeModel tree_from_record(const Json& j);

Json to_record(const TreeElement& e);
TreeElement tree_element_from_record(const TreeModel& model, const Json& j);

}  // namespace pdual
