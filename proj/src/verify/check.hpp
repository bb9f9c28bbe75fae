#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "pdual/errors.hpp"
#include "pdual/verify.hpp"

namespace pdual::verify {

struct CheckDef {
  std::string name;
  std::function<CheckResult(const SuiteBounds&)> run;
  std::function<bool(const Json&)> fails_on;
};

template <class I>
using Sweep = std::function<void(const SuiteBounds&, const std::function<void(const I&)>&)>;

/// A check is a sweep over instances, a predicate, and a record codec for the
/// instance. A predicate that throws counts as a failure.
template <class I>
CheckDef make_check(std::string name, Sweep<I> sweep, std::function<bool(const I&)> holds,
                     std::function<Json(const I&)> encode, std::function<I(const Json&)> decode) {
  CheckDef def;
  def.name = name;
  def.run = [name, sweep, holds, encode](const SuiteBounds& bounds) {
    CheckResult result;
    result.name = name;
    sweep(bounds, [&](const I& instance) {
      ++result.instances;
      bool ok = false;
      std::string error;
      try {
        ok = holds(instance);
      } catch (const Error& e) {
        error = e.what();
      }
      if (ok) return;
      ++result.failures;
      if (!result.counterexample) {
        Json record{{"check", name}, {"instance", encode(instance)}};
        if (!error.empty()) record["error"] = error;
        result.counterexample = std::move(record);
      }
    });
    return result;
  };
  def.fails_on = [holds, decode](const Json& instance) {
    const I decoded = decode(instance);
    try {
      return !holds(decoded);
    } catch (const Error&) {
      return true;
    }
  };
  return def;
}

std::vector<CheckDef> lattice_checks();
std::vector<CheckDef> bpa_checks();
std::vector<CheckDef> hom_checks();
std::vector<CheckDef> duality_checks();
std::vector<CheckDef> tree_checks();

// Shared instance shapes and their records.

struct PartitionTuple {
  Algebra algebra;
  std::vector<Partition> parts;
};
Json encode_tuple(const PartitionTuple& t);
PartitionTuple decode_tuple(const Json& j);

struct MorphismChain {
  std::vector<MorphismRecord> links;
};
Json encode_chain(const MorphismChain& c);
MorphismChain decode_chain(const Json& j);

struct MapChain {
  std::vector<UniformMap> links;
};
Json encode_chain(const MapChain& c);
MapChain decode_map_chain(const Json& j);

/// Principal-filter BPAs on 1..max atoms, in order of atom count then base.
std::vector<Bpa> principal_bpas(int max_atoms);
/// Spaces on 1..max points with one crevasse each.
std::vector<PartitionSpace> principal_spaces(int max_points);
/// The full BPAs on 1..max atoms.
std::vector<Bpa> full_bpas(int max_atoms);
/// Every partition hom between two full BPAs on 1..max atoms.
std::vector<PartitionHom> full_partition_homs(int max_atoms);
/// Every uniformly continuous map between principal spaces on 1..max points.
std::vector<UniformMap> uniform_maps(int max_points);

}  // namespace pdual::verify
