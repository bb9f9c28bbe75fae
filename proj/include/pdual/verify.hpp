#pragma once

// Exhaustive and bounded-depth checks of every law the library relies on,
// grouped into suites. Each check sweeps a family of instances; on failure it
// keeps the first failing instance as a record that can be replayed.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdual/records.hpp"

namespace pdual {

struct SuiteBounds {
  /// Algebras on 1..max_atoms atoms (lattice and bpa suites).
  int max_atoms = 4;
  /// Spaces on 1..max_points points (duality suite).
  int max_points = 4;
  /// Objects on 1..max_morphism_size atoms or points for checks over pairs and
  /// triples of morphisms.
  int max_morphism_size = 3;
  /// Probe depth for the tree suite.
  int depth = 8;
};

inline constexpr int kMaxSuiteAtoms = 5;
inline constexpr int kMaxSuitePoints = 5;
inline constexpr int kMaxSuiteMorphismSize = 3;
inline constexpr int kMaxSuiteDepth = 12;

struct CheckResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  /// {"check": name, "instance": record, "error": message?}
  std::optional<Json> counterexample;
  bool passed() const { return failures == 0; }
};

struct SuiteReport {
  std::string suite;
  SuiteBounds bounds;
  std::vector<CheckResult> checks;
  double seconds = 0;
  bool passed() const;
  std::size_t instances() const;
};

/// lattice, bpa, hom, duality, tree.
const std::vector<std::string>& suite_names();

/// Checks run in a fixed order. Throws MisuseError for an unknown suite or
/// bounds outside the caps above.
SuiteReport run_suite(std::string_view name, const SuiteBounds& bounds);

/// Evaluates the named check on the instance of a counterexample record;
/// true iff the check fails there. Throws MisuseError for an unknown check and
/// ParseError for a malformed instance.
bool replay_fails(const Json& counterexample);

Json to_record(const SuiteReport& report);
/// One line per check, then a summary line.
std::string to_text(const SuiteReport& report);

}  // namespace pdual
