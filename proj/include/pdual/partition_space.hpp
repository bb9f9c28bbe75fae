#pragma once

// Partition spaces: a finite point set with a filter of set partitions
// (crevasses). A partition of the points is a partition of the powerset
// algebra whose atoms are the points.

#include <vector>

#include "pdual/boolean_core.hpp"
#include "pdual/partition_algebra.hpp"
#include "pdual/partition_lattice.hpp"

namespace pdual {

class PartitionSpace {
 public:
  /// Points are labeled 0..points-1. No generators means the single crevasse {X}.
  PartitionSpace(int points, std::vector<Partition> crevasses);

  int points() const noexcept { return algebra_.atoms(); }
  const Algebra& algebra() const noexcept { return algebra_; }
  const PartitionFilter& crevasses() const noexcept { return crevasses_; }

  /// The block of p containing point x.
  Element block_of(const Partition& p, int x) const;

  friend bool operator==(const PartitionSpace& a, const PartitionSpace& b) {
    return a.algebra_ == b.algebra_ && a.crevasses_.base() == b.crevasses_.base();
  }

 private:
  Algebra algebra_;
  PartitionFilter crevasses_;
};

/// A total map between the point sets of two spaces.
class UniformMap {
 public:
  /// Throws InvalidInput unless the table is total and lands in the target.
  UniformMap(PartitionSpace source, PartitionSpace target, std::vector<int> table);
  static UniformMap identity(const PartitionSpace& space);

  const PartitionSpace& source() const noexcept { return source_; }
  const PartitionSpace& target() const noexcept { return target_; }
  std::span<const int> table() const noexcept { return table_; }
  int operator()(int x) const { return table_.at(static_cast<std::size_t>(x)); }

  /// f_{-1}(R) for a subset R of the target.
  Element preimage(const Element& r) const;
  /// {f_{-1}(R) : R in q} minus the empty set.
  Partition preimage(const Partition& q) const;

  bool is_injective() const;
  bool is_surjective() const;

  friend bool operator==(const UniformMap& a, const UniformMap& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.table_ == b.table_;
  }

 private:
  PartitionSpace source_;
  PartitionSpace target_;
  std::vector<int> table_;
};

/// Apply f, then g. Throws InvalidInput unless f's target is g's source.
UniformMap then(const UniformMap& f, const UniformMap& g);

/// Distinct points lie in distinct blocks of some crevasse.
bool is_separating(const PartitionSpace& x);

/// The preimage of every target crevasse is a crevasse of the source; checked
/// on the target's generators.
bool is_uniformly_continuous(const UniformMap& f);

/// Every coherent selection of crevasse blocks, stored on the generators.
std::vector<InverseLimitPoint> coherent_points(const PartitionSpace& x);

/// Separating, and every coherent point is realized by a point lying in each
/// selected block.
bool is_complete(const PartitionSpace& x);

/// B*(X, M): the subalgebra {0} u UM of the powerset of the points, paired with M.
InducedBpa space_algebra(const PartitionSpace& x);

/// C(x): the ultrafilter of B*(X, M) of the elements containing x.
/// Throws InvalidInput if x is not a point.
FUltrafilter c_map(const PartitionSpace& space, int x);

}  // namespace pdual
