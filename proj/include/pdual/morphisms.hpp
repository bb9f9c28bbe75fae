#pragma once

// Partitional maps and partition homomorphisms between Boolean partition
// algebras.

#include <span>
#include <vector>

#include "pdual/boolean_core.hpp"
#include "pdual/partition_algebra.hpp"

namespace pdual {

/// f''(p) minus {0}, as a set.
std::vector<Element> nonzero_image(const FunctionTable& f, const Partition& p);

/// f is a homomorphism and f''(p) minus {0} is a partition of the target for
/// every member p. Checked on the base of the filter: a homomorphism sends a
/// coarsening of the base to a coarsening of the base's image.
bool is_partitional(const FunctionTable& f, const Bpa& source, const Algebra& target);

/// f is a homomorphism and f''(p) minus {0} lies in the target filter for every
/// member p. Checked on the generators.
bool is_partition_hom(const FunctionTable& f, const Bpa& source, const Bpa& target);

/// The same predicates with the quantifier ranging over every filter member.
/// Used to validate the reductions above.
bool is_partitional_unreduced(const FunctionTable& f, const Bpa& source, const Algebra& target);
bool is_partition_hom_unreduced(const FunctionTable& f, const Bpa& source, const Bpa& target);

/// f(0) = 0 and (f(a))_{a in p} is an extended partition for every member p.
/// f need not be a homomorphism.
bool partitional_via_extended(const FunctionTable& f, const Bpa& source);

class PartitionHom {
 public:
  /// Throws NotAPartitionHom unless is_partition_hom(table, source, target).
  static PartitionHom make(FunctionTable table, Bpa source, Bpa target);
  /// A partitional map, i.e. a partition hom into the full algebra on target.
  static PartitionHom partitional(FunctionTable table, Bpa source, const Algebra& target);
  static PartitionHom identity(const Bpa& bpa);

  const FunctionTable& table() const noexcept { return table_; }
  const Bpa& source() const noexcept { return source_; }
  const Bpa& target() const noexcept { return target_; }

  Element operator()(const Element& x) const { return table_(x); }

  friend bool operator==(const PartitionHom& a, const PartitionHom& b) {
    return a.table_ == b.table_;
  }

 private:
  PartitionHom(FunctionTable table, Bpa source, Bpa target)
      : table_(std::move(table)), source_(std::move(source)), target_(std::move(target)) {}

  FunctionTable table_;
  Bpa source_;
  Bpa target_;
};

/// g o f. Throws AlgebraMismatch unless g's source algebra is f's target, and
/// ConsistencyError if the composite fails the partition-hom check.
PartitionHom compose(const PartitionHom& f, const PartitionHom& g);

/// Every Boolean homomorphism between two finite algebras. A homomorphism is
/// fixed by sending each target atom to the source atom whose image contains it.
std::vector<FunctionTable> enumerate_homomorphisms(const Algebra& source, const Algebra& target);

}  // namespace pdual
