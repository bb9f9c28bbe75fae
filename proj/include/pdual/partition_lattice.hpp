#pragma once

// Cellular families and partitions of a finite algebra, the refinement order
// with its coarsening maps, partition meets and the embedding of the block
// powerset of a subcomplete partition.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pdual/boolean_core.hpp"

namespace pdual {

/// Pairwise disjoint nonzero elements. Blocks are kept sorted by their least
/// atom, so equality is structural.
class CellularFamily {
 public:
  /// Throws InvalidInput if a block is zero, out of range, or overlaps another.
  static CellularFamily make(const Algebra& algebra, std::vector<Mask> blocks);
  static CellularFamily make(std::span<const Element> blocks, const Algebra& algebra);

  const Algebra& algebra() const noexcept { return algebra_; }
  std::span<const Mask> blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  Element block(std::size_t i) const { return algebra_.element(blocks_.at(i)); }
  std::vector<Element> elements() const;
  Element join() const;

  /// Index of the unique block lying above x, if any. x must be nonzero.
  std::optional<std::size_t> block_above(Mask x) const;
  bool has_block(Mask x) const;

  friend bool operator==(const CellularFamily&, const CellularFamily&) = default;
  friend auto operator<=>(const CellularFamily&, const CellularFamily&) = default;

 protected:
  CellularFamily(Algebra algebra, std::vector<Mask> sorted_blocks)
      : algebra_(algebra), blocks_(std::move(sorted_blocks)) {}

 private:
  Algebra algebra_;
  std::vector<Mask> blocks_;
};

/// A cellular family joining to 1.
class Partition : public CellularFamily {
 public:
  static Partition make(const Algebra& algebra, std::vector<Mask> blocks);
  static Partition make(std::span<const Element> blocks, const Algebra& algebra);
  /// {1}
  static Partition top(const Algebra& algebra);
  /// The partition into atoms.
  static Partition atoms(const Algebra& algebra);

  /// Index of the block containing atom a.
  std::size_t block_of_atom(int a) const;

 private:
  explicit Partition(CellularFamily family) : CellularFamily(std::move(family)) {}
};

std::string to_string(const CellularFamily& family);

bool is_cellular(std::span<const Element> family);
bool is_partition(std::span<const Element> family);

/// Greedy maximal extension: leftover atoms are appended as singleton blocks in
/// ascending order. In a finite powerset algebra the result is a partition.
/// Throws InvalidInput if the input is not cellular.
Partition extend_to_maximal_cellular(std::span<const Element> family);
Partition extend_to_maximal_cellular(const CellularFamily& family);

/// A <= B: every block of A lies below some block of B.
bool refines(const CellularFamily& a, const CellularFamily& b);

/// The assignment of each source block to the unique target block above it.
class CoarseningMap {
 public:
  const CellularFamily& source() const noexcept { return source_; }
  const CellularFamily& target() const noexcept { return target_; }
  std::span<const std::size_t> assignment() const noexcept { return assignment_; }

  /// Image of a source block.
  Element operator()(const Element& block) const;

  friend bool operator==(const CoarseningMap&, const CoarseningMap&) = default;

 private:
  friend CoarseningMap coarsening_map(const CellularFamily&, const CellularFamily&);
  friend CoarseningMap then(const CoarseningMap&, const CoarseningMap&);
  CoarseningMap(CellularFamily s, CellularFamily t, std::vector<std::size_t> assignment)
      : source_(std::move(s)), target_(std::move(t)), assignment_(std::move(assignment)) {}

  CellularFamily source_;
  CellularFamily target_;
  std::vector<std::size_t> assignment_;
};

/// Throws RefinementError unless refines(a, b).
CoarseningMap coarsening_map(const CellularFamily& a, const CellularFamily& b);
/// Apply f, then g. Throws RefinementError if f's target is not g's source.
CoarseningMap then(const CoarseningMap& f, const CoarseningMap& g);

/// {p ^ q : p in P, q in Q, p ^ q != 0}
Partition meet(const Partition& p, const Partition& q);
Partition meet_all(const Algebra& algebra, std::span<const Partition> family);

/// Every subset of blocks has a join. Always true in a finite algebra.
bool is_subcomplete(const Partition& p);

/// R -> join(R) from the powerset of the blocks of a (block i is atom i of the
/// source) into the algebra of a.
FunctionTable subcomplete_embedding(const Partition& a);

/// All partitions in restricted-growth-string order.
std::vector<Partition> enumerate_partitions(const Algebra& algebra);
/// All cellular families, including the empty one.
std::vector<CellularFamily> enumerate_cellular_families(const Algebra& algebra);
/// Every partition q with p <= q.
std::vector<Partition> coarsenings(const Partition& p);

std::uint64_t bell_number(int n);

/// Set partitions of {0..n-1} as restricted growth strings.
std::vector<std::vector<int>> restricted_growth_strings(int n);

}  // namespace pdual
