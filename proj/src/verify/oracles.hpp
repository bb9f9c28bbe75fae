#pragma once

// Brute-force reference computations. They go back to the definitions and
// share no code paths with the library functions they are compared against.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pdual/partition_algebra.hpp"
#include "pdual/partition_space.hpp"

namespace pdual::oracle {

/// Partitions as sorted block-mask vectors, by choosing the block of the least
/// uncovered atom among all masks.
std::vector<std::vector<Mask>> partitions(int atoms);

/// The partition r with r <= p, r <= q and s <= r for every common lower bound
/// s, searched over all partitions.
std::optional<std::vector<Mask>> greatest_lower_bound(int atoms, const std::vector<Mask>& p,
                                                      const std::vector<Mask>& q);

/// Every block of a lies inside some block of b, by atom sets.
bool refines(const std::vector<Mask>& a, const std::vector<Mask>& b);

/// No nonzero element outside the family can be added keeping it cellular.
bool is_maximal_cellular(int atoms, const std::vector<Mask>& family);

/// The filter members, by testing every partition against the base.
std::vector<std::vector<Mask>> members(const Bpa& bpa);

struct Validity {
  bool complement_pairs = false;
  bool covers_elements = false;
  bool all_finite_partitions = false;
};
Validity validity(const Bpa& bpa);

/// A subset of the elements of an algebra with at most 5 atoms, as a bitset
/// indexed by element mask.
using ElementSet = std::uint64_t;

/// Is the set an ultrafilter meeting every member in exactly one block?
bool is_f_ultrafilter(const Bpa& bpa, ElementSet set);

/// Every F-ultrafilter, found by testing every subset of the algebra
/// (algebras with at most 4 atoms).
std::vector<ElementSet> f_ultrafilters(const Bpa& bpa);

/// Every choice of one block per member that is consistent along all
/// refinements between members, with a nonzero meet.
std::vector<std::vector<Mask>> coherent_selections(const Bpa& bpa,
                                                   const std::vector<std::vector<Mask>>& members);

/// Boolean homomorphism via atoms: 0 -> 0, atom images partition 1 (zeros
/// allowed), and every element goes to the join of its atoms' images.
bool is_homomorphism(const FunctionTable& f);

/// Two points are separated by some member.
bool is_separating(const PartitionSpace& x);

/// Separated, and every Cauchy filter converges. On a finite set every filter
/// is generated by a nonempty subset S; it is Cauchy iff S lies in one block of
/// each member and converges to x iff S lies in every block containing x.
bool is_complete(const PartitionSpace& x);

}  // namespace pdual::oracle
