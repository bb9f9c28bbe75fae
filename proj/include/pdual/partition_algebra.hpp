#pragma once

// Boolean partition algebras: an algebra paired with a filter of partitions.
// Filters on a finite partition lattice are principal, so a filter is stored as
// a generator set together with the meet of its generators (the base); a
// partition is a member iff the base refines it.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "pdual/boolean_core.hpp"
#include "pdual/partition_lattice.hpp"

namespace pdual {

class PartitionFilter {
 public:
  /// An empty generator set yields the filter generated by {1}.
  PartitionFilter(Algebra algebra, std::vector<Partition> generators);

  const Algebra& algebra() const noexcept { return algebra_; }
  std::span<const Partition> generators() const noexcept { return generators_; }
  /// Meet of all generators; the least member.
  const Partition& base() const noexcept { return base_; }

  bool contains(const Partition& p) const;
  /// Every member, i.e. every coarsening of the base.
  std::vector<Partition> members() const;

  /// A member having x as a block, if one exists ({1} for x = 1, {x, x'} otherwise).
  std::optional<Partition> member_with_block(const Element& x) const;

 private:
  Algebra algebra_;
  std::vector<Partition> generators_;
  Partition base_;
};

/// Throws InvalidInput if a generator belongs to another algebra.
PartitionFilter filter_from_generators(const Algebra& algebra, std::vector<Partition> generators);
bool filter_contains(const PartitionFilter& filter, const Partition& p);

/// An algebra paired with a filter of partitions. The pair need not satisfy the
/// partition-algebra condition; validate_bpa reports on it.
struct Bpa {
  Algebra algebra;
  PartitionFilter filter;

  explicit Bpa(PartitionFilter f) : algebra(f.algebra()), filter(std::move(f)) {}

  /// Every member of the filter is subcomplete; by upward closure it suffices
  /// to check the base.
  bool subcomplete() const { return is_subcomplete(filter.base()); }
};

struct ValidityReport {
  /// {b, b'} is a member for every b outside {0, 1}.
  bool complement_pairs = false;
  /// Every nonzero element is a block of some member.
  bool covers_elements = false;
  /// Every finite partition is a member.
  bool all_finite_partitions = false;
  /// First element witnessing a failure of complement_pairs.
  std::optional<Element> witness;

  bool all() const { return complement_pairs && covers_elements && all_finite_partitions; }
  bool agree() const {
    return complement_pairs == covers_elements && covers_elements == all_finite_partitions;
  }
};

/// Evaluates the three conditions independently.
ValidityReport validate_bpa(const Bpa& bpa);

enum class PartitionBound { Finite, All };
/// The algebra with every partition of size below the bound. In a finite
/// algebra both bounds give every partition.
Bpa make_full_bpa(const Algebra& algebra, PartitionBound bound = PartitionBound::All);

/// A subalgebra presented on its own atoms, with the image of each atom in the
/// parent algebra.
class Subalgebra {
 public:
  Subalgebra(Algebra parent, std::vector<Mask> atom_images);

  const Algebra& parent() const noexcept { return parent_; }
  const Algebra& algebra() const noexcept { return algebra_; }
  std::span<const Mask> atom_images() const noexcept { return atom_images_; }

  Element to_parent(const Element& x) const;
  /// nullopt unless x is a union of atom images.
  std::optional<Element> from_parent(const Element& x) const;
  /// Throws InvalidInput unless every block is a union of atom images.
  Partition partition_from_parent(const Partition& p) const;
  Partition partition_to_parent(const Partition& p) const;

  friend bool operator==(const Subalgebra&, const Subalgebra&) = default;

 private:
  Algebra parent_;
  Algebra algebra_;
  std::vector<Mask> atom_images_;
};

/// ({0} u UF, F) normalized onto its atoms, with the embedding into the parent.
struct InducedBpa {
  Bpa bpa;
  Subalgebra embedding;
};

/// The subalgebra {0} u UF paired with F. The result always satisfies the
/// partition-algebra condition.
InducedBpa induced_bpa(const Algebra& algebra, const PartitionFilter& filter);

/// An ultrafilter on a finite algebra, held by its least member (an atom).
class FUltrafilter {
 public:
  static FUltrafilter principal(const Element& atom);
  /// Builds the ultrafilter from an explicit membership test over all
  /// elements. Throws NotAnFUltrafilter if the set is not an ultrafilter.
  static FUltrafilter from_membership(const Algebra& algebra,
                                      const std::function<bool(const Element&)>& member);

  const Algebra algebra() const { return least_.algebra(); }
  const Element& least() const noexcept { return least_; }
  int atom() const;
  bool contains(const Element& b) const { return leq(least_, b); }

  friend bool operator==(const FUltrafilter&, const FUltrafilter&) = default;
  friend auto operator<=>(const FUltrafilter&, const FUltrafilter&) = default;

 private:
  explicit FUltrafilter(Element least) : least_(least) {}
  Element least_;
};

/// True iff member describes an ultrafilter meeting every generator of the
/// filter (hence every member) in exactly one block.
bool is_f_ultrafilter(const Bpa& bpa, const std::function<bool(const Element&)>& member);

/// The spectrum S*(B,F) (also written S_F(B)), ordered by atom index.
/// Throws ValidityError if the pair is not a Boolean partition algebra.
std::vector<FUltrafilter> enumerate_f_ultrafilters(const Bpa& bpa);

/// A choice of one block in each partition of a support set. The point extends
/// to every partition coarsening the support's meet: its value there is the
/// block containing the core (the meet of all chosen blocks).
class InverseLimitPoint {
 public:
  /// Throws InvalidInput unless selection[i] is a block of support[i].
  InverseLimitPoint(std::vector<Partition> support, std::vector<Mask> selection);

  std::span<const Partition> support() const noexcept { return support_; }
  std::span<const Mask> selection() const noexcept { return selection_; }

  Element core() const;
  /// Chosen blocks agree along every coarsening map inside the support, and the
  /// core is nonzero.
  bool coherent() const noexcept { return coherent_; }
  /// Value at p. Throws CoherenceError for an incoherent point, InvalidInput if
  /// the core is not below a block of p.
  Element at(const Partition& p) const;

 private:
  bool compute_coherence() const;

  std::vector<Partition> support_;
  std::vector<Mask> selection_;
  bool coherent_ = false;
};

/// Every coherent selection on the filter's generators.
std::vector<InverseLimitPoint> coherent_selections(const PartitionFilter& filter);

/// L: the set {x_P : P in F}; throws CoherenceError for an incoherent point.
FUltrafilter limit_to_ultrafilter(const Bpa& bpa, const InverseLimitPoint& x);

/// M: P -> the unique block of P in U, stored on the generators. Throws
/// NotAnFUltrafilter if some generator meets U in zero or several blocks.
InverseLimitPoint ultrafilter_to_limit(const Bpa& bpa, const FUltrafilter& u);
InverseLimitPoint ultrafilter_to_limit(const Bpa& bpa,
                                       const std::function<bool(const Element&)>& member);

struct StabilityReport {
  /// Every nonzero b is x_p for some coherent x and member p.
  bool definition = false;
  /// Every projection lim F -> p is onto.
  bool projections_surjective = false;
  /// The union of the spectrum is B minus {0}.
  bool union_is_nonzero = false;
  /// The intersection of the spectrum is {1}.
  bool intersection_is_top = false;
  bool empty_spectrum = false;

  bool stable() const {
    return definition && projections_surjective && union_is_nonzero && intersection_is_top;
  }
  bool agree() const {
    return definition == projections_surjective && projections_surjective == union_is_nonzero &&
           union_is_nonzero == intersection_is_top;
  }
};

/// The four conditions evaluated independently. Projections are checked on
/// every member when the base has at most kMaxEnumeratedBlocks blocks and on
/// the base and generators otherwise (every member coarsens the base, and a
/// coarsening map is onto).
StabilityReport stability_report(const Bpa& bpa);
inline constexpr std::size_t kMaxEnumeratedBlocks = 10;

/// iota(a) as an element of the powerset of the spectrum (bit i <-> spectrum[i]).
Element iota(std::span<const FUltrafilter> spectrum, const Element& a);
/// iota''(p) minus the empty set, a partition of the spectrum.
Partition iota_image(std::span<const FUltrafilter> spectrum, const Partition& p);

}  // namespace pdual
