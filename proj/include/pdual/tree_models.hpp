#pragma once

// Finitely presented infinite examples: the algebra generated by the nodes of
// a finitely branching tree, with the filter generated by the level partitions.
//
// Nodes are digit strings ("" is the root, "01" the second child of the first
// child). An element is a reduced antichain of nodes standing for the union of
// their cylinders. Branches are eventually periodic words.

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pdual/duality.hpp"
#include "pdual/partition_algebra.hpp"
#include "pdual/partition_space.hpp"

namespace pdual {

/// prefix followed by period repeated forever, stored in canonical form (the
/// period is primitive and the prefix does not end in the period's last letter),
/// so equal branches compare equal.
class Branch {
 public:
  /// Throws InvalidInput unless both words are digit strings and the period is
  /// nonempty.
  Branch(std::string prefix, std::string period);

  const std::string& prefix() const noexcept { return prefix_; }
  const std::string& period() const noexcept { return period_; }
  /// Letter at position i (0-based).
  int letter(std::size_t i) const;
  /// The first depth letters.
  std::string node(std::size_t depth) const;

  friend bool operator==(const Branch&, const Branch&) = default;
  friend auto operator<=>(const Branch&, const Branch&) = default;

 private:
  std::string prefix_;
  std::string period_;
};

/// "10(0)" for the branch 1 0 0 0 ...
std::string to_string(const Branch& b);

/// Index of the first letter where two branches differ, or nullopt if equal.
std::optional<std::size_t> first_difference(const Branch& a, const Branch& b);

enum class SubspaceKind { All, EventuallyZero, FinitelyManyOnes, Explicit };

struct Subspace {
  SubspaceKind kind = SubspaceKind::All;
  /// Explicit lists only; sorted and free of duplicates.
  std::vector<Branch> members;

  static Subspace all() { return {}; }
  static Subspace eventually_zero() { return {SubspaceKind::EventuallyZero, {}}; }
  static Subspace finitely_many_ones() { return {SubspaceKind::FinitelyManyOnes, {}}; }
  static Subspace explicit_list(std::vector<Branch> branches);

  bool contains(const Branch& b) const;
  /// "all", "eventually-zero", "finitely-many-ones" or "explicit".
  std::string name() const;
};

class TreeElement {
 public:
  std::span<const std::string> nodes() const noexcept { return nodes_; }
  bool is_zero() const noexcept { return nodes_.empty(); }
  bool is_one() const noexcept { return nodes_.size() == 1 && nodes_[0].empty(); }

  friend bool operator==(const TreeElement&, const TreeElement&) = default;
  friend auto operator<=>(const TreeElement&, const TreeElement&) = default;

 private:
  friend class TreeModel;
  explicit TreeElement(std::vector<std::string> nodes) : nodes_(std::move(nodes)) {}
  std::vector<std::string> nodes_;
};

/// "{}" for 0, "{*}" for 1, otherwise "{0,10}".
std::string to_string(const TreeElement& e);

class TreePartition;

class TreeModel {
 public:
  static constexpr int kDefaultDepthBound = 12;
  /// Largest level a model may reach through its depth bound.
  static constexpr std::size_t kMaxLevelSize = std::size_t{1} << 16;

  /// The fan-out at depth k is branching[k % branching.size()]. Throws
  /// InvalidInput for an empty rule, a fan-out outside 2..10, a negative depth
  /// bound or an explicit member that is not a branch; CapacityError if the
  /// level at the depth bound exceeds kMaxLevelSize.
  TreeModel(std::vector<int> branching, int depth_bound = kDefaultDepthBound,
            Subspace subspace = Subspace::all());

  const std::vector<int>& branching() const noexcept { return branching_; }
  int depth_bound() const noexcept { return depth_bound_; }
  const Subspace& subspace() const noexcept { return subspace_; }

  int fan_out(std::size_t depth) const { return branching_[depth % branching_.size()]; }
  std::size_t level_size(int depth) const;
  /// Level-depth nodes in lexicographic order.
  std::vector<std::string> level_nodes(int depth) const;
  bool is_node(std::string_view w) const;
  bool is_branch(const Branch& b) const;

  TreeElement zero() const { return TreeElement({}); }
  TreeElement one() const { return TreeElement({""}); }
  /// The cylinder of a single node. Throws InvalidInput if w is not a node.
  TreeElement node(std::string_view w) const;
  /// Union of the cylinders of the given nodes, reduced.
  TreeElement element(std::vector<std::string> nodes) const;

  TreeElement meet(const TreeElement& a, const TreeElement& b) const;
  TreeElement join(const TreeElement& a, const TreeElement& b) const;
  TreeElement complement(const TreeElement& a) const;
  bool leq(const TreeElement& a, const TreeElement& b) const;
  bool contains(const TreeElement& e, const Branch& b) const;

  /// Length of the longest node in e.
  int depth(const TreeElement& e) const;
  /// The level-depth nodes below e. Throws InvalidInput if depth < depth(e).
  std::vector<std::string> expand(const TreeElement& e, int depth) const;
  TreePartition level_partition(int k) const;

  friend bool operator==(const TreeModel& a, const TreeModel& b) {
    return a.branching_ == b.branching_ && a.depth_bound_ == b.depth_bound_ &&
           a.subspace_.kind == b.subspace_.kind && a.subspace_.members == b.subspace_.members;
  }

 private:
  enum class Cover { Empty, Full, Partial };
  static Cover cover(std::span<const std::string> s, const std::string& w);
  std::vector<std::string> combine(std::span<const std::string> a, std::span<const std::string> b,
                                   bool (*op)(bool, bool), const std::string& w) const;

  std::vector<int> branching_;
  int depth_bound_;
  Subspace subspace_;
};

/// The partition into annuli around a spine: block j is the cylinder of the
/// spine's node at depth j*group minus the cylinder at depth (j+1)*group.
struct Comb {
  Branch spine;
  int group = 1;
  friend bool operator==(const Comb&, const Comb&) = default;
};

/// A partition of the tree algebra: finitely many blocks, or a comb (infinitely
/// many blocks, none of which contains the spine).
class TreePartition {
 public:
  /// Throws InvalidInput unless the blocks are nonzero, pairwise disjoint and
  /// join to 1.
  static TreePartition finite(const TreeModel& model, std::vector<TreeElement> blocks);
  /// Throws InvalidInput unless the spine is a branch and group >= 1.
  static TreePartition comb(const TreeModel& model, Branch spine, int group);

  bool is_finite() const noexcept { return !comb_.has_value(); }
  /// Sorted blocks of a finite partition. Throws MisuseError for a comb.
  std::span<const TreeElement> blocks() const;
  /// Throws MisuseError for a finite partition.
  const Comb& comb_data() const;

  friend bool operator==(const TreePartition&, const TreePartition&) = default;

 private:
  friend class TreeModel;
  TreePartition(std::vector<TreeElement> blocks, std::optional<Comb> comb)
      : blocks_(std::move(blocks)), comb_(std::move(comb)) {}
  std::vector<TreeElement> blocks_;
  std::optional<Comb> comb_;
};

/// Block j of a comb.
TreeElement annulus(const TreeModel& model, const Comb& comb, int j);

/// p <= q: every block of p lies below some block of q.
bool refines(const TreeModel& model, const TreePartition& p, const TreePartition& q);

/// Every subset of blocks has a join in the node algebra. True for finite
/// partitions; false for combs (see comb_join and smaller_upper_bound).
bool is_subcomplete(const TreeModel& model, const TreePartition& p);

/// A set of comb blocks is described by a 0/1 branch: block j is selected iff
/// letter j is 1. The join exists in the node algebra iff the selection is
/// finite or cofinite.
std::optional<TreeElement> comb_join(const TreeModel& model, const Comb& comb,
                                     const Branch& selection);
/// u contains every selected block.
bool is_upper_bound(const TreeModel& model, const Comb& comb, const Branch& selection,
                    const TreeElement& u);
/// A strictly smaller upper bound of the selection, or nullopt if u is the
/// join. Throws MisuseError if u is not an upper bound.
std::optional<TreeElement> smaller_upper_bound(const TreeModel& model, const Comb& comb,
                                               const Branch& selection, const TreeElement& u);

/// Membership of a finite partition in the filter generated by the level
/// partitions: some p_k refines q. Combs are never members.
bool level_filter_contains(const TreeModel& model, const TreePartition& q);

struct TreeValidityReport {
  bool complement_pairs = false;
  bool covers_elements = false;
  bool all_finite_partitions = false;
  std::size_t elements_checked = 0;
  std::size_t partitions_checked = 0;
  std::optional<TreeElement> witness;
  bool all() const { return complement_pairs && covers_elements && all_finite_partitions; }
};

/// The three partition-algebra conditions, checked on every element and every
/// finite partition built from nodes of depth at most sample_depth.
TreeValidityReport validate_tree_bpa(const TreeModel& model, int sample_depth = 3);

/// The ultrafilter of elements whose antichain meets the path of a branch.
class BranchUltrafilter {
 public:
  const Branch& branch() const noexcept { return branch_; }
  bool contains(const TreeElement& e) const;
  /// The selected block of p_k.
  std::string selection(int k) const { return branch_.node(static_cast<std::size_t>(k)); }

 private:
  friend BranchUltrafilter branch_ultrafilter(const TreeModel&, const Branch&);
  explicit BranchUltrafilter(Branch b) : branch_(std::move(b)) {}
  Branch branch_;
};

/// Throws InvalidInput if b is not a branch of the tree.
BranchUltrafilter branch_ultrafilter(const TreeModel& model, const Branch& b);

/// For an ultrafilter given by membership, the unique node of each level
/// 0..depth it contains. Throws NotAnFUltrafilter if some level meets it in
/// zero or several nodes.
std::vector<std::string> level_selection(const TreeModel& model,
                                         const std::function<bool(const TreeElement&)>& member,
                                         int depth);

struct Representative {
  std::string node;
  Branch branch;
};

/// One subspace member through each level-depth node that has one: node
/// followed by zeros for the named subspaces, the least explicit member
/// otherwise. Throws DepthOverflow beyond the depth bound.
std::vector<Representative> representatives(const TreeModel& model, int depth);

enum class CrevasseReading {
  /// Crevasses generated by the traces of p_0..p_d.
  LevelGenerated,
  /// Every partition coarsening the finest trace.
  Saturated,
};

struct Truncation {
  int depth = 0;
  /// Atom i of the algebra is the cylinder of nodes[i].
  std::vector<std::string> nodes;
  Bpa bpa;
  /// Point i of the space is points[i].
  std::vector<Representative> points;
  PartitionSpace space;
};

/// The finite image at depth d. Throws DepthOverflow beyond the depth bound and
/// CapacityError if level d has more than 16 nodes (or, for the saturated
/// reading, more than kMaxEnumeratedBlocks points).
Truncation truncate(const TreeModel& model, int depth,
                    CrevasseReading reading = CrevasseReading::LevelGenerated);

/// The embedding of the depth-coarse algebra into the depth-fine one (a node
/// goes to the set of its descendants).
PartitionHom level_embedding(const TreeModel& model, int coarse, int fine);

/// Every level-d node contains a subspace member. Throws DepthOverflow.
bool density_check(const TreeModel& model, int depth);

struct Divergence {
  Branch representative;
  /// First depth k at which the level-k nodes differ.
  std::size_t depth = 0;
};

struct ProbeReport {
  Branch target;
  int depth = 0;
  std::vector<Divergence> divergences;
  /// Always true: divergence of finitely many representatives is evidence,
  /// not a proof of non-surjectivity.
  bool bounded_evidence = true;
  std::string note;
};

/// For each subspace representative at depth d (every member, for explicit
/// lists), the depth at which it leaves the path of target. Throws MisuseError
/// if target lies in the subspace, InvalidInput if it is not a branch,
/// DepthOverflow beyond the depth bound.
ProbeReport nonsurjectivity_probe(const TreeModel& model, const Branch& target, int depth);

struct TreeCompleteness {
  bool complete = false;
  /// A coherent point with no subspace member above it.
  std::optional<Branch> unrealized;
  std::optional<ProbeReport> probe;
  std::string note;
};

/// Completeness of the subspace as a partition space. The named proper
/// subspaces report the all-ones point as unrealized, with bounded evidence.
TreeCompleteness tree_is_complete(const TreeModel& model, int depth);

struct LevelCompletion {
  int depth = 0;
  std::size_t points = 0;
  std::size_t level_nodes = 0;
  /// Distinct points have distinct images at this depth.
  bool injective = false;
  /// Every level node is hit.
  bool covers_level = false;
  bool bijective() const { return injective && covers_level; }
};

struct TreeCompletionReport {
  std::vector<LevelCompletion> levels;
  bool uniformly_continuous = false;
  bool dense = false;
  bool embedding = false;
  /// Established only when the subspace is complete.
  bool homeomorphism = false;
  TreeCompleteness completeness;
};

/// The completion map into the all-branches model, level by level up to depth.
TreeCompletionReport tree_completion(const TreeModel& model, int depth);

}  // namespace pdual
