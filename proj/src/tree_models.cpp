#include "pdual/tree_models.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "pdual/errors.hpp"

namespace pdual {

namespace {

bool is_digit_word(const std::string& w) {
  return std::all_of(w.begin(), w.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string primitive_root(const std::string& w) {
  for (std::size_t len = 1; len < w.size(); ++len) {
    if (w.size() % len != 0) continue;
    bool repeats = true;
    for (std::size_t i = len; i < w.size() && repeats; ++i) repeats = w[i] == w[i - len];
    if (repeats) return w.substr(0, len);
  }
  return w;
}

bool is_prefix(const std::string& p, const std::string& w) {
  return p.size() <= w.size() && w.compare(0, p.size(), p) == 0;
}

bool op_and(bool a, bool b) { return a && b; }
bool op_or(bool a, bool b) { return a || b; }
bool op_not_first(bool a, bool) { return !a; }

void require_depth(const TreeModel& model, int depth) {
  if (depth < 0) throw InvalidInput("negative depth");
  if (depth > model.depth_bound()) {
    throw DepthOverflow("depth " + std::to_string(depth) + " exceeds the depth bound " +
                        std::to_string(model.depth_bound()));
  }
}

// Smallest j with j * group >= depth.
int first_deep_annulus(int depth, int group) { return (depth + group - 1) / group; }

void require_selection(const Branch& selection) {
  const auto binary = [](const std::string& w) {
    return std::all_of(w.begin(), w.end(), [](char c) { return c == '0' || c == '1'; });
  };
  if (!binary(selection.prefix()) || !binary(selection.period())) {
    throw InvalidInput("a block selection uses the letters 0 and 1 only");
  }
}

}  // namespace

Branch::Branch(std::string prefix, std::string period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
  if (period_.empty()) throw InvalidInput("branch period is empty");
  if (!is_digit_word(prefix_) || !is_digit_word(period_)) {
    throw InvalidInput("branch words must be digit strings");
  }
  period_ = primitive_root(period_);
  while (!prefix_.empty() && prefix_.back() == period_.back()) {
    prefix_.pop_back();
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
  }
}

int Branch::letter(std::size_t i) const {
  const char c = i < prefix_.size() ? prefix_[i] : period_[(i - prefix_.size()) % period_.size()];
  return c - '0';
}

std::string Branch::node(std::size_t depth) const {
  std::string out;
  out.reserve(depth);
  for (std::size_t i = 0; i < depth; ++i) out.push_back(static_cast<char>('0' + letter(i)));
  return out;
}

std::string to_string(const Branch& b) { return b.prefix() + "(" + b.period() + ")"; }

std::optional<std::size_t> first_difference(const Branch& a, const Branch& b) {
  if (a == b) return std::nullopt;
  const std::size_t bound = std::max(a.prefix().size(), b.prefix().size()) +
                            std::lcm(a.period().size(), b.period().size());
  for (std::size_t i = 0; i < bound; ++i) {
    if (a.letter(i) != b.letter(i)) return i;
  }
  throw ConsistencyError("distinct canonical branches agree everywhere");
}

Subspace Subspace::explicit_list(std::vector<Branch> branches) {
  if (branches.empty()) throw InvalidInput("explicit subspace is empty");
  std::sort(branches.begin(), branches.end());
  branches.erase(std::unique(branches.begin(), branches.end()), branches.end());
  return {SubspaceKind::Explicit, std::move(branches)};
}

bool Subspace::contains(const Branch& b) const {
  switch (kind) {
    case SubspaceKind::All:
      return true;
    case SubspaceKind::EventuallyZero:
      return b.period() == "0";
    case SubspaceKind::FinitelyManyOnes:
      return b.period().find('1') == std::string::npos;
    case SubspaceKind::Explicit:
      return std::binary_search(members.begin(), members.end(), b);
  }
  return false;
}

std::string Subspace::name() const {
  switch (kind) {
    case SubspaceKind::All:
      return "all";
    case SubspaceKind::EventuallyZero:
      return "eventually-zero";
    case SubspaceKind::FinitelyManyOnes:
      return "finitely-many-ones";
    case SubspaceKind::Explicit:
      return "explicit";
  }
  return "";
}

std::string to_string(const TreeElement& e) {
  std::string out = "{";
  bool first = true;
  for (const auto& n : e.nodes()) {
    if (!first) out += ',';
    out += n.empty() ? "*" : n;
    first = false;
  }
  return out + "}";
}

TreeModel::TreeModel(std::vector<int> branching, int depth_bound, Subspace subspace)
    : branching_(std::move(branching)), depth_bound_(depth_bound), subspace_(std::move(subspace)) {
  if (branching_.empty()) throw InvalidInput("empty branching rule");
  for (int b : branching_) {
    if (b < 2 || b > 10) throw InvalidInput("fan-out must lie in 2..10");
  }
  if (depth_bound_ < 0) throw InvalidInput("negative depth bound");
  if (level_size(depth_bound_) > kMaxLevelSize) {
    throw CapacityError("level at the depth bound has more than " +
                        std::to_string(kMaxLevelSize) + " nodes");
  }
  for (const auto& m : subspace_.members) {
    if (!is_branch(m)) throw InvalidInput("explicit member " + to_string(m) + " is not a branch");
  }
}

std::size_t TreeModel::level_size(int depth) const {
  if (depth < 0) throw InvalidInput("negative depth");
  std::size_t n = 1;
  for (int k = 0; k < depth; ++k) {
    const auto f = static_cast<std::size_t>(fan_out(static_cast<std::size_t>(k)));
    if (n > std::numeric_limits<std::size_t>::max() / f) return std::numeric_limits<std::size_t>::max();
    n *= f;
  }
  return n;
}

std::vector<std::string> TreeModel::level_nodes(int depth) const {
  if (level_size(depth) > kMaxLevelSize) throw CapacityError("level too large to list");
  std::vector<std::string> level{""};
  for (int k = 0; k < depth; ++k) {
    std::vector<std::string> next;
    next.reserve(level.size() * static_cast<std::size_t>(fan_out(static_cast<std::size_t>(k))));
    for (const auto& w : level) {
      for (int c = 0; c < fan_out(static_cast<std::size_t>(k)); ++c) {
        next.push_back(w + static_cast<char>('0' + c));
      }
    }
    level = std::move(next);
  }
  return level;
}

bool TreeModel::is_node(std::string_view w) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < '0' || w[i] - '0' >= fan_out(i)) return false;
  }
  return true;
}

bool TreeModel::is_branch(const Branch& b) const {
  const std::size_t span = b.prefix().size() + std::lcm(b.period().size(), branching_.size());
  for (std::size_t i = 0; i < span; ++i) {
    if (b.letter(i) >= fan_out(i)) return false;
  }
  return true;
}

TreeElement TreeModel::node(std::string_view w) const {
  if (!is_node(w)) throw InvalidInput("'" + std::string(w) + "' is not a node");
  return TreeElement({std::string(w)});
}

TreeElement TreeModel::element(std::vector<std::string> nodes) const {
  for (const auto& w : nodes) {
    if (!is_node(w)) throw InvalidInput("'" + w + "' is not a node");
  }
  return TreeElement(combine(nodes, {}, op_or, ""));
}

TreeModel::Cover TreeModel::cover(std::span<const std::string> s, const std::string& w) {
  bool partial = false;
  for (const auto& n : s) {
    if (is_prefix(n, w)) return Cover::Full;
    if (is_prefix(w, n)) partial = true;
  }
  return partial ? Cover::Partial : Cover::Empty;
}

std::vector<std::string> TreeModel::combine(std::span<const std::string> a,
                                            std::span<const std::string> b, bool (*op)(bool, bool),
                                            const std::string& w) const {
  const Cover ca = cover(a, w);
  const Cover cb = cover(b, w);
  if (ca != Cover::Partial && cb != Cover::Partial) {
    if (op(ca == Cover::Full, cb == Cover::Full)) return {w};
    return {};
  }
  std::vector<std::string> out;
  bool all_full = true;
  for (int c = 0; c < fan_out(w.size()); ++c) {
    const std::string child = w + static_cast<char>('0' + c);
    auto sub = combine(a, b, op, child);
    all_full = all_full && sub.size() == 1 && sub[0] == child;
    out.insert(out.end(), std::make_move_iterator(sub.begin()), std::make_move_iterator(sub.end()));
  }
  if (all_full) return {w};
  return out;
}

TreeElement TreeModel::meet(const TreeElement& a, const TreeElement& b) const {
  return TreeElement(combine(a.nodes(), b.nodes(), op_and, ""));
}

TreeElement TreeModel::join(const TreeElement& a, const TreeElement& b) const {
  return TreeElement(combine(a.nodes(), b.nodes(), op_or, ""));
}

TreeElement TreeModel::complement(const TreeElement& a) const {
  return TreeElement(combine(a.nodes(), a.nodes(), op_not_first, ""));
}

bool TreeModel::leq(const TreeElement& a, const TreeElement& b) const { return meet(a, b) == a; }

bool TreeModel::contains(const TreeElement& e, const Branch& b) const {
  return std::any_of(e.nodes().begin(), e.nodes().end(),
                     [&](const std::string& n) { return b.node(n.size()) == n; });
}

int TreeModel::depth(const TreeElement& e) const {
  std::size_t d = 0;
  for (const auto& n : e.nodes()) d = std::max(d, n.size());
  return static_cast<int>(d);
}

std::vector<std::string> TreeModel::expand(const TreeElement& e, int depth) const {
  if (depth < this->depth(e)) throw InvalidInput("expansion depth below the element's depth");
  std::vector<std::string> out;
  for (const auto& n : e.nodes()) {
    std::vector<std::string> frontier{n};
    for (auto k = n.size(); k < static_cast<std::size_t>(depth); ++k) {
      std::vector<std::string> next;
      for (const auto& w : frontier) {
        for (int c = 0; c < fan_out(k); ++c) next.push_back(w + static_cast<char>('0' + c));
      }
      frontier = std::move(next);
    }
    out.insert(out.end(), frontier.begin(), frontier.end());
  }
  return out;
}

TreePartition TreeModel::level_partition(int k) const {
  std::vector<TreeElement> blocks;
  for (auto& w : level_nodes(k)) blocks.push_back(TreeElement({std::move(w)}));
  return TreePartition(std::move(blocks), std::nullopt);
}

TreePartition TreePartition::finite(const TreeModel& model, std::vector<TreeElement> blocks) {
  if (blocks.empty()) throw InvalidInput("a partition has at least one block");
  std::vector<std::string> all_nodes;
  for (const auto& b : blocks) {
    if (b.is_zero()) throw InvalidInput("partition block is zero");
    if (model.element(std::vector<std::string>(b.nodes().begin(), b.nodes().end())) != b) {
      throw InvalidInput("partition block is not a reduced element");
    }
    all_nodes.insert(all_nodes.end(), b.nodes().begin(), b.nodes().end());
  }
  // Within a block the nodes form an antichain, so an overlap between blocks
  // shows up as a prefix relation between neighbours in sorted order.
  std::sort(all_nodes.begin(), all_nodes.end());
  for (std::size_t i = 1; i < all_nodes.size(); ++i) {
    if (is_prefix(all_nodes[i - 1], all_nodes[i])) throw InvalidInput("partition blocks overlap");
  }
  if (!model.element(all_nodes).is_one()) throw InvalidInput("partition blocks do not join to 1");
  std::sort(blocks.begin(), blocks.end());
  return TreePartition(std::move(blocks), std::nullopt);
}

TreePartition TreePartition::comb(const TreeModel& model, Branch spine, int group) {
  if (group < 1) throw InvalidInput("comb group must be at least 1");
  if (!model.is_branch(spine)) throw InvalidInput("comb spine is not a branch");
  return TreePartition({}, Comb{std::move(spine), group});
}

std::span<const TreeElement> TreePartition::blocks() const {
  if (comb_) throw MisuseError("a comb has infinitely many blocks");
  return blocks_;
}

const Comb& TreePartition::comb_data() const {
  if (!comb_) throw MisuseError("not a comb");
  return *comb_;
}

TreeElement annulus(const TreeModel& model, const Comb& comb, int j) {
  if (j < 0) throw InvalidInput("negative annulus index");
  const auto inner = static_cast<std::size_t>(j) * static_cast<std::size_t>(comb.group);
  const auto outer = inner + static_cast<std::size_t>(comb.group);
  return model.meet(model.node(comb.spine.node(inner)),
                    model.complement(model.node(comb.spine.node(outer))));
}

bool refines(const TreeModel& model, const TreePartition& p, const TreePartition& q) {
  const auto below_some_block = [&](const TreeElement& x) {
    const auto blocks = q.blocks();
    return std::any_of(blocks.begin(), blocks.end(),
                       [&](const TreeElement& b) { return model.leq(x, b); });
  };
  if (p.is_finite() && q.is_finite()) {
    const auto blocks = p.blocks();
    return std::all_of(blocks.begin(), blocks.end(), below_some_block);
  }
  if (p.is_finite()) return false;
  const Comb& c = p.comb_data();
  if (!q.is_finite()) {
    const Comb& d = q.comb_data();
    return c.spine == d.spine && d.group % c.group == 0;
  }
  int depth = 0;
  for (const auto& b : q.blocks()) depth = std::max(depth, model.depth(b));
  const int last = first_deep_annulus(depth, c.group);
  for (int j = 0; j <= last; ++j) {
    if (!below_some_block(annulus(model, c, j))) return false;
  }
  return true;
}

bool is_subcomplete(const TreeModel&, const TreePartition& p) { return p.is_finite(); }

std::optional<TreeElement> comb_join(const TreeModel& model, const Comb& comb,
                                     const Branch& selection) {
  require_selection(selection);
  if (selection.period() != "0" && selection.period() != "1") return std::nullopt;
  const auto tail = static_cast<int>(selection.prefix().size());
  TreeElement out = model.zero();
  for (int j = 0; j < tail; ++j) {
    if (selection.letter(static_cast<std::size_t>(j)) == 1) out = model.join(out, annulus(model, comb, j));
  }
  if (selection.period() == "1") {
    const auto d = static_cast<std::size_t>(tail) * static_cast<std::size_t>(comb.group);
    out = model.join(out, model.node(comb.spine.node(d)));
  }
  return out;
}

bool is_upper_bound(const TreeModel& model, const Comb& comb, const Branch& selection,
                    const TreeElement& u) {
  require_selection(selection);
  const int deep = first_deep_annulus(model.depth(u), comb.group);
  for (int j = 0; j < deep; ++j) {
    if (selection.letter(static_cast<std::size_t>(j)) == 1 && !model.leq(annulus(model, comb, j), u)) {
      return false;
    }
  }
  // Annuli from index deep on lie in one level cylinder of u's depth, which is
  // inside u exactly when the spine is.
  const auto horizon =
      static_cast<std::size_t>(deep) + selection.prefix().size() + selection.period().size();
  bool deep_selected = false;
  for (auto j = static_cast<std::size_t>(deep); j < horizon && !deep_selected; ++j) {
    deep_selected = selection.letter(j) == 1;
  }
  return !deep_selected || model.contains(u, comb.spine);
}

std::optional<TreeElement> smaller_upper_bound(const TreeModel& model, const Comb& comb,
                                               const Branch& selection, const TreeElement& u) {
  if (!is_upper_bound(model, comb, selection, u)) throw MisuseError("not an upper bound");
  if (auto j = comb_join(model, comb, selection)) {
    if (*j == u) return std::nullopt;
    return j;
  }
  const int deep = first_deep_annulus(model.depth(u), comb.group);
  const auto horizon =
      static_cast<std::size_t>(deep) + selection.prefix().size() + selection.period().size();
  for (auto j = static_cast<std::size_t>(deep); j < horizon; ++j) {
    if (selection.letter(j) == 0) {
      return model.meet(u, model.complement(annulus(model, comb, static_cast<int>(j))));
    }
  }
  throw ConsistencyError("selection without a join has no unselected deep annulus");
}

bool level_filter_contains(const TreeModel& model, const TreePartition& q) {
  if (!q.is_finite()) return false;
  int depth = 0;
  for (const auto& b : q.blocks()) depth = std::max(depth, model.depth(b));
  for (int k = 0; k <= depth; ++k) {
    if (refines(model, model.level_partition(k), q)) return true;
  }
  return false;
}

TreeValidityReport validate_tree_bpa(const TreeModel& model, int sample_depth) {
  if (sample_depth < 0) throw InvalidInput("negative sample depth");
  const auto nodes = model.level_nodes(sample_depth);
  if (nodes.size() > kMaxEnumeratedBlocks) throw CapacityError("sample level too large");
  TreeValidityReport report;
  report.complement_pairs = true;
  report.covers_elements = true;
  report.all_finite_partitions = true;

  const Mask subsets = Mask{1} << nodes.size();
  for (Mask m = 0; m < subsets; ++m) {
    std::vector<std::string> chosen;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if ((m >> i) & 1U) chosen.push_back(nodes[i]);
    }
    const TreeElement b = model.element(std::move(chosen));
    ++report.elements_checked;
    if (b.is_zero()) continue;
    if (!b.is_one()) {
      const auto pair = TreePartition::finite(model, {b, model.complement(b)});
      if (!level_filter_contains(model, pair) && report.complement_pairs) {
        report.complement_pairs = false;
        report.witness = b;
      }
    }
    std::vector<TreeElement> blocks{b};
    for (const auto& w : model.level_nodes(model.depth(b))) {
      const TreeElement n = model.node(w);
      if (model.meet(n, b).is_zero()) blocks.push_back(n);
    }
    if (!level_filter_contains(model, TreePartition::finite(model, std::move(blocks)))) {
      report.covers_elements = false;
    }
  }

  for (const auto& rgs : restricted_growth_strings(static_cast<int>(nodes.size()))) {
    const int count = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<std::string>> groups(static_cast<std::size_t>(count));
    for (std::size_t i = 0; i < rgs.size(); ++i) groups[rgs[i]].push_back(nodes[i]);
    std::vector<TreeElement> blocks;
    for (auto& g : groups) blocks.push_back(model.element(std::move(g)));
    ++report.partitions_checked;
    if (!level_filter_contains(model, TreePartition::finite(model, std::move(blocks)))) {
      report.all_finite_partitions = false;
    }
  }
  return report;
}

bool BranchUltrafilter::contains(const TreeElement& e) const {
  return std::any_of(e.nodes().begin(), e.nodes().end(),
                     [&](const std::string& n) { return branch_.node(n.size()) == n; });
}

BranchUltrafilter branch_ultrafilter(const TreeModel& model, const Branch& b) {
  if (!model.is_branch(b)) throw InvalidInput(to_string(b) + " is not a branch of the tree");
  return BranchUltrafilter(b);
}

std::vector<std::string> level_selection(const TreeModel& model,
                                         const std::function<bool(const TreeElement&)>& member,
                                         int depth) {
  std::vector<std::string> out;
  for (int k = 0; k <= depth; ++k) {
    std::vector<std::string> hits;
    for (const auto& w : model.level_nodes(k)) {
      if (member(model.node(w))) hits.push_back(w);
    }
    if (hits.size() != 1) {
      throw NotAnFUltrafilter("level " + std::to_string(k) + " meets the set in " +
                              std::to_string(hits.size()) + " nodes");
    }
    out.push_back(hits.front());
  }
  return out;
}

std::vector<Representative> representatives(const TreeModel& model, int depth) {
  require_depth(model, depth);
  std::vector<Representative> out;
  if (model.subspace().kind == SubspaceKind::Explicit) {
    std::map<std::string, Branch> first;
    for (const auto& m : model.subspace().members) {
      first.try_emplace(m.node(static_cast<std::size_t>(depth)), m);
    }
    for (auto& [w, b] : first) out.push_back({w, b});
    return out;
  }
  for (auto& w : model.level_nodes(depth)) {
    Branch b(w, "0");
    out.push_back({std::move(w), std::move(b)});
  }
  return out;
}

Truncation truncate(const TreeModel& model, int depth, CrevasseReading reading) {
  require_depth(model, depth);
  if (model.level_size(depth) > static_cast<std::size_t>(kMaxAtoms)) {
    throw CapacityError("level " + std::to_string(depth) + " has more than " +
                        std::to_string(kMaxAtoms) + " nodes");
  }
  const auto nodes = model.level_nodes(depth);
  const Algebra algebra(static_cast<int>(nodes.size()));
  const auto trace = [](const auto& labels, int k) {
    std::map<std::string, Mask> blocks;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      blocks[labels[i].substr(0, static_cast<std::size_t>(k))] |= Mask{1} << i;
    }
    std::vector<Mask> out;
    for (const auto& [w, m] : blocks) out.push_back(m);
    return out;
  };
  std::vector<Partition> generators;
  for (int k = 1; k <= depth; ++k) generators.push_back(Partition::make(algebra, trace(nodes, k)));

  auto reps = representatives(model, depth);
  std::vector<std::string> labels;
  for (const auto& r : reps) labels.push_back(r.branch.node(static_cast<std::size_t>(depth)));
  const Algebra points(static_cast<int>(reps.size()));
  std::vector<Partition> crevasses;
  if (reading == CrevasseReading::LevelGenerated) {
    for (int k = 1; k <= depth; ++k) crevasses.push_back(Partition::make(points, trace(labels, k)));
  } else {
    if (reps.size() > kMaxEnumeratedBlocks) {
      throw CapacityError("too many points for the saturated reading");
    }
    crevasses = coarsenings(Partition::make(points, trace(labels, depth)));
  }
  return Truncation{depth,
                    nodes,
                    Bpa(PartitionFilter(algebra, std::move(generators))),
                    std::move(reps),
                    PartitionSpace(points.atoms(), std::move(crevasses))};
}

PartitionHom level_embedding(const TreeModel& model, int coarse, int fine) {
  if (coarse < 0 || coarse > fine) throw InvalidInput("level embedding needs coarse <= fine");
  const Truncation a = truncate(model, coarse);
  const Truncation b = truncate(model, fine);
  std::vector<Mask> below(a.nodes.size(), 0);
  for (std::size_t i = 0; i < b.nodes.size(); ++i) {
    const std::string up = b.nodes[i].substr(0, static_cast<std::size_t>(coarse));
    const auto it = std::find(a.nodes.begin(), a.nodes.end(), up);
    below[static_cast<std::size_t>(it - a.nodes.begin())] |= Mask{1} << i;
  }
  auto table = FunctionTable::from_function(a.bpa.algebra, b.bpa.algebra, [&](const Element& x) {
    Mask out = 0;
    for (int i : x.atom_list()) out |= below[static_cast<std::size_t>(i)];
    return b.bpa.algebra.element(out);
  });
  return PartitionHom::make(std::move(table), a.bpa, b.bpa);
}

bool density_check(const TreeModel& model, int depth) {
  return representatives(model, depth).size() == model.level_size(depth);
}

ProbeReport nonsurjectivity_probe(const TreeModel& model, const Branch& target, int depth) {
  if (!model.is_branch(target)) throw InvalidInput(to_string(target) + " is not a branch");
  if (model.subspace().contains(target)) {
    throw MisuseError(to_string(target) + " lies in the " + model.subspace().name() + " subspace");
  }
  require_depth(model, depth);
  ProbeReport report{target, depth, {}, true,
                     "bounded evidence: each representative leaves the target path at the listed "
                     "depth; this is not a proof that no point reaches the target"};
  std::vector<Branch> witnesses;
  if (model.subspace().kind == SubspaceKind::Explicit) {
    witnesses = model.subspace().members;
  } else {
    for (auto& r : representatives(model, depth)) witnesses.push_back(std::move(r.branch));
  }
  for (auto& w : witnesses) {
    const auto diff = first_difference(w, target);
    if (!diff) throw ConsistencyError("a subspace member equals a branch outside the subspace");
    report.divergences.push_back({std::move(w), *diff + 1});
  }
  return report;
}

TreeCompleteness tree_is_complete(const TreeModel& model, int depth) {
  require_depth(model, depth);
  TreeCompleteness out;
  switch (model.subspace().kind) {
    case SubspaceKind::All:
      out.complete = true;
      out.note = "every coherent selection of level nodes is a branch, and every branch is a point";
      return out;
    case SubspaceKind::Explicit:
      out.complete = true;
      out.note = "finitely many points: a coherent selection is eventually a single member";
      return out;
    case SubspaceKind::EventuallyZero:
    case SubspaceKind::FinitelyManyOnes:
      break;
  }
  const Branch ones("", "1");
  for (int k = 0; k <= depth; ++k) {
    if (!model.subspace().contains(Branch(ones.node(static_cast<std::size_t>(k)), "0"))) {
      throw ConsistencyError("all-ones path is not a coherent point of the subspace");
    }
  }
  out.complete = false;
  out.unrealized = ones;
  out.probe = nonsurjectivity_probe(model, ones, depth);
  out.note = "the all-ones selection is coherent (each of its nodes holds a point) but no "
             "representative up to depth " + std::to_string(depth) + " reaches it";
  return out;
}

TreeCompletionReport tree_completion(const TreeModel& model, int depth) {
  require_depth(model, depth);
  TreeCompletionReport report;
  report.uniformly_continuous = true;
  for (int k = 0; k <= depth; ++k) {
    const auto reps = representatives(model, k);
    std::vector<std::string> images;
    for (const auto& r : reps) {
      images.push_back(r.branch.node(static_cast<std::size_t>(k)));
      if (!model.contains(model.node(r.node), r.branch)) report.uniformly_continuous = false;
    }
    std::sort(images.begin(), images.end());
    const bool injective = std::adjacent_find(images.begin(), images.end()) == images.end();
    const auto distinct = static_cast<std::size_t>(
        std::unique(images.begin(), images.end()) - images.begin());
    LevelCompletion row;
    row.depth = k;
    row.points = reps.size();
    row.level_nodes = model.level_size(k);
    row.injective = injective;
    row.covers_level = distinct == row.level_nodes;
    report.levels.push_back(row);
  }
  report.dense = std::all_of(report.levels.begin(), report.levels.end(),
                             [](const LevelCompletion& r) { return r.covers_level; });
  report.embedding = report.uniformly_continuous &&
                     std::all_of(report.levels.begin(), report.levels.end(),
                                 [](const LevelCompletion& r) { return r.injective; });
  report.completeness = tree_is_complete(model, depth);
  report.homeomorphism = report.embedding && report.dense && report.completeness.complete;
  return report;
}

}  // namespace pdual
