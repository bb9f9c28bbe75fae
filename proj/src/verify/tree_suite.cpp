#include <algorithm>

#include "check.hpp"
#include "pdual/tree_models.hpp"

namespace pdual::verify {

namespace {

// Elements and partitions are sampled from nodes of at most this depth.
constexpr int kSampleDepth = 3;
// Levels up to this depth are also checked through the finite image.
constexpr int kMaterializedDepth = 4;

struct TreeInstance {
  TreeModel model;
  int depth = 0;
};

struct CombInstance {
  TreeModel model;
  Comb comb;
  Branch selection;
};

struct BranchInstance {
  TreeModel model;
  Branch branch;
  int depth = 0;
};

TreeModel binary(const SuiteBounds& b, Subspace s) {
  return TreeModel({2}, std::max(TreeModel::kDefaultDepthBound, b.depth), std::move(s));
}

Json encode(const TreeInstance& t) { return Json{{"tree", to_record(t.model)}, {"depth", t.depth}}; }

TreeInstance decode(const Json& j) {
  return TreeInstance{tree_from_record(j.at("tree")), j.at("depth").get<int>()};
}

using Models = std::function<std::vector<TreeModel>(const SuiteBounds&)>;

Models only(Subspace s) {
  return [s](const SuiteBounds& b) { return std::vector{binary(b, s)}; };
}

Models incomplete_models() {
  return [](const SuiteBounds& b) {
    return std::vector{binary(b, Subspace::eventually_zero()), binary(b, Subspace::finitely_many_ones())};
  };
}

// Instances (model, k) for k in [first, last(bounds)].
CheckDef tree_check(std::string name, Models models, std::function<int(const SuiteBounds&)> first,
                     std::function<int(const SuiteBounds&)> last,
                     std::function<bool(const TreeInstance&)> holds) {
  Sweep<TreeInstance> sweep = [models, first, last](const SuiteBounds& b,
                                                    const std::function<void(const TreeInstance&)>& visit) {
    for (const auto& m : models(b)) {
      for (int k = first(b); k <= last(b); ++k) visit(TreeInstance{m, k});
    }
  };
  return make_check<TreeInstance>(std::move(name), std::move(sweep), std::move(holds), encode, decode);
}

int probe_depth(const SuiteBounds& b) { return b.depth; }

TreeElement sample_element(const TreeModel& model, const std::vector<std::string>& nodes, Mask m) {
  std::vector<std::string> chosen;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if ((m >> i) & 1U) chosen.push_back(nodes[i]);
  }
  return model.element(std::move(chosen));
}

std::vector<TreeElement> sample_elements(const TreeModel& model) {
  const auto nodes = model.level_nodes(kSampleDepth);
  std::vector<TreeElement> out;
  for (Mask m = 0; m < (Mask{1} << nodes.size()); ++m) out.push_back(sample_element(model, nodes, m));
  return out;
}

bool level_chain(const TreeInstance& t) {
  const auto fine = t.model.level_partition(t.depth + 1);
  const auto coarse = t.model.level_partition(t.depth);
  return refines(t.model, fine, coarse) && !refines(t.model, coarse, fine) &&
         level_filter_contains(t.model, coarse) && is_subcomplete(t.model, coarse);
}

bool structural_validity(const TreeInstance& t) {
  const auto r = validate_tree_bpa(t.model, t.depth);
  const auto nodes = t.model.level_size(t.depth);
  return r.all() && r.elements_checked == (std::size_t{1} << nodes) &&
         r.partitions_checked == bell_number(static_cast<int>(nodes));
}

bool all_completion_bijective(const TreeInstance& t) {
  const auto report = tree_completion(t.model, t.depth);
  const bool lazy = std::all_of(report.levels.begin(), report.levels.end(),
                                [](const LevelCompletion& r) { return r.bijective(); });
  if (!lazy || !report.homeomorphism) return false;
  if (t.depth > kMaterializedDepth) return true;
  const Truncation tr = truncate(t.model, t.depth);
  const Completion c = completion(tr.space);
  return c.report.homeomorphism && c.c.is_injective() && c.c.is_surjective() &&
         static_cast<std::size_t>(c.space.points()) == t.model.level_size(t.depth) &&
         enumerate_f_ultrafilters(tr.bpa).size() == tr.nodes.size();
}

bool dense(const TreeInstance& t) {
  return density_check(t.model, t.depth) && tree_completion(t.model, t.depth).dense;
}

bool incomplete(const TreeInstance& t) {
  const Branch ones("", "1");
  const auto c = tree_is_complete(t.model, t.depth);
  if (c.complete || !c.unrealized || !(*c.unrealized == ones) || !c.probe) return false;
  if (c.probe->divergences.size() != representatives(t.model, t.depth).size()) return false;
  const auto report = tree_completion(t.model, t.depth);
  return report.dense && report.embedding && !report.homeomorphism;
}

bool probe(const TreeInstance& t) {
  const Branch ones("", "1");
  const auto report = nonsurjectivity_probe(t.model, ones, t.depth);
  const auto reps = representatives(t.model, t.depth);
  if (!report.bounded_evidence || report.divergences.size() != reps.size()) return false;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const auto& d = report.divergences[i];
    if (!(d.representative == reps[i].branch)) return false;
    std::size_t first_zero = 0;
    while (d.representative.letter(first_zero) == 1) ++first_zero;
    if (d.depth != first_zero + 1 || d.depth > d.representative.prefix().size() + 1) return false;
  }
  try {
    nonsurjectivity_probe(TreeModel({2}, t.model.depth_bound()), ones, t.depth);
    return false;
  } catch (const MisuseError&) {
  }
  return true;
}

bool truncation_commutes(const TreeInstance& t) {
  const Truncation fine = truncate(t.model, t.depth);
  if (enumerate_f_ultrafilters(fine.bpa).size() != fine.nodes.size()) return false;
  for (int coarse = 0; coarse < t.depth; ++coarse) {
    const Truncation low = truncate(t.model, coarse);
    const UniformMap s = s_star_map(level_embedding(t.model, coarse, t.depth));
    for (std::size_t i = 0; i < fine.nodes.size(); ++i) {
      const auto up = fine.nodes[i].substr(0, static_cast<std::size_t>(coarse));
      if (low.nodes[static_cast<std::size_t>(s(static_cast<int>(i)))] != up) return false;
    }
    for (int middle = coarse + 1; middle < t.depth; ++middle) {
      const auto two_steps = compose(level_embedding(t.model, coarse, middle),
                                     level_embedding(t.model, middle, t.depth));
      if (!(two_steps == level_embedding(t.model, coarse, t.depth))) return false;
    }
  }
  return true;
}

bool readings_agree(const TreeInstance& t) {
  const Truncation level = truncate(t.model, t.depth, CrevasseReading::LevelGenerated);
  const Truncation saturated = truncate(t.model, t.depth, CrevasseReading::Saturated);
  if (!(level.space == saturated.space)) return false;
  const auto a = completion(level.space).report;
  const auto b = completion(saturated.space).report;
  return a.uniformly_continuous == b.uniformly_continuous && a.dense == b.dense &&
         a.embedding == b.embedding && a.homeomorphism == b.homeomorphism;
}

bool branch_ultrafilter_laws(const BranchInstance& t) {
  const auto u = branch_ultrafilter(t.model, t.branch);
  const auto elements = sample_elements(t.model);
  for (const auto& e : elements) {
    if (u.contains(e) == u.contains(t.model.complement(e))) return false;
    for (const auto& f : elements) {
      if (u.contains(t.model.meet(e, f)) != (u.contains(e) && u.contains(f))) return false;
    }
  }
  const auto member = [&](const TreeElement& e) { return u.contains(e); };
  const auto selection = level_selection(t.model, member, t.depth);
  for (int k = 0; k <= t.depth; ++k) {
    if (selection[static_cast<std::size_t>(k)] != u.selection(k)) return false;
    if (!t.model.contains(t.model.node(selection[static_cast<std::size_t>(k)]), t.branch)) return false;
  }
  return true;
}

std::vector<Branch> sample_branches() {
  return {Branch("", "0"), Branch("", "1"), Branch("", "01"), Branch("1", "0"), Branch("10", "1"),
          Branch("", "110")};
}

std::vector<Comb> sample_combs() {
  return {Comb{Branch("", "0"), 1}, Comb{Branch("", "1"), 2}, Comb{Branch("", "01"), 1},
          Comb{Branch("1", "0"), 3}};
}

// Upper bound by direct inspection of the first annuli; agrees with the
// definition for elements of depth at most kSampleDepth.
bool brute_upper_bound(const TreeModel& model, const Comb& comb, const Branch& selection,
                       const TreeElement& u) {
  for (int j = 0; j <= 2 * kSampleDepth + 4; ++j) {
    if (selection.letter(static_cast<std::size_t>(j)) == 1 && !model.leq(annulus(model, comb, j), u)) {
      return false;
    }
  }
  return true;
}

Json encode_comb(const CombInstance& c) {
  return Json{{"tree", to_record(c.model)},
              {"spine", to_record(c.comb.spine)},
              {"group", c.comb.group},
              {"selection", to_record(c.selection)}};
}

CombInstance decode_comb(const Json& j) {
  return CombInstance{tree_from_record(j.at("tree")),
                      Comb{branch_from_record(j.at("spine")), j.at("group").get<int>()},
                      branch_from_record(j.at("selection"))};
}

CheckDef comb_check(std::string name, std::vector<Branch> selections,
                     std::function<bool(const CombInstance&)> holds) {
  Sweep<CombInstance> sweep = [selections](const SuiteBounds& b,
                                           const std::function<void(const CombInstance&)>& visit) {
    const TreeModel model = binary(b, Subspace::all());
    for (const auto& c : sample_combs()) {
      for (const auto& s : selections) visit(CombInstance{model, c, s});
    }
  };
  return make_check<CombInstance>(std::move(name), std::move(sweep), std::move(holds), encode_comb,
                                  decode_comb);
}

bool comb_not_subcomplete(const CombInstance& c) {
  const auto p = TreePartition::comb(c.model, c.comb.spine, c.comb.group);
  if (is_subcomplete(c.model, p) || comb_join(c.model, c.comb, c.selection)) return false;
  std::size_t bounds = 0;
  for (const auto& u : sample_elements(c.model)) {
    const bool upper = is_upper_bound(c.model, c.comb, c.selection, u);
    if (upper != brute_upper_bound(c.model, c.comb, c.selection, u)) return false;
    if (!upper) continue;
    ++bounds;
    const auto v = smaller_upper_bound(c.model, c.comb, c.selection, u);
    if (!v || *v == u || !c.model.leq(*v, u) || !is_upper_bound(c.model, c.comb, c.selection, *v)) {
      return false;
    }
  }
  return bounds > 0;
}

bool comb_join_exists(const CombInstance& c) {
  const auto j = comb_join(c.model, c.comb, c.selection);
  if (!j || !is_upper_bound(c.model, c.comb, c.selection, *j)) return false;
  if (smaller_upper_bound(c.model, c.comb, c.selection, *j)) return false;
  for (const auto& u : sample_elements(c.model)) {
    const bool upper = is_upper_bound(c.model, c.comb, c.selection, u);
    if (upper != brute_upper_bound(c.model, c.comb, c.selection, u)) return false;
    if (upper && !c.model.leq(*j, u)) return false;
  }
  return true;
}

bool subcomplete_upward(const TreeInstance& t) {
  const TreeModel& m = t.model;
  std::vector<TreePartition> family;
  for (int k = 0; k <= t.depth; ++k) family.push_back(m.level_partition(k));
  const auto nodes = m.level_nodes(2);
  for (const auto& rgs : restricted_growth_strings(static_cast<int>(nodes.size()))) {
    const int count = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<std::string>> groups(static_cast<std::size_t>(count));
    for (std::size_t i = 0; i < rgs.size(); ++i) groups[rgs[i]].push_back(nodes[i]);
    std::vector<TreeElement> blocks;
    for (auto& g : groups) blocks.push_back(m.element(std::move(g)));
    family.push_back(TreePartition::finite(m, std::move(blocks)));
  }
  for (const auto& c : sample_combs()) family.push_back(TreePartition::comb(m, c.spine, c.group));
  family.push_back(TreePartition::comb(m, Branch("", "0"), 2));
  std::size_t comb_below_finite = 0;
  for (const auto& p : family) {
    for (const auto& q : family) {
      if (!refines(m, p, q)) continue;
      if (is_subcomplete(m, p) && !is_subcomplete(m, q)) return false;
      if (!p.is_finite() && q.is_finite()) ++comb_below_finite;
    }
  }
  const auto zeros1 = TreePartition::comb(m, Branch("", "0"), 1);
  const auto zeros2 = TreePartition::comb(m, Branch("", "0"), 2);
  return comb_below_finite > 0 && refines(m, zeros1, zeros2) && !refines(m, zeros2, zeros1) &&
         !refines(m, m.level_partition(3), zeros1);
}

}  // namespace

std::vector<CheckDef> tree_checks() {
  const auto fixed = [](int k) { return [k](const SuiteBounds&) { return k; }; };
  const auto materialized = [](const SuiteBounds& b) { return std::min(b.depth, kMaterializedDepth); };
  std::vector<CheckDef> out;
  out.push_back(tree_check("tree.level_chain", only(Subspace::all()), fixed(0),
                           [](const SuiteBounds& b) { return b.depth - 1; }, level_chain));
  out.push_back(tree_check("tree.structural_validity", only(Subspace::all()), fixed(kSampleDepth),
                           fixed(kSampleDepth), structural_validity));
  out.push_back(tree_check("tree.all_completion_bijective", only(Subspace::all()), fixed(0), probe_depth,
                           all_completion_bijective));
  out.push_back(tree_check("tree.eventually_zero_dense", incomplete_models(), fixed(0), probe_depth, dense));
  out.push_back(tree_check("tree.eventually_zero_incomplete", incomplete_models(), probe_depth,
                           probe_depth, incomplete));
  out.push_back(tree_check("tree.nonsurjectivity_probe", incomplete_models(), fixed(0), probe_depth, probe));
  out.push_back(tree_check("tree.truncation_commutes", only(Subspace::all()), fixed(0), materialized,
                           truncation_commutes));
  out.push_back(tree_check("tree.crevasse_readings_agree", incomplete_models(), fixed(0),
                           [](const SuiteBounds& b) { return std::min(b.depth, kSampleDepth); },
                           readings_agree));
  out.push_back(make_check<BranchInstance>(
      "tree.branch_ultrafilter",
      [](const SuiteBounds& b, const std::function<void(const BranchInstance&)>& visit) {
        const TreeModel model = binary(b, Subspace::all());
        for (const auto& br : sample_branches()) visit(BranchInstance{model, br, b.depth});
      },
      branch_ultrafilter_laws,
      [](const BranchInstance& t) {
        return Json{{"tree", to_record(t.model)}, {"branch", to_record(t.branch)}, {"depth", t.depth}};
      },
      [](const Json& j) {
        return BranchInstance{tree_from_record(j.at("tree")), branch_from_record(j.at("branch")),
                              j.at("depth").get<int>()};
      }));
  out.push_back(comb_check("tree.comb_not_subcomplete", {Branch("", "10"), Branch("", "011"), Branch("1", "01")},
                           comb_not_subcomplete));
  out.push_back(comb_check("tree.comb_join_when_finite",
                           {Branch("1", "0"), Branch("01", "0"), Branch("", "1"), Branch("10", "1"), Branch("", "0")},
                           comb_join_exists));
  out.push_back(tree_check("tree.subcomplete_upward", only(Subspace::all()), fixed(kSampleDepth),
                           fixed(kSampleDepth), subcomplete_upward));
  return out;
}

}  // namespace pdual::verify
