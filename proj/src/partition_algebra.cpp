#include "pdual/partition_algebra.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "pdual/errors.hpp"

namespace pdual {

namespace {

std::vector<Partition> nonempty_or_top(const Algebra& algebra, std::vector<Partition> gens) {
  for (const auto& g : gens) {
    if (g.algebra() != algebra) throw InvalidInput("generator belongs to another algebra");
  }
  if (gens.empty()) gens.push_back(Partition::top(algebra));
  return gens;
}

bool is_union_of_blocks(Mask x, const Partition& p) {
  Mask covered = 0;
  for (Mask b : p.blocks()) {
    if ((b & x) == b) covered |= b;
  }
  return covered == x;
}

constexpr int kMaxEnumeratedAtoms = 8;

}  // namespace

PartitionFilter::PartitionFilter(Algebra algebra, std::vector<Partition> generators)
    : algebra_(algebra),
      generators_(nonempty_or_top(algebra, std::move(generators))),
      base_(meet_all(algebra, generators_)) {}

bool PartitionFilter::contains(const Partition& p) const { return refines(base_, p); }

std::vector<Partition> PartitionFilter::members() const { return coarsenings(base_); }

std::optional<Partition> PartitionFilter::member_with_block(const Element& x) const {
  if (!algebra_.contains(x)) throw AlgebraMismatch("element outside the filter's algebra");
  if (x.is_zero()) return std::nullopt;
  Partition candidate = x.is_one() ? Partition::top(algebra_)
                                   : Partition::make(algebra_, {x.bits(), complement(x).bits()});
  if (contains(candidate)) return candidate;
  return std::nullopt;
}

PartitionFilter filter_from_generators(const Algebra& algebra, std::vector<Partition> generators) {
  return PartitionFilter(algebra, std::move(generators));
}

bool filter_contains(const PartitionFilter& filter, const Partition& p) {
  return filter.contains(p);
}

ValidityReport validate_bpa(const Bpa& bpa) {
  const Algebra& algebra = bpa.algebra;
  const PartitionFilter& filter = bpa.filter;
  ValidityReport report;

  report.complement_pairs = true;
  for (Mask b = 1; b < algebra.top_mask(); ++b) {
    const Partition pair = Partition::make(algebra, {b, algebra.top_mask() & ~b});
    if (!filter.contains(pair)) {
      report.complement_pairs = false;
      report.witness = algebra.element(b);
      break;
    }
  }

  // Blocks occurring in some member.
  std::vector<bool> occurs(algebra.size(), false);
  if (filter.base().size() <= kMaxEnumeratedBlocks) {
    for (const auto& member : filter.members()) {
      for (Mask b : member.blocks()) occurs[b] = true;
    }
  } else {
    // A nonzero union u of base blocks is a block of {u, u'} (or {1}), a member.
    for (Mask b = 1; b <= algebra.top_mask(); ++b) occurs[b] = is_union_of_blocks(b, filter.base());
  }
  report.covers_elements = true;
  for (Mask b = 1; b <= algebra.top_mask(); ++b) {
    if (!occurs[b]) {
      report.covers_elements = false;
      break;
    }
  }

  if (algebra.atoms() <= kMaxEnumeratedAtoms) {
    const auto all = enumerate_partitions(algebra);
    report.all_finite_partitions =
        std::all_of(all.begin(), all.end(), [&](const Partition& p) { return filter.contains(p); });
  } else {
    // Every partition coarsens the atom partition.
    report.all_finite_partitions = filter.contains(Partition::atoms(algebra));
  }
  return report;
}

Bpa make_full_bpa(const Algebra& algebra, PartitionBound /*bound*/) {
  return Bpa(PartitionFilter(algebra, {Partition::atoms(algebra)}));
}

Subalgebra::Subalgebra(Algebra parent, std::vector<Mask> atom_images)
    : parent_(parent),
      algebra_(static_cast<int>(atom_images.size())),
      atom_images_(std::move(atom_images)) {
  // Atom images must form a partition of the parent.
  Partition::make(parent_, atom_images_);
}

Element Subalgebra::to_parent(const Element& x) const {
  if (!algebra_.contains(x)) throw AlgebraMismatch("element outside the subalgebra");
  Mask acc = 0;
  for (Mask m = x.bits(); m != 0; m &= m - 1) acc |= atom_images_[std::countr_zero(m)];
  return parent_.element(acc);
}

std::optional<Element> Subalgebra::from_parent(const Element& x) const {
  if (!parent_.contains(x)) throw AlgebraMismatch("element outside the parent algebra");
  Mask bits = 0;
  Mask covered = 0;
  for (std::size_t i = 0; i < atom_images_.size(); ++i) {
    const Mask a = atom_images_[i];
    if ((a & x.bits()) == a) {
      bits |= Mask{1} << i;
      covered |= a;
    } else if ((a & x.bits()) != 0) {
      return std::nullopt;
    }
  }
  if (covered != x.bits()) return std::nullopt;
  return algebra_.element(bits);
}

Partition Subalgebra::partition_from_parent(const Partition& p) const {
  std::vector<Mask> blocks;
  for (const auto& b : p.elements()) {
    auto local = from_parent(b);
    if (!local) throw InvalidInput("block " + to_string(b) + " is not in the subalgebra");
    blocks.push_back(local->bits());
  }
  return Partition::make(algebra_, std::move(blocks));
}

Partition Subalgebra::partition_to_parent(const Partition& p) const {
  std::vector<Mask> blocks;
  for (const auto& b : p.elements()) blocks.push_back(to_parent(b).bits());
  return Partition::make(parent_, std::move(blocks));
}

InducedBpa induced_bpa(const Algebra& algebra, const PartitionFilter& filter) {
  if (filter.algebra() != algebra) throw AlgebraMismatch("filter belongs to another algebra");
  // {0} u UF is generated by the base blocks: every member is a coarsening of
  // the base, and every nonzero union u of base blocks lies in {u, u'}.
  const auto base_blocks = filter.base().blocks();
  Subalgebra sub(algebra, std::vector<Mask>(base_blocks.begin(), base_blocks.end()));
  std::vector<Partition> gens;
  for (const auto& g : filter.generators()) gens.push_back(sub.partition_from_parent(g));
  return InducedBpa{Bpa(PartitionFilter(sub.algebra(), std::move(gens))), std::move(sub)};
}

FUltrafilter FUltrafilter::principal(const Element& atom) {
  if (!atom.is_atom()) throw NotAnFUltrafilter(to_string(atom) + " is not an atom");
  return FUltrafilter(atom);
}

FUltrafilter FUltrafilter::from_membership(const Algebra& algebra,
                                           const std::function<bool(const Element&)>& member) {
  Mask least = algebra.top_mask();
  bool any = false;
  for (const auto& b : algebra.elements()) {
    if (member(b)) {
      least &= b.bits();
      any = true;
    }
  }
  if (!any) throw NotAnFUltrafilter("empty set is not an ultrafilter");
  const Element lo = algebra.element(least);
  if (!lo.is_atom()) {
    throw NotAnFUltrafilter("members meet to " + to_string(lo) + ", not an atom");
  }
  for (const auto& b : algebra.elements()) {
    if (member(b) != leq(lo, b)) {
      throw NotAnFUltrafilter("set is not upward closed above " + to_string(lo));
    }
  }
  return FUltrafilter(lo);
}

int FUltrafilter::atom() const { return std::countr_zero(least_.bits()); }

bool is_f_ultrafilter(const Bpa& bpa, const std::function<bool(const Element&)>& member) {
  try {
    FUltrafilter::from_membership(bpa.algebra, member);
  } catch (const NotAnFUltrafilter&) {
    return false;
  }
  auto hits_once = [&](const Partition& p) {
    int hits = 0;
    for (const auto& b : p.elements()) hits += member(b) ? 1 : 0;
    return hits == 1;
  };
  if (!hits_once(bpa.filter.base())) return false;
  for (const auto& g : bpa.filter.generators()) {
    if (!hits_once(g)) return false;
  }
  return true;
}

std::vector<FUltrafilter> enumerate_f_ultrafilters(const Bpa& bpa) {
  const auto validity = validate_bpa(bpa);
  if (!validity.all()) {
    throw ValidityError("not a Boolean partition algebra: {b, b'} missing from the filter for b = " +
                        (validity.witness ? to_string(*validity.witness) : std::string("?")));
  }
  // Every ultrafilter on a finite algebra is principal at an atom.
  std::vector<FUltrafilter> out;
  for (int i = 0; i < bpa.algebra.atoms(); ++i) {
    const Element a = bpa.algebra.atom(i);
    if (is_f_ultrafilter(bpa, [&](const Element& b) { return leq(a, b); })) {
      out.push_back(FUltrafilter::principal(a));
    }
  }
  return out;
}

InverseLimitPoint::InverseLimitPoint(std::vector<Partition> support, std::vector<Mask> selection)
    : support_(std::move(support)), selection_(std::move(selection)) {
  if (support_.size() != selection_.size()) {
    throw InvalidInput("selection size does not match support size");
  }
  if (support_.empty()) throw InvalidInput("inverse limit point needs a nonempty support");
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (!support_[i].has_block(selection_[i])) {
      throw InvalidInput("selected element is not a block of its partition");
    }
    if (support_[i].algebra() != support_.front().algebra()) {
      throw AlgebraMismatch("support mixes algebras");
    }
  }
  coherent_ = compute_coherence();
}

Element InverseLimitPoint::core() const {
  const Algebra& algebra = support_.front().algebra();
  Mask acc = algebra.top_mask();
  for (Mask s : selection_) acc &= s;
  return algebra.element(acc);
}

bool InverseLimitPoint::compute_coherence() const {
  for (std::size_t i = 0; i < support_.size(); ++i) {
    for (std::size_t j = 0; j < support_.size(); ++j) {
      if (i == j || !refines(support_[i], support_[j])) continue;
      const auto phi = coarsening_map(support_[i], support_[j]);
      if (phi(support_[i].algebra().element(selection_[i])).bits() != selection_[j]) return false;
    }
  }
  return !core().is_zero();
}

Element InverseLimitPoint::at(const Partition& p) const {
  if (!coherent()) throw CoherenceError("selection is not coherent");
  const Element c = core();
  if (p.algebra() != c.algebra()) throw AlgebraMismatch("partition from another algebra");
  auto above = p.block_above(c.bits());
  if (!above) throw InvalidInput(to_string(p) + " does not coarsen the point's support");
  return p.block(*above);
}

std::vector<InverseLimitPoint> coherent_selections(const PartitionFilter& filter) {
  const auto gens = filter.generators();
  std::vector<InverseLimitPoint> out;
  std::vector<Mask> chosen;
  const auto recurse = [&](auto&& self, std::size_t depth, Mask core) -> void {
    if (depth == gens.size()) {
      out.emplace_back(std::vector<Partition>(gens.begin(), gens.end()), chosen);
      return;
    }
    for (Mask b : gens[depth].blocks()) {
      if ((core & b) == 0) continue;
      chosen.push_back(b);
      self(self, depth + 1, core & b);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0, filter.algebra().top_mask());
  return out;
}

FUltrafilter limit_to_ultrafilter(const Bpa& bpa, const InverseLimitPoint& x) {
  if (!x.coherent()) throw CoherenceError("selection is not coherent");
  // b is some x_P iff b = x_P for a member P having b as a block.
  return FUltrafilter::from_membership(bpa.algebra, [&](const Element& b) {
    const auto p = bpa.filter.member_with_block(b);
    return p && x.at(*p) == b;
  });
}

InverseLimitPoint ultrafilter_to_limit(const Bpa& bpa,
                                       const std::function<bool(const Element&)>& member) {
  const auto gens = bpa.filter.generators();
  std::vector<Mask> selection;
  for (const auto& g : gens) {
    std::optional<Mask> hit;
    for (Mask b : g.blocks()) {
      if (!member(bpa.algebra.element(b))) continue;
      if (hit) throw NotAnFUltrafilter("ultrafilter meets " + to_string(g) + " more than once");
      hit = b;
    }
    if (!hit) throw NotAnFUltrafilter("ultrafilter misses every block of " + to_string(g));
    selection.push_back(*hit);
  }
  return InverseLimitPoint(std::vector<Partition>(gens.begin(), gens.end()), std::move(selection));
}

InverseLimitPoint ultrafilter_to_limit(const Bpa& bpa, const FUltrafilter& u) {
  if (u.algebra() != bpa.algebra) throw AlgebraMismatch("ultrafilter on another algebra");
  return ultrafilter_to_limit(bpa, [&](const Element& b) { return u.contains(b); });
}

StabilityReport stability_report(const Bpa& bpa) {
  const Algebra& algebra = bpa.algebra;
  const auto spectrum = enumerate_f_ultrafilters(bpa);
  const auto points = coherent_selections(bpa.filter);
  StabilityReport report;
  report.empty_spectrum = spectrum.empty();

  report.definition = true;
  for (Mask b = 1; b <= algebra.top_mask(); ++b) {
    const Element e = algebra.element(b);
    const auto p = bpa.filter.member_with_block(e);
    const bool hit = p && std::any_of(points.begin(), points.end(),
                                      [&](const InverseLimitPoint& x) { return x.at(*p) == e; });
    if (!hit) {
      report.definition = false;
      break;
    }
  }

  std::vector<Partition> projections;
  if (bpa.filter.base().size() <= kMaxEnumeratedBlocks) {
    projections = bpa.filter.members();
  } else {
    projections.push_back(bpa.filter.base());
    for (const auto& g : bpa.filter.generators()) projections.push_back(g);
  }
  report.projections_surjective = std::all_of(
      projections.begin(), projections.end(), [&](const Partition& p) {
        return std::all_of(p.blocks().begin(), p.blocks().end(), [&](Mask block) {
          return std::any_of(points.begin(), points.end(), [&](const InverseLimitPoint& x) {
            return x.at(p).bits() == block;
          });
        });
      });

  report.union_is_nonzero = true;
  report.intersection_is_top = true;
  for (const auto& b : algebra.elements()) {
    const bool in_some = std::any_of(spectrum.begin(), spectrum.end(),
                                     [&](const FUltrafilter& u) { return u.contains(b); });
    const bool in_all = std::all_of(spectrum.begin(), spectrum.end(),
                                    [&](const FUltrafilter& u) { return u.contains(b); });
    if (in_some != !b.is_zero()) report.union_is_nonzero = false;
    if (in_all != b.is_one()) report.intersection_is_top = false;
  }
  return report;
}

Element iota(std::span<const FUltrafilter> spectrum, const Element& a) {
  if (spectrum.empty()) throw StabilityError("iota into an empty spectrum");
  const Algebra points(static_cast<int>(spectrum.size()));
  Mask bits = 0;
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    if (spectrum[i].contains(a)) bits |= Mask{1} << i;
  }
  return points.element(bits);
}

Partition iota_image(std::span<const FUltrafilter> spectrum, const Partition& p) {
  std::vector<Mask> blocks;
  for (const auto& b : p.elements()) {
    const Element image = iota(spectrum, b);
    if (!image.is_zero()) blocks.push_back(image.bits());
  }
  return Partition::make(Algebra(static_cast<int>(spectrum.size())), std::move(blocks));
}

}  // namespace pdual
