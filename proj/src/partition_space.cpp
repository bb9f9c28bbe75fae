#include "pdual/partition_space.hpp"

#include <algorithm>

#include "pdual/errors.hpp"

namespace pdual {

PartitionSpace::PartitionSpace(int points, std::vector<Partition> crevasses)
    : algebra_(points), crevasses_(algebra_, std::move(crevasses)) {}

Element PartitionSpace::block_of(const Partition& p, int x) const {
  if (p.algebra() != algebra_) throw AlgebraMismatch("partition of another point set");
  return p.block(p.block_of_atom(x));
}

UniformMap::UniformMap(PartitionSpace source, PartitionSpace target, std::vector<int> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
  if (table_.size() != static_cast<std::size_t>(source_.points())) {
    throw InvalidInput("map table does not cover every source point");
  }
  for (int y : table_) {
    if (y < 0 || y >= target_.points()) throw InvalidInput("map value outside the target");
  }
}

UniformMap UniformMap::identity(const PartitionSpace& space) {
  std::vector<int> table(static_cast<std::size_t>(space.points()));
  for (int i = 0; i < space.points(); ++i) table[i] = i;
  return UniformMap(space, space, std::move(table));
}

Element UniformMap::preimage(const Element& r) const {
  if (!target_.algebra().contains(r)) throw AlgebraMismatch("subset of another point set");
  Mask bits = 0;
  for (std::size_t x = 0; x < table_.size(); ++x) {
    if ((r.bits() >> table_[x]) & 1U) bits |= Mask{1} << x;
  }
  return source_.algebra().element(bits);
}

Partition UniformMap::preimage(const Partition& q) const {
  std::vector<Mask> blocks;
  for (const auto& r : q.elements()) {
    const Element pre = preimage(r);
    if (!pre.is_zero()) blocks.push_back(pre.bits());
  }
  return Partition::make(source_.algebra(), std::move(blocks));
}

bool UniformMap::is_injective() const {
  std::vector<int> sorted(table_);
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool UniformMap::is_surjective() const {
  std::vector<bool> hit(static_cast<std::size_t>(target_.points()), false);
  for (int y : table_) hit[y] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

UniformMap then(const UniformMap& f, const UniformMap& g) {
  if (!(f.target() == g.source())) throw InvalidInput("maps are not composable");
  std::vector<int> table;
  table.reserve(f.table().size());
  for (int y : f.table()) table.push_back(g(y));
  return UniformMap(f.source(), g.target(), std::move(table));
}

bool is_separating(const PartitionSpace& x) {
  return x.crevasses().base() == Partition::atoms(x.algebra());
}

bool is_uniformly_continuous(const UniformMap& f) {
  for (const auto& q : f.target().crevasses().generators()) {
    if (!f.source().crevasses().contains(f.preimage(q))) return false;
  }
  return true;
}

std::vector<InverseLimitPoint> coherent_points(const PartitionSpace& x) {
  return coherent_selections(x.crevasses());
}

bool is_complete(const PartitionSpace& x) {
  if (!is_separating(x)) return false;
  const auto gens = x.crevasses().generators();
  for (const auto& phi : coherent_points(x)) {
    bool realized = false;
    for (int point = 0; point < x.points() && !realized; ++point) {
      realized = std::all_of(gens.begin(), gens.end(), [&](const Partition& p) {
        return (phi.at(p).bits() >> point) & 1U;
      });
    }
    if (!realized) return false;
  }
  return true;
}

InducedBpa space_algebra(const PartitionSpace& x) {
  return induced_bpa(x.algebra(), x.crevasses());
}

FUltrafilter c_map(const PartitionSpace& space, int x) {
  if (x < 0 || x >= space.points()) {
    throw InvalidInput("point " + std::to_string(x) + " outside the space");
  }
  const auto induced = space_algebra(space);
  const Element point = space.algebra().atom(x);
  return FUltrafilter::from_membership(induced.bpa.algebra, [&](const Element& r) {
    return leq(point, induced.embedding.to_parent(r));
  });
}

}  // namespace pdual
