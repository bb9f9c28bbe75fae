#include "pdual/partition_lattice.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "pdual/errors.hpp"

namespace pdual {

namespace {

bool by_least_atom(Mask a, Mask b) { return std::countr_zero(a) < std::countr_zero(b); }

std::vector<Mask> masks_of(std::span<const Element> family, const Algebra& algebra) {
  std::vector<Mask> out;
  out.reserve(family.size());
  for (const auto& x : family) {
    if (!algebra.contains(x)) throw AlgebraMismatch("family mixes algebras");
    out.push_back(x.bits());
  }
  return out;
}

bool cellular_masks(std::span<const Mask> blocks) {
  Mask seen = 0;
  for (Mask b : blocks) {
    if (b == 0 || (seen & b) != 0) return false;
    seen |= b;
  }
  return true;
}

}  // namespace

CellularFamily CellularFamily::make(const Algebra& algebra, std::vector<Mask> blocks) {
  for (Mask b : blocks) {
    if ((b & ~algebra.top_mask()) != 0) throw InvalidInput("block outside algebra");
  }
  if (!cellular_masks(blocks)) throw InvalidInput("family is not cellular");
  std::sort(blocks.begin(), blocks.end(), by_least_atom);
  return CellularFamily(algebra, std::move(blocks));
}

CellularFamily CellularFamily::make(std::span<const Element> blocks, const Algebra& algebra) {
  return make(algebra, masks_of(blocks, algebra));
}

std::vector<Element> CellularFamily::elements() const {
  std::vector<Element> out;
  out.reserve(blocks_.size());
  for (Mask b : blocks_) out.push_back(algebra_.element(b));
  return out;
}

Element CellularFamily::join() const {
  Mask acc = 0;
  for (Mask b : blocks_) acc |= b;
  return algebra_.element(acc);
}

std::optional<std::size_t> CellularFamily::block_above(Mask x) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if ((x & ~blocks_[i]) == 0) return i;
  }
  return std::nullopt;
}

bool CellularFamily::has_block(Mask x) const {
  return std::find(blocks_.begin(), blocks_.end(), x) != blocks_.end();
}

Partition Partition::make(const Algebra& algebra, std::vector<Mask> blocks) {
  auto family = CellularFamily::make(algebra, std::move(blocks));
  if (family.join() != algebra.one()) throw InvalidInput("blocks do not join to 1");
  return Partition(std::move(family));
}

Partition Partition::make(std::span<const Element> blocks, const Algebra& algebra) {
  return make(algebra, masks_of(blocks, algebra));
}

Partition Partition::top(const Algebra& algebra) { return make(algebra, {algebra.top_mask()}); }

Partition Partition::atoms(const Algebra& algebra) {
  std::vector<Mask> blocks;
  for (int i = 0; i < algebra.atoms(); ++i) blocks.push_back(Mask{1} << i);
  return make(algebra, std::move(blocks));
}

std::size_t Partition::block_of_atom(int a) const {
  return *block_above(algebra().atom(a).bits());
}

std::string to_string(const CellularFamily& family) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i != 0) os << ',';
    os << to_string(family.block(i));
  }
  os << ']';
  return os.str();
}

bool is_cellular(std::span<const Element> family) {
  if (family.empty()) return true;
  const auto masks = masks_of(family, family.front().algebra());
  return cellular_masks(masks);
}

bool is_partition(std::span<const Element> family) {
  if (!is_cellular(family) || family.empty()) return false;
  return join_all(family.front().algebra(), family).is_one();
}

Partition extend_to_maximal_cellular(std::span<const Element> family) {
  if (!is_cellular(family)) throw InvalidInput("family is not cellular");
  if (family.empty()) {
    throw InvalidInput("cannot infer the algebra of an empty family; pass a CellularFamily");
  }
  return extend_to_maximal_cellular(CellularFamily::make(family, family.front().algebra()));
}

Partition extend_to_maximal_cellular(const CellularFamily& family) {
  const Algebra& algebra = family.algebra();
  std::vector<Mask> blocks(family.blocks().begin(), family.blocks().end());
  const Mask leftover = algebra.top_mask() & ~family.join().bits();
  for (Mask m = leftover; m != 0; m &= m - 1) blocks.push_back(m & -m);
  return Partition::make(algebra, std::move(blocks));
}

bool refines(const CellularFamily& a, const CellularFamily& b) {
  if (a.algebra() != b.algebra()) throw AlgebraMismatch("refinement across algebras");
  for (Mask block : a.blocks()) {
    if (!b.block_above(block)) return false;
  }
  return true;
}

Element CoarseningMap::operator()(const Element& block) const {
  for (std::size_t i = 0; i < source_.size(); ++i) {
    if (source_.blocks()[i] == block.bits() && source_.algebra().contains(block)) {
      return target_.block(assignment_[i]);
    }
  }
  throw InvalidInput("element " + to_string(block) + " is not a source block");
}

CoarseningMap coarsening_map(const CellularFamily& a, const CellularFamily& b) {
  if (a.algebra() != b.algebra()) throw AlgebraMismatch("coarsening map across algebras");
  std::vector<std::size_t> assignment;
  assignment.reserve(a.size());
  for (Mask block : a.blocks()) {
    auto above = b.block_above(block);
    if (!above) {
      throw RefinementError(to_string(a) + " does not refine " + to_string(b));
    }
    assignment.push_back(*above);
  }
  return CoarseningMap(a, b, std::move(assignment));
}

CoarseningMap then(const CoarseningMap& f, const CoarseningMap& g) {
  if (f.target() != g.source()) throw RefinementError("coarsening maps are not composable");
  std::vector<std::size_t> assignment;
  assignment.reserve(f.assignment().size());
  for (std::size_t i : f.assignment()) assignment.push_back(g.assignment()[i]);
  return CoarseningMap(f.source(), g.target(), std::move(assignment));
}

Partition meet(const Partition& p, const Partition& q) {
  if (p.algebra() != q.algebra()) throw AlgebraMismatch("meet across algebras");
  std::vector<Mask> blocks;
  for (Mask a : p.blocks()) {
    for (Mask b : q.blocks()) {
      if ((a & b) != 0) blocks.push_back(a & b);
    }
  }
  return Partition::make(p.algebra(), std::move(blocks));
}

Partition meet_all(const Algebra& algebra, std::span<const Partition> family) {
  Partition acc = Partition::top(algebra);
  for (const auto& p : family) acc = meet(acc, p);
  return acc;
}

bool is_subcomplete(const Partition& /*p*/) { return true; }

FunctionTable subcomplete_embedding(const Partition& a) {
  if (!is_subcomplete(a)) throw SubcompletenessError("partition is not subcomplete");
  const Algebra blocks_algebra(static_cast<int>(a.size()));
  std::vector<Mask> images(blocks_algebra.size());
  for (Mask r = 0; r < images.size(); ++r) {
    Mask acc = 0;
    for (Mask m = r; m != 0; m &= m - 1) acc |= a.blocks()[std::countr_zero(m)];
    images[r] = acc;
  }
  return FunctionTable(blocks_algebra, a.algebra(), std::move(images));
}

std::vector<std::vector<int>> restricted_growth_strings(int n) {
  std::vector<std::vector<int>> out;
  if (n <= 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> rgs(n, 0);
  std::vector<int> max_prefix(n, 0);  // max of rgs[0..i-1]
  while (true) {
    out.push_back(rgs);
    // Increment the rightmost position that can grow.
    int i = n - 1;
    while (i > 0 && rgs[i] > max_prefix[i]) --i;
    if (i == 0) break;
    ++rgs[i];
    for (int j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      max_prefix[j] = std::max(max_prefix[j - 1], rgs[j - 1]);
    }
  }
  return out;
}

std::vector<Partition> enumerate_partitions(const Algebra& algebra) {
  std::vector<Partition> out;
  for (const auto& rgs : restricted_growth_strings(algebra.atoms())) {
    std::vector<Mask> blocks;
    for (int i = 0; i < algebra.atoms(); ++i) {
      if (static_cast<std::size_t>(rgs[i]) >= blocks.size()) blocks.resize(rgs[i] + 1, 0);
      blocks[rgs[i]] |= Mask{1} << i;
    }
    out.push_back(Partition::make(algebra, std::move(blocks)));
  }
  return out;
}

std::vector<CellularFamily> enumerate_cellular_families(const Algebra& algebra) {
  std::vector<CellularFamily> out;
  for (Mask covered = 0; covered <= algebra.top_mask(); ++covered) {
    std::vector<int> members;
    for (Mask m = covered; m != 0; m &= m - 1) members.push_back(std::countr_zero(m));
    for (const auto& rgs : restricted_growth_strings(static_cast<int>(members.size()))) {
      std::vector<Mask> blocks;
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (static_cast<std::size_t>(rgs[i]) >= blocks.size()) blocks.resize(rgs[i] + 1, 0);
        blocks[rgs[i]] |= Mask{1} << members[i];
      }
      out.push_back(CellularFamily::make(algebra, std::move(blocks)));
    }
  }
  return out;
}

std::vector<Partition> coarsenings(const Partition& p) {
  std::vector<Partition> out;
  const int k = static_cast<int>(p.size());
  for (const auto& rgs : restricted_growth_strings(k)) {
    std::vector<Mask> blocks;
    for (int i = 0; i < k; ++i) {
      if (static_cast<std::size_t>(rgs[i]) >= blocks.size()) blocks.resize(rgs[i] + 1, 0);
      blocks[rgs[i]] |= p.blocks()[i];
    }
    out.push_back(Partition::make(p.algebra(), std::move(blocks)));
  }
  return out;
}

std::uint64_t bell_number(int n) {
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

}  // namespace pdual
