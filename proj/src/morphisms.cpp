#include "pdual/morphisms.hpp"

#include <algorithm>

#include "pdual/errors.hpp"

namespace pdual {

namespace {

std::optional<Partition> as_partition(std::vector<Element> family, const Algebra& algebra) {
  if (!is_partition(family)) return std::nullopt;
  return Partition::make(family, algebra);
}

void require_source(const FunctionTable& f, const Bpa& source) {
  if (f.source() != source.algebra) throw AlgebraMismatch("table source is not the BPA's algebra");
}

}  // namespace

std::vector<Element> nonzero_image(const FunctionTable& f, const Partition& p) {
  const auto blocks = p.elements();
  auto out = image(f, blocks);
  std::erase_if(out, [](const Element& x) { return x.is_zero(); });
  return out;
}

bool is_partitional(const FunctionTable& f, const Bpa& source, const Algebra& target) {
  require_source(f, source);
  if (f.target() != target) throw AlgebraMismatch("table target is not the given algebra");
  if (!is_boolean_homomorphism(f)) return false;
  return is_partition(nonzero_image(f, source.filter.base()));
}

bool is_partition_hom(const FunctionTable& f, const Bpa& source, const Bpa& target) {
  require_source(f, source);
  if (f.target() != target.algebra) throw AlgebraMismatch("table target is not the BPA's algebra");
  if (!is_boolean_homomorphism(f)) return false;
  for (const auto& g : source.filter.generators()) {
    auto image_partition = as_partition(nonzero_image(f, g), target.algebra);
    if (!image_partition || !target.filter.contains(*image_partition)) return false;
  }
  return true;
}

bool is_partitional_unreduced(const FunctionTable& f, const Bpa& source, const Algebra& target) {
  require_source(f, source);
  if (f.target() != target) throw AlgebraMismatch("table target is not the given algebra");
  if (!is_boolean_homomorphism(f)) return false;
  const auto members = source.filter.members();
  return std::all_of(members.begin(), members.end(),
                     [&](const Partition& p) { return is_partition(nonzero_image(f, p)); });
}

bool is_partition_hom_unreduced(const FunctionTable& f, const Bpa& source, const Bpa& target) {
  require_source(f, source);
  if (f.target() != target.algebra) throw AlgebraMismatch("table target is not the BPA's algebra");
  if (!is_boolean_homomorphism(f)) return false;
  const auto members = source.filter.members();
  return std::all_of(members.begin(), members.end(), [&](const Partition& p) {
    auto image_partition = as_partition(nonzero_image(f, p), target.algebra);
    return image_partition && target.filter.contains(*image_partition);
  });
}

bool partitional_via_extended(const FunctionTable& f, const Bpa& source) {
  require_source(f, source);
  if (f.apply(0) != 0) return false;
  if (source.filter.base().size() > kMaxEnumeratedBlocks) {
    throw CapacityError("too many filter members to enumerate");
  }
  for (const auto& p : source.filter.members()) {
    std::vector<Element> family;
    family.reserve(p.size());
    for (const auto& b : p.elements()) family.push_back(f(b));
    if (!is_extended_partition(family)) return false;
  }
  return true;
}

PartitionHom PartitionHom::make(FunctionTable table, Bpa source, Bpa target) {
  if (!is_partition_hom(table, source, target)) {
    throw NotAPartitionHom("table is not a partition homomorphism");
  }
  return PartitionHom(std::move(table), std::move(source), std::move(target));
}

PartitionHom PartitionHom::partitional(FunctionTable table, Bpa source, const Algebra& target) {
  if (!is_partitional(table, source, target)) throw NotAPartitionHom("table is not partitional");
  return PartitionHom(std::move(table), std::move(source), make_full_bpa(target));
}

PartitionHom PartitionHom::identity(const Bpa& bpa) {
  return make(FunctionTable::identity(bpa.algebra), bpa, bpa);
}

PartitionHom compose(const PartitionHom& f, const PartitionHom& g) {
  if (f.target().algebra != g.source().algebra) {
    throw AlgebraMismatch("cannot compose: g's source is not f's target");
  }
  FunctionTable table = then(f.table(), g.table());
  if (!is_partition_hom(table, f.source(), g.target())) {
    throw ConsistencyError("composite of partition homomorphisms failed the check");
  }
  return PartitionHom::make(std::move(table), f.source(), g.target());
}

std::vector<FunctionTable> enumerate_homomorphisms(const Algebra& source, const Algebra& target) {
  const int a = source.atoms();
  const int b = target.atoms();
  std::vector<FunctionTable> out;
  std::vector<int> sigma(b, 0);  // target atom -> source atom
  while (true) {
    std::vector<Mask> images(source.size(), 0);
    for (Mask x = 0; x < images.size(); ++x) {
      for (int j = 0; j < b; ++j) {
        if ((x >> sigma[j]) & 1U) images[x] |= Mask{1} << j;
      }
    }
    out.emplace_back(source, target, std::move(images));
    int j = 0;
    while (j < b && ++sigma[j] == a) sigma[j++] = 0;
    if (j == b) break;
  }
  return out;
}

}  // namespace pdual
