#include "pdual/duality.hpp"

#include <algorithm>

#include "pdual/errors.hpp"

namespace pdual {

namespace {

bool union_is_nonzero(const Algebra& algebra, const std::vector<FUltrafilter>& spectrum) {
  for (Mask b = 1; b <= algebra.top_mask(); ++b) {
    const Element e = algebra.element(b);
    if (std::none_of(spectrum.begin(), spectrum.end(),
                     [&](const FUltrafilter& u) { return u.contains(e); })) {
      return false;
    }
  }
  return true;
}

std::size_t index_in(const std::vector<FUltrafilter>& spectrum, const FUltrafilter& u) {
  auto it = std::find(spectrum.begin(), spectrum.end(), u);
  if (it == spectrum.end()) throw ConsistencyError("ultrafilter missing from the spectrum");
  return static_cast<std::size_t>(it - spectrum.begin());
}

std::optional<FunctionTable> inverse_table(const FunctionTable& f) {
  if (f.source().atoms() != f.target().atoms() || !f.is_injective()) return std::nullopt;
  std::vector<Mask> images(f.target().size());
  for (Mask x = 0; x < f.source().size(); ++x) images[f.apply(x)] = x;
  return FunctionTable(f.target(), f.source(), std::move(images));
}

}  // namespace

PartitionSpace spectrum_space(const Bpa& bpa) {
  const auto spectrum = enumerate_f_ultrafilters(bpa);
  if (spectrum.empty()) throw StabilityError("empty spectrum");
  if (!union_is_nonzero(bpa.algebra, spectrum)) {
    throw StabilityError("some nonzero element lies in no F-ultrafilter");
  }
  std::vector<Partition> crevasses;
  for (const auto& g : bpa.filter.generators()) crevasses.push_back(iota_image(spectrum, g));
  return PartitionSpace(static_cast<int>(spectrum.size()), std::move(crevasses));
}

InducedBpa algebra_of_space(const PartitionSpace& x) {
  auto induced = space_algebra(x);
  if (!induced.bpa.subcomplete() || !stability_report(induced.bpa).stable()) {
    throw ConsistencyError("algebra of a space is not subcomplete and stable");
  }
  return induced;
}

PartitionHom psi(const Bpa& bpa) {
  const auto spectrum = enumerate_f_ultrafilters(bpa);
  const PartitionSpace space = spectrum_space(bpa);
  const InducedBpa target = algebra_of_space(space);
  auto table = FunctionTable::from_function(bpa.algebra, target.bpa.algebra, [&](const Element& a) {
    auto local = target.embedding.from_parent(iota(spectrum, a));
    if (!local) throw ConsistencyError("iota(a) is not an element of B*(S*(B, F))");
    return *local;
  });
  if (!is_partition_hom(table, bpa, target.bpa)) {
    throw ConsistencyError("psi is not a partition homomorphism");
  }
  return PartitionHom::make(std::move(table), bpa, target.bpa);
}

bool DualityWitness::recheck() const {
  const auto& t = forward.table();
  if (injective != t.is_injective()) return false;
  if (partition_hom != is_partition_hom(t, forward.source(), forward.target())) return false;
  bool iso = false;
  if (auto inv = inverse_table(t)) {
    iso = is_partition_hom(*inv, forward.target(), forward.source());
  }
  if (isomorphism != iso) return false;
  if (backward.has_value() != iso) return false;
  return !backward || then(t, backward->table()) == FunctionTable::identity(t.source());
}

DualityWitness psi_witness(const Bpa& bpa) {
  PartitionHom forward = psi(bpa);
  DualityWitness w{forward, std::nullopt};
  w.injective = forward.table().is_injective();
  w.partition_hom = is_partition_hom(forward.table(), forward.source(), forward.target());
  if (auto inv = inverse_table(forward.table())) {
    if (is_partition_hom(*inv, forward.target(), forward.source())) {
      w.backward = PartitionHom::make(std::move(*inv), forward.target(), forward.source());
      w.isomorphism = true;
    }
  }
  return w;
}

PartitionHom b_star_map(const UniformMap& f) {
  if (!is_uniformly_continuous(f)) throw UniformContinuityError("map is not uniformly continuous");
  const InducedBpa source = algebra_of_space(f.target());
  const InducedBpa target = algebra_of_space(f.source());
  auto table =
      FunctionTable::from_function(source.bpa.algebra, target.bpa.algebra, [&](const Element& r) {
        auto local = target.embedding.from_parent(f.preimage(source.embedding.to_parent(r)));
        if (!local) throw ConsistencyError("preimage left B*(X, M)");
        return *local;
      });
  if (!is_partition_hom(table, source.bpa, target.bpa)) {
    throw ConsistencyError("B*(f) is not a partition homomorphism");
  }
  return PartitionHom::make(std::move(table), source.bpa, target.bpa);
}

UniformMap s_star_map(const PartitionHom& phi) {
  const Bpa& a = phi.source();
  const Bpa& b = phi.target();
  const auto spectrum_a = enumerate_f_ultrafilters(a);
  const auto spectrum_b = enumerate_f_ultrafilters(b);
  std::vector<int> table;
  for (const auto& v : spectrum_b) {
    const auto member = [&](const Element& x) { return v.contains(phi(x)); };
    if (!is_f_ultrafilter(a, member)) {
      throw ConsistencyError("preimage of an F-ultrafilter is not an F-ultrafilter");
    }
    const auto u = FUltrafilter::from_membership(a.algebra, member);
    table.push_back(static_cast<int>(index_in(spectrum_a, u)));
  }
  UniformMap out(spectrum_space(b), spectrum_space(a), std::move(table));
  if (!is_uniformly_continuous(out)) throw ConsistencyError("S*(phi) is not uniformly continuous");
  return out;
}

UniformMap c_uniform_map(const PartitionSpace& x) {
  const InducedBpa induced = algebra_of_space(x);
  const auto spectrum = enumerate_f_ultrafilters(induced.bpa);
  std::vector<int> table;
  for (int point = 0; point < x.points(); ++point) {
    table.push_back(static_cast<int>(index_in(spectrum, c_map(x, point))));
  }
  return UniformMap(x, spectrum_space(induced.bpa), std::move(table));
}

bool has_dense_image(const UniformMap& f) {
  Mask image = 0;
  for (int y : f.table()) image |= Mask{1} << y;
  for (Mask block : f.target().crevasses().base().blocks()) {
    if ((block & image) == 0) return false;
  }
  return true;
}

bool is_uniform_embedding(const UniformMap& f) {
  if (!f.is_injective()) return false;
  const Partition pulled = f.preimage(f.target().crevasses().base());
  const auto gens = f.source().crevasses().generators();
  return std::all_of(gens.begin(), gens.end(),
                     [&](const Partition& p) { return refines(pulled, p); });
}

Completion completion(const PartitionSpace& x) {
  UniformMap c = c_uniform_map(x);
  CompletionReport report;
  report.uniformly_continuous = is_uniformly_continuous(c);
  report.dense = has_dense_image(c);
  report.embedding = report.uniformly_continuous && is_uniform_embedding(c);
  report.homeomorphism = report.embedding && c.is_surjective();
  PartitionSpace space = c.target();
  return Completion{std::move(space), std::move(c), report};
}

}  // namespace pdual
