#include <algorithm>

#include "check.hpp"
#include "oracles.hpp"
#include "pdual/duality.hpp"

namespace pdual::verify {

namespace {

Sweep<PartitionSpace> spaces() {
  return [](const SuiteBounds& b, const std::function<void(const PartitionSpace&)>& visit) {
    for (const auto& x : principal_spaces(b.max_points)) visit(x);
  };
}

// The valid BPAs: the induced algebra of every principal filter.
Sweep<Bpa> valid_bpas() {
  return [](const SuiteBounds& b, const std::function<void(const Bpa&)>& visit) {
    for (const auto& bpa : principal_bpas(b.max_atoms)) visit(induced_bpa(bpa.algebra, bpa.filter).bpa);
  };
}

CheckDef space_check(std::string name, std::function<bool(const PartitionSpace&)> holds) {
  return make_check<PartitionSpace>(
      std::move(name), spaces(), std::move(holds),
      [](const PartitionSpace& x) { return to_record(x); }, space_from_record);
}

CheckDef bpa_check(std::string name, std::function<bool(const Bpa&)> holds) {
  return make_check<Bpa>(
      std::move(name), valid_bpas(), std::move(holds), [](const Bpa& b) { return to_record(b); },
      bpa_from_record);
}

CheckDef map_chain_check(std::string name, std::size_t length,
                          std::function<bool(const std::vector<UniformMap>&)> holds) {
  Sweep<MapChain> sweep = [length](const SuiteBounds& b,
                                   const std::function<void(const MapChain&)>& visit) {
    const auto maps = uniform_maps(b.max_morphism_size);
    for (const auto& f : maps) {
      if (length == 1) {
        visit(MapChain{{f}});
        continue;
      }
      for (const auto& g : maps) {
        if (f.target() == g.source()) visit(MapChain{{f, g}});
      }
    }
  };
  auto typed = [holds](const MapChain& c) { return holds(c.links); };
  return make_check<MapChain>(
      std::move(name), std::move(sweep), typed, [](const MapChain& c) { return encode_chain(c); },
      decode_map_chain);
}

CheckDef hom_chain_check(std::string name, std::size_t length,
                          std::function<bool(const std::vector<PartitionHom>&)> holds) {
  Sweep<MorphismChain> sweep = [length](const SuiteBounds& b,
                                        const std::function<void(const MorphismChain&)>& visit) {
    const auto homs = full_partition_homs(b.max_morphism_size);
    const auto record = [](const PartitionHom& f) {
      return MorphismRecord{f.source(), f.target(), f.table()};
    };
    for (const auto& f : homs) {
      if (length == 1) {
        visit(MorphismChain{{record(f)}});
        continue;
      }
      for (const auto& g : homs) {
        if (f.target().algebra == g.source().algebra) visit(MorphismChain{{record(f), record(g)}});
      }
    }
  };
  auto typed = [holds](const MorphismChain& c) {
    std::vector<PartitionHom> links;
    for (const auto& m : c.links) links.push_back(PartitionHom::make(m.table, m.source, m.target));
    return holds(links);
  };
  return make_check<MorphismChain>(
      std::move(name), std::move(sweep), typed,
      [](const MorphismChain& c) { return encode_chain(c); }, decode_chain);
}

bool space_algebra_laws(const PartitionSpace& x) {
  const auto a = algebra_of_space(x);
  const auto s = stability_report(a.bpa);
  return a.bpa.subcomplete() && s.stable() && s.agree() && validate_bpa(a.bpa).all();
}

bool spectrum_space_laws(const Bpa& b) {
  const PartitionSpace s = spectrum_space(b);
  if (!is_separating(s) || !is_complete(s)) return false;
  if (!oracle::is_separating(s) || !oracle::is_complete(s)) return false;
  const auto spectrum = enumerate_f_ultrafilters(b);
  std::vector<Partition> images;
  for (const auto& p : b.filter.members()) images.push_back(iota_image(spectrum, p));
  auto members = s.crevasses().members();
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  std::sort(members.begin(), members.end());
  return images == members;
}

bool psi_is_isomorphism(const Bpa& b) {
  const auto w = psi_witness(b);
  return w.injective && w.partition_hom && w.isomorphism && w.recheck();
}

bool completion_grading(const PartitionSpace& x) {
  const bool separating = is_separating(x);
  if (separating != oracle::is_separating(x)) return false;
  const Completion c = completion(x);
  const auto& r = c.report;
  return r.uniformly_continuous && r.dense && r.embedding == separating &&
         r.homeomorphism == separating && c.c.is_injective() == separating &&
         is_separating(c.space) && is_complete(c.space);
}

bool completeness_matches(const PartitionSpace& x) { return is_complete(x) == oracle::is_complete(x); }

bool round_trip_algebra(const PartitionSpace& x) {
  const Bpa a = algebra_of_space(x).bpa;
  const PartitionHom back = b_star_map(c_uniform_map(x));
  return compose(psi(a), back).table() == FunctionTable::identity(a.algebra);
}

bool round_trip_space(const Bpa& b) {
  const PartitionSpace s = spectrum_space(b);
  const UniformMap composite = then(c_uniform_map(s), s_star_map(psi(b)));
  return composite == UniformMap::identity(s);
}

bool naturality_spaces(const std::vector<UniformMap>& c) {
  const UniformMap& f = c[0];
  const UniformMap lhs = then(c_uniform_map(f.source()), s_star_map(b_star_map(f)));
  const UniformMap rhs = then(f, c_uniform_map(f.target()));
  return lhs == rhs;
}

bool naturality_algebras(const std::vector<PartitionHom>& c) {
  const PartitionHom& phi = c[0];
  const PartitionHom lhs = compose(psi(phi.source()), b_star_map(s_star_map(phi)));
  const PartitionHom rhs = compose(phi, psi(phi.target()));
  return lhs.table() == rhs.table();
}

bool functor_laws_spaces(const std::vector<UniformMap>& c) {
  const UniformMap& f = c[0];
  const UniformMap& g = c[1];
  const UniformMap gf = then(f, g);
  if (!is_uniformly_continuous(gf)) return false;
  if (b_star_map(gf).table() != compose(b_star_map(g), b_star_map(f)).table()) return false;
  return b_star_map(UniformMap::identity(f.source())).table() ==
         FunctionTable::identity(algebra_of_space(f.source()).bpa.algebra);
}

bool functor_laws_algebras(const std::vector<PartitionHom>& c) {
  const PartitionHom& f = c[0];
  const PartitionHom& g = c[1];
  if (!(s_star_map(compose(f, g)) == then(s_star_map(g), s_star_map(f)))) return false;
  return s_star_map(PartitionHom::identity(f.source())) ==
         UniformMap::identity(spectrum_space(f.source()));
}

}  // namespace

std::vector<CheckDef> duality_checks() {
  std::vector<CheckDef> out;
  out.push_back(space_check("duality.space_algebra_subcomplete_stable", space_algebra_laws));
  out.push_back(bpa_check("duality.spectrum_space_separating_complete", spectrum_space_laws));
  out.push_back(bpa_check("duality.psi_isomorphism", psi_is_isomorphism));
  out.push_back(space_check("duality.completion_grading", completion_grading));
  out.push_back(space_check("duality.completeness_matches_cauchy", completeness_matches));
  out.push_back(space_check("duality.round_trip_algebra", round_trip_algebra));
  out.push_back(bpa_check("duality.round_trip_space", round_trip_space));
  out.push_back(map_chain_check("duality.naturality_spaces", 1, naturality_spaces));
  out.push_back(hom_chain_check("duality.naturality_algebras", 1, naturality_algebras));
  out.push_back(map_chain_check("duality.functor_laws_spaces", 2, functor_laws_spaces));
  out.push_back(hom_chain_check("duality.functor_laws_algebras", 2, functor_laws_algebras));
  return out;
}

}  // namespace pdual::verify
