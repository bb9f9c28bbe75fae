#include <algorithm>

#include "check.hpp"
#include "oracles.hpp"

namespace pdual::verify {

namespace {

constexpr int kOracleAtoms = 4;

Sweep<Bpa> principal() {
  return [](const SuiteBounds& b, const std::function<void(const Bpa&)>& visit) {
    for (const auto& bpa : principal_bpas(b.max_atoms)) visit(bpa);
  };
}

CheckDef bpa_check(std::string name, std::function<bool(const Bpa&)> holds) {
  return make_check<Bpa>(
      std::move(name), principal(), std::move(holds), [](const Bpa& b) { return to_record(b); },
      bpa_from_record);
}

Bpa induced(const Bpa& b) { return induced_bpa(b.algebra, b.filter).bpa; }

std::vector<Partition> member_partitions(const Bpa& b) {
  std::vector<Partition> out;
  for (auto& m : oracle::members(b)) out.push_back(Partition::make(b.algebra, std::move(m)));
  return out;
}

oracle::ElementSet as_set(const Algebra& a, const std::function<bool(const Element&)>& member) {
  oracle::ElementSet s = 0;
  for (const auto& x : a.elements()) {
    if (member(x)) s |= oracle::ElementSet{1} << x.bits();
  }
  return s;
}

bool conditions_equivalent(const Bpa& b) {
  const auto r = validate_bpa(b);
  const auto o = oracle::validity(b);
  if (r.complement_pairs != o.complement_pairs || r.covers_elements != o.covers_elements ||
      r.all_finite_partitions != o.all_finite_partitions || !r.agree()) {
    return false;
  }
  if (r.complement_pairs) return true;
  if (!r.witness) return false;
  const Element w = *r.witness;
  return !b.filter.contains(Partition::make(b.algebra, {w.bits(), complement(w).bits()}));
}

bool induced_is_valid(const Bpa& b) {
  const auto ind = induced_bpa(b.algebra, b.filter);
  const auto o = oracle::validity(ind.bpa);
  if (!validate_bpa(ind.bpa).all() || !o.complement_pairs || !o.covers_elements ||
      !o.all_finite_partitions) {
    return false;
  }
  const auto base = b.filter.base();
  if (ind.bpa.algebra.atoms() != static_cast<int>(base.size())) return false;
  if (!std::equal(base.blocks().begin(), base.blocks().end(), ind.embedding.atom_images().begin(),
                  ind.embedding.atom_images().end())) {
    return false;
  }
  const auto ms = member_partitions(b);
  if (ms.size() != oracle::members(ind.bpa).size()) return false;
  return std::all_of(ms.begin(), ms.end(), [&](const Partition& m) {
    return ind.bpa.filter.contains(ind.embedding.partition_from_parent(m));
  });
}

bool stability_agrees(const Bpa& b) {
  const Bpa ind = induced(b);
  const auto s = stability_report(ind);
  if (!s.agree() || !s.stable() || s.empty_spectrum) return false;
  if (ind.algebra.atoms() > kOracleAtoms) return true;
  oracle::ElementSet covered = 0;
  for (auto u : oracle::f_ultrafilters(ind)) covered |= u;
  const oracle::ElementSet nonzero =
      ((oracle::ElementSet{1} << ind.algebra.size()) - 1) & ~oracle::ElementSet{1};
  return covered == nonzero;
}

bool spectrum_matches(const Bpa& b) {
  if (!validate_bpa(b).all()) {
    try {
      enumerate_f_ultrafilters(b);
      return false;
    } catch (const ValidityError&) {
    }
  }
  const Bpa ind = induced(b);
  const auto spectrum = enumerate_f_ultrafilters(ind);
  if (static_cast<int>(spectrum.size()) != ind.algebra.atoms()) return false;
  if (ind.algebra.atoms() > kOracleAtoms) return true;
  std::vector<oracle::ElementSet> lib;
  for (const auto& u : spectrum) {
    lib.push_back(as_set(ind.algebra, [&](const Element& x) { return u.contains(x); }));
  }
  auto brute = oracle::f_ultrafilters(ind);
  std::sort(lib.begin(), lib.end());
  std::sort(brute.begin(), brute.end());
  return lib == brute;
}

std::vector<InverseLimitPoint> full_support_points(const Bpa& ind) {
  const auto ms = oracle::members(ind);
  std::vector<Partition> support;
  for (const auto& m : ms) support.push_back(Partition::make(ind.algebra, m));
  std::vector<InverseLimitPoint> out;
  for (auto& sel : oracle::coherent_selections(ind, ms)) out.emplace_back(support, std::move(sel));
  return out;
}

bool lm_bijection(const Bpa& b) {
  const Bpa ind = induced(b);
  const auto spectrum = enumerate_f_ultrafilters(ind);
  const auto points = full_support_points(ind);
  const auto members = member_partitions(ind);
  if (points.size() != spectrum.size() || coherent_selections(ind.filter).size() != points.size()) {
    return false;
  }
  std::vector<FUltrafilter> images;
  for (const auto& x : points) {
    if (!x.coherent()) return false;
    const FUltrafilter u = limit_to_ultrafilter(ind, x);
    if (std::find(spectrum.begin(), spectrum.end(), u) == spectrum.end()) return false;
    const auto y = ultrafilter_to_limit(ind, u);
    for (const auto& p : members) {
      if (y.at(p) != x.at(p)) return false;
    }
    images.push_back(u);
  }
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
  return std::all_of(spectrum.begin(), spectrum.end(), [&](const FUltrafilter& u) {
    return limit_to_ultrafilter(ind, ultrafilter_to_limit(ind, u)) == u;
  });
}

bool inverse_limit_meets(const Bpa& b) {
  const Bpa ind = induced(b);
  const auto members = member_partitions(ind);
  for (const auto& x : full_support_points(ind)) {
    for (const auto& p : members) {
      for (const auto& q : members) {
        if (x.at(meet(p, q)) != meet(x.at(p), x.at(q))) return false;
      }
    }
    oracle::ElementSet selected = 0;
    for (const auto& p : members) selected |= oracle::ElementSet{1} << x.at(p).bits();
    if (!oracle::is_f_ultrafilter(ind, selected)) return false;
    for (const auto& e : ind.algebra.elements()) {
      const bool in = (selected >> e.bits()) & 1U;
      bool expected = e.is_one();
      if (!e.is_zero() && !e.is_one()) {
        expected = x.at(Partition::make(ind.algebra, {e.bits(), complement(e).bits()})) == e;
      }
      if (in != expected) return false;
    }
  }
  return true;
}

bool iota_laws(const Bpa& b) {
  const Bpa ind = induced(b);
  const auto spectrum = enumerate_f_ultrafilters(ind);
  const Algebra points(static_cast<int>(spectrum.size()));
  const auto table = FunctionTable::from_function(
      ind.algebra, points, [&](const Element& a) { return iota(spectrum, a); });
  if (!oracle::is_homomorphism(table) || !table.is_injective()) return false;
  const auto members = member_partitions(ind);
  for (const auto& p : members) {
    if (iota_image(spectrum, p).size() != p.size()) return false;
    for (const auto& q : members) {
      const Partition ip = iota_image(spectrum, p);
      const Partition iq = iota_image(spectrum, q);
      if (iota_image(spectrum, meet(p, q)) != meet(ip, iq)) return false;
      if (!(p == q) && ip == iq) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<CheckDef> bpa_checks() {
  std::vector<CheckDef> out;
  out.push_back(bpa_check("bpa.validity_conditions_equivalent", conditions_equivalent));
  out.push_back(bpa_check("bpa.induced_is_valid", induced_is_valid));
  out.push_back(bpa_check("bpa.stability_conditions_agree", stability_agrees));
  out.push_back(bpa_check("bpa.spectrum_matches_brute_force", spectrum_matches));
  out.push_back(bpa_check("bpa.lm_bijection", lm_bijection));
  out.push_back(bpa_check("bpa.inverse_limit_meets", inverse_limit_meets));
  out.push_back(bpa_check("bpa.iota_laws", iota_laws));
  return out;
}

}  // namespace pdual::verify
