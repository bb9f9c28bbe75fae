#include <algorithm>

#include "check.hpp"
#include "oracles.hpp"

namespace pdual::verify {

namespace {

using Tuple = PartitionTuple;

std::vector<Mask> masks(const CellularFamily& p) { return {p.blocks().begin(), p.blocks().end()}; }

Sweep<Tuple> algebras() {
  return [](const SuiteBounds& b, const std::function<void(const Tuple&)>& visit) {
    for (int n = 1; n <= b.max_atoms; ++n) visit(Tuple{Algebra(n), {}});
  };
}

Sweep<Tuple> singles() {
  return [](const SuiteBounds& b, const std::function<void(const Tuple&)>& visit) {
    for (int n = 1; n <= b.max_atoms; ++n) {
      const Algebra a(n);
      for (const auto& p : enumerate_partitions(a)) visit(Tuple{a, {p}});
    }
  };
}

Sweep<Tuple> unordered_pairs() {
  return [](const SuiteBounds& b, const std::function<void(const Tuple&)>& visit) {
    for (int n = 1; n <= b.max_atoms; ++n) {
      const Algebra a(n);
      const auto all = enumerate_partitions(a);
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) visit(Tuple{a, {all[i], all[j]}});
      }
    }
  };
}

Sweep<Tuple> refining_pairs() {
  return [](const SuiteBounds& b, const std::function<void(const Tuple&)>& visit) {
    for (int n = 1; n <= b.max_atoms; ++n) {
      const Algebra a(n);
      const auto all = enumerate_partitions(a);
      for (const auto& p : all) {
        for (const auto& q : all) {
          if (oracle::refines(masks(p), masks(q))) visit(Tuple{a, {p, q}});
        }
      }
    }
  };
}

Sweep<Tuple> triples(bool chains_only) {
  return [chains_only](const SuiteBounds& b, const std::function<void(const Tuple&)>& visit) {
    for (int n = 1; n <= b.max_atoms; ++n) {
      const Algebra a(n);
      const auto all = enumerate_partitions(a);
      for (const auto& p : all) {
        for (const auto& q : all) {
          if (chains_only && !oracle::refines(masks(p), masks(q))) continue;
          for (const auto& r : all) {
            if (chains_only && !oracle::refines(masks(q), masks(r))) continue;
            visit(Tuple{a, {p, q, r}});
          }
        }
      }
    }
  };
}

struct FamilyInstance {
  Algebra algebra;
  CellularFamily family;
};

CheckDef tuple_check(std::string name, Sweep<Tuple> sweep, std::function<bool(const Tuple&)> holds) {
  return make_check<Tuple>(std::move(name), std::move(sweep), std::move(holds), encode_tuple,
                           decode_tuple);
}

bool partition_count(const Tuple& t) {
  const auto lib = enumerate_partitions(t.algebra);
  auto brute = oracle::partitions(t.algebra.atoms());
  if (lib.size() != bell_number(t.algebra.atoms()) || lib.size() != brute.size()) return false;
  std::vector<std::vector<Mask>> lib_masks;
  for (const auto& p : lib) lib_masks.push_back(masks(p));
  std::sort(lib_masks.begin(), lib_masks.end());
  std::sort(brute.begin(), brute.end());
  return lib_masks == brute;
}

bool order_laws(const Tuple& t) {
  const auto& p = t.parts[0];
  const auto& q = t.parts[1];
  const auto& r = t.parts[2];
  if (refines(p, q) != oracle::refines(masks(p), masks(q))) return false;
  if (!refines(p, p)) return false;
  if (refines(p, q) && refines(q, p) && !(p == q)) return false;
  return !(refines(p, q) && refines(q, r)) || refines(p, r);
}

bool inverse_system(const Tuple& t) {
  const auto& p = t.parts[0];
  const auto& q = t.parts[1];
  const auto& r = t.parts[2];
  const auto id = coarsening_map(p, p);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (id.assignment()[i] != i) return false;
  }
  const auto pq = coarsening_map(p, q);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if ((p.blocks()[i] & ~q.blocks()[pq.assignment()[i]]) != 0) return false;
  }
  return then(pq, coarsening_map(q, r)) == coarsening_map(p, r);
}

bool meet_is_glb(const Tuple& t) {
  const auto& p = t.parts[0];
  const auto& q = t.parts[1];
  const auto glb = oracle::greatest_lower_bound(t.algebra.atoms(), masks(p), masks(q));
  if (!glb) return false;
  const Partition m = meet(p, q);
  return masks(m) == *glb && m == meet(q, p);
}

bool join_decomposition(const Tuple& t) {
  const auto& p = t.parts[0];
  const auto& q = t.parts[1];
  for (const auto& b : q.elements()) {
    std::vector<Element> below;
    for (const auto& a : p.elements()) {
      if (leq(a, b)) below.push_back(a);
    }
    if (join_all(t.algebra, below) != b) return false;
  }
  return true;
}

bool maximal_cellular(const FamilyInstance& f) {
  const auto blocks = f.family.elements();
  const bool maximal = oracle::is_maximal_cellular(f.algebra.atoms(), masks(f.family));
  if (is_partition(blocks) != maximal) return false;
  const Partition extended = extend_to_maximal_cellular(f.family);
  if (!oracle::is_maximal_cellular(f.algebra.atoms(), masks(extended))) return false;
  return std::all_of(f.family.blocks().begin(), f.family.blocks().end(),
                     [&](Mask b) { return extended.has_block(b); });
}

bool subcomplete_embedding_laws(const Tuple& t) {
  const auto& p = t.parts[0];
  if (!is_subcomplete(p)) return false;
  const FunctionTable e = subcomplete_embedding(p);
  if (!oracle::is_homomorphism(e) || !e.is_injective()) return false;
  for (Mask r = 0; r < e.source().size(); ++r) {
    Mask joined = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if ((r >> i) & 1U) joined |= p.blocks()[i];
    }
    if (e.apply(r) != joined) return false;
  }
  return true;
}

}  // namespace

std::vector<CheckDef> lattice_checks() {
  std::vector<CheckDef> out;
  out.push_back(tuple_check("lattice.partition_count", algebras(), partition_count));
  out.push_back(tuple_check("lattice.order_laws", triples(false), order_laws));
  out.push_back(tuple_check("lattice.inverse_system", triples(true), inverse_system));
  out.push_back(tuple_check("lattice.meet_is_glb", unordered_pairs(), meet_is_glb));
  out.push_back(tuple_check("lattice.join_decomposition", refining_pairs(), join_decomposition));
  out.push_back(make_check<FamilyInstance>(
      "lattice.maximal_cellular_is_partition",
      [](const SuiteBounds& b, const std::function<void(const FamilyInstance&)>& visit) {
        for (int n = 1; n <= b.max_atoms; ++n) {
          const Algebra a(n);
          for (const auto& c : enumerate_cellular_families(a)) visit(FamilyInstance{a, c});
        }
      },
      maximal_cellular,
      [](const FamilyInstance& f) {
        return Json{{"algebra", to_record(f.algebra)}, {"family", to_record(f.family)}};
      },
      [](const Json& j) {
        const Algebra a = algebra_from_record(j.at("algebra"));
        std::vector<Mask> blocks;
        for (const auto& b : j.at("family")) blocks.push_back(element_from_record(a, b).bits());
        return FamilyInstance{a, CellularFamily::make(a, std::move(blocks))};
      }));
  out.push_back(
      tuple_check("lattice.subcomplete_embedding", singles(), subcomplete_embedding_laws));
  return out;
}

}  // namespace pdual::verify
