#include <algorithm>

#include "check.hpp"
#include "oracles.hpp"

namespace pdual::verify {

namespace {

constexpr std::size_t kMaxTables = std::size_t{1} << 16;

using Visit = std::function<void(const MorphismRecord&)>;

std::size_t table_count(int a, int b) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < (std::size_t{1} << a); ++i) {
    count *= std::size_t{1} << b;
    if (count > kMaxTables) return kMaxTables + 1;
  }
  return count;
}

// Every table between full BPAs on a and b atoms, for every pair small enough
// to sweep exhaustively.
void all_tables(const SuiteBounds& bounds, const Visit& visit) {
  for (int a = 1; a <= bounds.max_morphism_size; ++a) {
    for (int b = 1; b <= bounds.max_morphism_size; ++b) {
      if (table_count(a, b) > kMaxTables) continue;
      const Bpa source = make_full_bpa(Algebra(a));
      const Bpa target = make_full_bpa(Algebra(b));
      std::vector<Mask> images(source.algebra.size(), 0);
      while (true) {
        visit(MorphismRecord{source, target, FunctionTable(source.algebra, target.algebra, images)});
        std::size_t i = 0;
        while (i < images.size() && ++images[i] == target.algebra.size()) images[i++] = 0;
        if (i == images.size()) break;
      }
    }
  }
}

// Every homomorphism between principal-filter BPAs on at most max atoms.
void homs_between_filters(const SuiteBounds& bounds, const Visit& visit) {
  const auto bpas = principal_bpas(bounds.max_morphism_size);
  for (const auto& s : bpas) {
    for (const auto& t : bpas) {
      for (auto& f : enumerate_homomorphisms(s.algebra, t.algebra)) visit(MorphismRecord{s, t, f});
    }
  }
}

CheckDef morphism_check(std::string name, Sweep<MorphismRecord> sweep,
                         std::function<bool(const MorphismRecord&)> holds) {
  return make_check<MorphismRecord>(
      std::move(name), std::move(sweep), std::move(holds),
      [](const MorphismRecord& m) { return to_record(m); }, morphism_from_record);
}

CheckDef chain_check(std::string name, std::size_t length,
                      std::function<bool(const std::vector<PartitionHom>&)> holds) {
  Sweep<MorphismChain> sweep = [length](const SuiteBounds& b,
                                        const std::function<void(const MorphismChain&)>& visit) {
    const auto homs = full_partition_homs(b.max_morphism_size);
    std::vector<const PartitionHom*> chain;
    std::function<void()> grow = [&] {
      if (chain.size() == length) {
        MorphismChain c;
        for (const auto* f : chain) c.links.push_back({f->source(), f->target(), f->table()});
        visit(c);
        return;
      }
      for (const auto& f : homs) {
        if (!chain.empty() && chain.back()->target().algebra != f.source().algebra) continue;
        chain.push_back(&f);
        grow();
        chain.pop_back();
      }
    };
    grow();
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

bool triples_iff_axioms(const MorphismRecord& m) {
  const bool axioms = is_boolean_homomorphism(m.table);
  return hom_via_triples(m.table) == axioms && oracle::is_homomorphism(m.table) == axioms;
}

bool extended_iff_partitional(const MorphismRecord& m) {
  const bool partitional = is_partitional(m.table, m.source, m.target.algebra);
  return partitional_via_extended(m.table, m.source) == partitional &&
         is_partitional_unreduced(m.table, m.source, m.target.algebra) == partitional;
}

bool enumeration_complete(const MorphismRecord& m) {
  // Only the two algebras of m matter here.
  const auto homs = enumerate_homomorphisms(m.source.algebra, m.target.algebra);
  std::vector<std::vector<Mask>> listed;
  for (const auto& f : homs) {
    if (!oracle::is_homomorphism(f)) return false;
    listed.emplace_back(f.images().begin(), f.images().end());
  }
  std::sort(listed.begin(), listed.end());
  if (std::adjacent_find(listed.begin(), listed.end()) != listed.end()) return false;
  std::size_t expected = 1;
  for (int i = 0; i < m.target.algebra.atoms(); ++i) expected *= m.source.algebra.atoms();
  if (listed.size() != expected) return false;
  if (table_count(m.source.algebra.atoms(), m.target.algebra.atoms()) > kMaxTables) return true;
  std::size_t brute = 0;
  std::vector<Mask> images(m.source.algebra.size(), 0);
  while (true) {
    if (oracle::is_homomorphism(FunctionTable(m.source.algebra, m.target.algebra, images))) ++brute;
    std::size_t i = 0;
    while (i < images.size() && ++images[i] == m.target.algebra.size()) images[i++] = 0;
    if (i == images.size()) break;
  }
  return brute == expected;
}

bool reductions_match(const MorphismRecord& m) {
  return is_partition_hom(m.table, m.source, m.target) ==
             is_partition_hom_unreduced(m.table, m.source, m.target) &&
         is_partitional(m.table, m.source, m.target.algebra) ==
             is_partitional_unreduced(m.table, m.source, m.target.algebra);
}

bool injective_partitional(const MorphismRecord& m) {
  if (!m.table.is_injective() || !is_boolean_homomorphism(m.table)) return true;
  const auto members = m.source.filter.members();
  const bool images_partition = std::all_of(members.begin(), members.end(), [&](const Partition& p) {
    std::vector<Element> family;
    for (const auto& b : p.elements()) family.push_back(m.table(b));
    return is_partition(family);
  });
  return is_partitional(m.table, m.source, m.target.algebra) == images_partition;
}

bool composition(const std::vector<PartitionHom>& c) {
  const auto& f = c[0];
  const auto& g = c[1];
  const PartitionHom gf = compose(f, g);
  if (!is_partitional(gf.table(), f.source(), g.target().algebra)) return false;
  for (const auto& p : f.source().filter.members()) {
    const auto inner = nonzero_image(f.table(), p);
    const auto twice = nonzero_image(g.table(), Partition::make(inner, f.target().algebra));
    if (nonzero_image(gf.table(), p) != twice) return false;
  }
  return true;
}

bool category_laws(const std::vector<PartitionHom>& c) {
  const auto& f = c[0];
  const auto& g = c[1];
  const auto& h = c[2];
  if (!(compose(compose(f, g), h) == compose(f, compose(g, h)))) return false;
  return std::all_of(c.begin(), c.end(), [](const PartitionHom& k) {
    return compose(PartitionHom::identity(k.source()), k) == k &&
           compose(k, PartitionHom::identity(k.target())) == k;
  });
}

}  // namespace

std::vector<CheckDef> hom_checks() {
  std::vector<CheckDef> out;
  out.push_back(morphism_check("hom.triples_iff_axioms", all_tables, triples_iff_axioms));
  out.push_back(morphism_check("hom.extended_iff_partitional", all_tables, extended_iff_partitional));
  out.push_back(morphism_check(
      "hom.enumeration_complete",
      [](const SuiteBounds& b, const Visit& visit) {
        for (int s = 1; s <= b.max_morphism_size; ++s) {
          for (int t = 1; t <= b.max_morphism_size; ++t) {
            const Bpa source = make_full_bpa(Algebra(s));
            const Bpa target = make_full_bpa(Algebra(t));
            auto any = enumerate_homomorphisms(source.algebra, target.algebra).front();
            visit(MorphismRecord{source, target, std::move(any)});
          }
        }
      },
      enumeration_complete));
  out.push_back(morphism_check("hom.reduced_checks_match", homs_between_filters, reductions_match));
  out.push_back(morphism_check("hom.injective_partitional", homs_between_filters, injective_partitional));
  out.push_back(chain_check("hom.composition", 2, composition));
  out.push_back(chain_check("hom.category_laws", 3, category_laws));
  return out;
}

}  // namespace pdual::verify
