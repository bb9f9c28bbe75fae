#include "oracles.hpp"

#include <algorithm>

#include "pdual/errors.hpp"

namespace pdual::oracle {

namespace {

void extend(Mask uncovered, std::vector<Mask>& blocks, std::vector<std::vector<Mask>>& out) {
  if (uncovered == 0) {
    auto sorted = blocks;
    std::sort(sorted.begin(), sorted.end(), [](Mask a, Mask b) { return (a & -a) < (b & -b); });
    out.push_back(std::move(sorted));
    return;
  }
  const Mask least = uncovered & -uncovered;
  for (Mask b = uncovered; b != 0; b = (b - 1) & uncovered) {
    if ((b & least) == 0) continue;
    blocks.push_back(b);
    extend(uncovered & ~b, blocks, out);
    blocks.pop_back();
  }
}

Mask top(int atoms) { return (Mask{1} << atoms) - 1; }

bool contains(ElementSet s, Mask x) { return (s >> x) & 1U; }

std::vector<Mask> blocks_of(const Partition& p) { return {p.blocks().begin(), p.blocks().end()}; }

}  // namespace

std::vector<std::vector<Mask>> partitions(int atoms) {
  std::vector<std::vector<Mask>> out;
  std::vector<Mask> blocks;
  extend(top(atoms), blocks, out);
  return out;
}

bool refines(const std::vector<Mask>& a, const std::vector<Mask>& b) {
  return std::all_of(a.begin(), a.end(), [&](Mask x) {
    return std::any_of(b.begin(), b.end(), [&](Mask y) { return (x & ~y) == 0; });
  });
}

std::optional<std::vector<Mask>> greatest_lower_bound(int atoms, const std::vector<Mask>& p,
                                                      const std::vector<Mask>& q) {
  const auto all = partitions(atoms);
  std::vector<std::vector<Mask>> lower;
  for (const auto& r : all) {
    if (refines(r, p) && refines(r, q)) lower.push_back(r);
  }
  std::optional<std::vector<Mask>> found;
  for (const auto& r : lower) {
    const bool greatest =
        std::all_of(lower.begin(), lower.end(), [&](const auto& s) { return refines(s, r); });
    if (greatest) {
      if (found) return std::nullopt;
      found = r;
    }
  }
  return found;
}

bool is_maximal_cellular(int atoms, const std::vector<Mask>& family) {
  for (Mask x = 1; x <= top(atoms); ++x) {
    if (std::find(family.begin(), family.end(), x) != family.end()) continue;
    const bool disjoint =
        std::all_of(family.begin(), family.end(), [&](Mask b) { return (b & x) == 0; });
    if (disjoint) return false;
  }
  return true;
}

std::vector<std::vector<Mask>> members(const Bpa& bpa) {
  const auto base = blocks_of(bpa.filter.base());
  std::vector<std::vector<Mask>> out;
  for (auto& p : partitions(bpa.algebra.atoms())) {
    if (refines(base, p)) out.push_back(std::move(p));
  }
  return out;
}

Validity validity(const Bpa& bpa) {
  const int n = bpa.algebra.atoms();
  const auto ms = members(bpa);
  const auto has_member = [&](std::vector<Mask> p) {
    std::sort(p.begin(), p.end(), [](Mask a, Mask b) { return (a & -a) < (b & -b); });
    return std::find(ms.begin(), ms.end(), p) != ms.end();
  };
  Validity v{true, true, true};
  for (Mask b = 1; b < top(n); ++b) {
    if (!has_member({b, top(n) & ~b})) v.complement_pairs = false;
  }
  for (Mask b = 1; b <= top(n); ++b) {
    const bool covered = std::any_of(ms.begin(), ms.end(), [&](const auto& p) {
      return std::find(p.begin(), p.end(), b) != p.end();
    });
    if (!covered) v.covers_elements = false;
  }
  v.all_finite_partitions = ms.size() == partitions(n).size();
  return v;
}

bool is_f_ultrafilter(const Bpa& bpa, ElementSet set) {
  const int n = bpa.algebra.atoms();
  if (n > 6) throw CapacityError("oracle limited to 6 atoms");
  if (contains(set, 0) || !contains(set, top(n))) return false;
  for (Mask x = 0; x <= top(n); ++x) {
    if (contains(set, x) == contains(set, top(n) & ~x)) return false;
    for (Mask y = 0; y <= top(n); ++y) {
      if (contains(set, x) && contains(set, y) && !contains(set, x & y)) return false;
      if (contains(set, x) && (x & ~y) == 0 && !contains(set, y)) return false;
    }
  }
  for (const auto& p : members(bpa)) {
    const auto hits = std::count_if(p.begin(), p.end(), [&](Mask b) { return contains(set, b); });
    if (hits != 1) return false;
  }
  return true;
}

std::vector<ElementSet> f_ultrafilters(const Bpa& bpa) {
  const int n = bpa.algebra.atoms();
  if (n > 4) throw CapacityError("ultrafilter oracle limited to 4 atoms");
  const std::uint64_t subsets = std::uint64_t{1} << (std::uint64_t{1} << n);
  std::vector<ElementSet> out;
  for (ElementSet s = 0; s < subsets; ++s) {
    // Cheap necessary conditions first: contains 1, not 0.
    if (!contains(s, top(n)) || contains(s, 0)) continue;
    if (is_f_ultrafilter(bpa, s)) out.push_back(s);
  }
  return out;
}

std::vector<std::vector<Mask>> coherent_selections(const Bpa& bpa,
                                                   const std::vector<std::vector<Mask>>& ms) {
  std::vector<std::vector<Mask>> out;
  std::vector<Mask> chosen;
  const auto consistent = [&](std::size_t i, Mask b) {
    for (std::size_t j = 0; j < chosen.size(); ++j) {
      // Whenever one member refines another, the chosen blocks must nest.
      if (refines(ms[i], ms[j]) && (b & ~chosen[j]) != 0) return false;
      if (refines(ms[j], ms[i]) && (chosen[j] & ~b) != 0) return false;
    }
    return true;
  };
  std::function<void(std::size_t)> dfs = [&](std::size_t i) {
    if (i == ms.size()) {
      Mask core = top(bpa.algebra.atoms());
      for (Mask b : chosen) core &= b;
      if (core != 0) out.push_back(chosen);
      return;
    }
    for (Mask b : ms[i]) {
      if (!consistent(i, b)) continue;
      chosen.push_back(b);
      dfs(i + 1);
      chosen.pop_back();
    }
  };
  dfs(0);
  return out;
}

bool is_homomorphism(const FunctionTable& f) {
  const int n = f.source().atoms();
  if (f.apply(0) != 0) return false;
  Mask seen = 0;
  for (int a = 0; a < n; ++a) {
    const Mask img = f.apply(Mask{1} << a);
    if ((img & seen) != 0) return false;
    seen |= img;
  }
  if (seen != f.target().top_mask()) return false;
  for (Mask x = 0; x <= top(n); ++x) {
    Mask expected = 0;
    for (int a = 0; a < n; ++a) {
      if ((x >> a) & 1U) expected |= f.apply(Mask{1} << a);
    }
    if (f.apply(x) != expected) return false;
  }
  return true;
}

bool is_separating(const PartitionSpace& x) {
  const Bpa as_bpa(x.crevasses());
  const auto ms = members(as_bpa);
  for (int a = 0; a < x.points(); ++a) {
    for (int b = a + 1; b < x.points(); ++b) {
      const bool separated = std::any_of(ms.begin(), ms.end(), [&](const auto& p) {
        return std::any_of(p.begin(), p.end(), [&](Mask blk) {
          return ((blk >> a) & 1U) != ((blk >> b) & 1U);
        });
      });
      if (!separated) return false;
    }
  }
  return true;
}

bool is_complete(const PartitionSpace& x) {
  if (!oracle::is_separating(x)) return false;
  const Bpa as_bpa(x.crevasses());
  const auto ms = members(as_bpa);
  const Mask all = top(x.points());
  const auto neighbourhood = [&](int point) {
    Mask n = all;
    for (const auto& p : ms) {
      for (Mask blk : p) {
        if ((blk >> point) & 1U) n &= blk;
      }
    }
    return n;
  };
  for (Mask s = 1; s <= all; ++s) {
    const bool cauchy = std::all_of(ms.begin(), ms.end(), [&](const auto& p) {
      return std::any_of(p.begin(), p.end(), [&](Mask blk) { return (s & ~blk) == 0; });
    });
    if (!cauchy) continue;
    bool converges = false;
    for (int point = 0; point < x.points() && !converges; ++point) {
      converges = (s & ~neighbourhood(point)) == 0;
    }
    if (!converges) return false;
  }
  return true;
}

}  // namespace pdual::oracle
