#include "pdual/boolean_core.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "pdual/errors.hpp"

namespace pdual {

namespace {

void require_same(const Element& x, const Element& y) {
  if (x.atoms() != y.atoms()) {
    throw AlgebraMismatch("elements from algebras with " + std::to_string(x.atoms()) + " and " +
                          std::to_string(y.atoms()) + " atoms");
  }
}

}  // namespace

Algebra::Algebra(int atoms) : atoms_(atoms) {
  if (atoms < 1 || atoms > kMaxAtoms) {
    throw InvalidInput("atom count must lie in [1, " + std::to_string(kMaxAtoms) + "], got " +
                       std::to_string(atoms));
  }
}

Element Algebra::zero() const { return Element(atoms_, 0); }

Element Algebra::one() const { return Element(atoms_, top_mask()); }

Element Algebra::atom(int i) const {
  if (i < 0 || i >= atoms_) {
    throw InvalidInput("atom " + std::to_string(i) + " outside algebra with " +
                       std::to_string(atoms_) + " atoms");
  }
  return Element(atoms_, Mask{1} << i);
}

Element Algebra::element(Mask bits) const {
  if ((bits & ~top_mask()) != 0) {
    throw InvalidInput("mask has bits outside algebra with " + std::to_string(atoms_) + " atoms");
  }
  return Element(atoms_, bits);
}

Element Algebra::from_atoms(std::span<const int> atoms) const {
  Mask bits = 0;
  for (int a : atoms) bits |= atom(a).bits();
  return Element(atoms_, bits);
}

Element Algebra::from_atoms(std::initializer_list<int> atoms) const {
  return from_atoms(std::span<const int>(atoms.begin(), atoms.size()));
}

std::vector<Element> Algebra::elements() const {
  std::vector<Element> out;
  out.reserve(size());
  for (Mask m = 0; m <= top_mask(); ++m) out.push_back(Element(atoms_, m));
  return out;
}

bool Algebra::contains(const Element& x) const noexcept { return x.atoms() == atoms_; }

int Element::popcount() const noexcept { return std::popcount(bits_); }

std::vector<int> Element::atom_list() const {
  std::vector<int> out;
  for (Mask m = bits_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

Element meet(const Element& x, const Element& y) {
  require_same(x, y);
  return Algebra(x.atoms()).element(x.bits() & y.bits());
}

Element join(const Element& x, const Element& y) {
  require_same(x, y);
  return Algebra(x.atoms()).element(x.bits() | y.bits());
}

Element complement(const Element& x) {
  const Algebra a(x.atoms());
  return a.element(~x.bits() & a.top_mask());
}

bool leq(const Element& x, const Element& y) {
  require_same(x, y);
  return (x.bits() & ~y.bits()) == 0;
}

Element join_all(const Algebra& algebra, std::span<const Element> family) {
  Element acc = algebra.zero();
  for (const auto& x : family) acc = join(acc, x);
  return acc;
}

std::string to_string(const Element& x) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (int a : x.atom_list()) {
    if (!first) os << ',';
    os << a;
    first = false;
  }
  os << ']';
  return os.str();
}

FunctionTable::FunctionTable(Algebra source, Algebra target, std::vector<Mask> images)
    : source_(source), target_(target), images_(std::move(images)) {
  if (images_.size() != source_.size()) {
    throw InvalidInput("function table has " + std::to_string(images_.size()) +
                       " entries, source algebra has " + std::to_string(source_.size()) +
                       " elements");
  }
  for (Mask m : images_) {
    if ((m & ~target_.top_mask()) != 0) throw InvalidInput("function table image outside target");
  }
}

FunctionTable FunctionTable::identity(const Algebra& algebra) {
  std::vector<Mask> images(algebra.size());
  for (Mask m = 0; m < images.size(); ++m) images[m] = m;
  return FunctionTable(algebra, algebra, std::move(images));
}

FunctionTable FunctionTable::from_function(const Algebra& source, const Algebra& target,
                                           const std::function<Element(const Element&)>& fn) {
  std::vector<Mask> images;
  images.reserve(source.size());
  for (const auto& x : source.elements()) {
    const Element y = fn(x);
    if (!target.contains(y)) throw AlgebraMismatch("function value outside target algebra");
    images.push_back(y.bits());
  }
  return FunctionTable(source, target, std::move(images));
}

Element FunctionTable::operator()(const Element& x) const {
  if (!source_.contains(x)) throw AlgebraMismatch("argument outside source algebra");
  return target_.element(images_[x.bits()]);
}

bool FunctionTable::is_injective() const {
  std::vector<Mask> sorted(images_);
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool FunctionTable::is_surjective() const {
  std::vector<bool> hit(target_.size(), false);
  for (Mask m : images_) hit[m] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

FunctionTable then(const FunctionTable& f, const FunctionTable& g) {
  if (f.target() != g.source()) throw AlgebraMismatch("cannot compose: f.target != g.source");
  std::vector<Mask> images(f.source().size());
  for (Mask m = 0; m < images.size(); ++m) images[m] = g.apply(f.apply(m));
  return FunctionTable(f.source(), g.target(), std::move(images));
}

std::vector<Element> image(const FunctionTable& f, std::span<const Element> family) {
  std::vector<Element> out;
  out.reserve(family.size());
  for (const auto& x : family) out.push_back(f(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_extended_partition(std::span<const Element> family) {
  if (family.empty()) return false;
  const Algebra algebra = family.front().algebra();
  Mask seen = 0;
  for (const auto& x : family) {
    if (!algebra.contains(x)) throw AlgebraMismatch("extended partition mixes algebras");
    if ((seen & x.bits()) != 0) return false;
    seen |= x.bits();
  }
  return seen == algebra.top_mask();
}

bool is_boolean_homomorphism(const FunctionTable& f) {
  const Mask top_s = f.source().top_mask();
  const Mask top_t = f.target().top_mask();
  if (f.apply(0) != 0 || f.apply(top_s) != top_t) return false;
  for (Mask x = 0; x <= top_s; ++x) {
    if (f.apply(~x & top_s) != (~f.apply(x) & top_t)) return false;
    for (Mask y = x + 1; y <= top_s; ++y) {
      if (f.apply(x & y) != (f.apply(x) & f.apply(y))) return false;
      if (f.apply(x | y) != (f.apply(x) | f.apply(y))) return false;
    }
  }
  return true;
}

bool hom_via_triples(const FunctionTable& f) {
  const Mask top = f.source().top_mask();
  const Mask top_t = f.target().top_mask();
  // (a, b, c) is an extended partition iff c = (a v b)' with a ^ b = 0.
  for (Mask a = 0; a <= top; ++a) {
    const Mask rest = top & ~a;
    // Enumerate every b <= a'.
    for (Mask b = rest;; b = (b - 1) & rest) {
      const Mask c = rest & ~b;
      const Mask fa = f.apply(a), fb = f.apply(b), fc = f.apply(c);
      const bool disjoint = (fa & fb) == 0 && (fa & fc) == 0 && (fb & fc) == 0;
      if (!disjoint || (fa | fb | fc) != top_t) return false;
      if (b == 0) break;
    }
  }
  return true;
}

}  // namespace pdual
