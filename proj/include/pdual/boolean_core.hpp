#pragma once

// Finite Boolean algebras presented as powersets of their atoms.
//
// An element is a bitmask over at most 16 atoms together with the atom count
// of the algebra it belongs to; binary operations reject operands from
// different algebras.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace pdual {

using Mask = std::uint32_t;

inline constexpr int kMaxAtoms = 16;

class Element;

class Algebra {
 public:
  /// Throws InvalidInput unless 1 <= atoms <= kMaxAtoms.
  explicit Algebra(int atoms);

  int atoms() const noexcept { return atoms_; }
  Mask top_mask() const noexcept { return (Mask{1} << atoms_) - 1; }
  /// Number of elements, 2^atoms.
  std::size_t size() const noexcept { return std::size_t{1} << atoms_; }

  Element zero() const;
  Element one() const;
  Element atom(int i) const;
  /// Throws InvalidInput if the mask has bits outside the atom range.
  Element element(Mask bits) const;
  Element from_atoms(std::span<const int> atoms) const;
  Element from_atoms(std::initializer_list<int> atoms) const;

  /// Every element, in increasing mask order.
  std::vector<Element> elements() const;

  bool contains(const Element& x) const noexcept;

  friend bool operator==(const Algebra&, const Algebra&) = default;
  friend auto operator<=>(const Algebra&, const Algebra&) = default;

 private:
  int atoms_;
};

class Element {
 public:
  Mask bits() const noexcept { return bits_; }
  int atoms() const noexcept { return atoms_; }
  Algebra algebra() const { return Algebra(atoms_); }

  bool is_zero() const noexcept { return bits_ == 0; }
  bool is_one() const noexcept { return bits_ == ((Mask{1} << atoms_) - 1); }
  bool is_atom() const noexcept { return bits_ != 0 && (bits_ & (bits_ - 1)) == 0; }
  int popcount() const noexcept;
  std::vector<int> atom_list() const;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;

 private:
  friend class Algebra;
  Element(int atoms, Mask bits) : bits_(bits), atoms_(atoms) {}

  Mask bits_ = 0;
  int atoms_ = 1;
};

Element meet(const Element& x, const Element& y);
Element join(const Element& x, const Element& y);
Element complement(const Element& x);
/// x <= y in the algebra order, i.e. atom-set inclusion.
bool leq(const Element& x, const Element& y);

/// Join of a family; 0 for the empty family.
Element join_all(const Algebra& algebra, std::span<const Element> family);

std::string to_string(const Element& x);

/// A total map between the element sets of two finite algebras.
class FunctionTable {
 public:
  /// images[m] is the image of the element with mask m.
  FunctionTable(Algebra source, Algebra target, std::vector<Mask> images);

  static FunctionTable identity(const Algebra& algebra);
  static FunctionTable from_function(const Algebra& source, const Algebra& target,
                                     const std::function<Element(const Element&)>& fn);

  const Algebra& source() const noexcept { return source_; }
  const Algebra& target() const noexcept { return target_; }
  std::span<const Mask> images() const noexcept { return images_; }

  Element operator()(const Element& x) const;
  Mask apply(Mask x) const noexcept { return images_[x]; }

  bool is_injective() const;
  bool is_surjective() const;

  friend bool operator==(const FunctionTable&, const FunctionTable&) = default;

 private:
  Algebra source_;
  Algebra target_;
  std::vector<Mask> images_;
};

/// g o f: apply f first. Throws AlgebraMismatch unless f.target() == g.source().
FunctionTable then(const FunctionTable& f, const FunctionTable& g);

/// f''(S) as a set: duplicates collapse, result sorted.
std::vector<Element> image(const FunctionTable& f, std::span<const Element> family);

/// True iff the indexed family joins to 1 and entries at distinct indices meet to 0.
bool is_extended_partition(std::span<const Element> family);

/// Direct check of the axioms: preserves 0, 1, complement, meet and join.
bool is_boolean_homomorphism(const FunctionTable& f);

/// True iff f carries every extended partition (a, b, c) of the source to an
/// extended partition of the target.
bool hom_via_triples(const FunctionTable& f);

}  // namespace pdual
