#pragma once

// The contravariant functors between partition algebras and partition spaces,
// the canonical maps psi and C, and completion.
//
//   spectrum_space : Bpa -> PartitionSpace     (S*)
//   algebra_of_space : PartitionSpace -> Bpa   (B*)
//   s_star_map : PartitionHom -> UniformMap    (contravariant)
//   b_star_map : UniformMap -> PartitionHom    (contravariant)
//
// Spectrum points are labeled by their position in enumerate_f_ultrafilters,
// so composites of these maps compare structurally.

#include <optional>
#include <vector>

#include "pdual/morphisms.hpp"
#include "pdual/partition_algebra.hpp"
#include "pdual/partition_space.hpp"

namespace pdual {

/// The spectrum with crevasses generated by iota''(p) for each generator p.
/// Throws ValidityError for a non-BPA, StabilityError for an unstable one.
PartitionSpace spectrum_space(const Bpa& bpa);

/// B*(X, M); verified subcomplete and stable (ConsistencyError otherwise).
InducedBpa algebra_of_space(const PartitionSpace& x);

/// psi(a) = iota(a), into B*(S*(B, F)).
PartitionHom psi(const Bpa& bpa);

/// psi together with the checked outcomes of its laws.
struct DualityWitness {
  PartitionHom forward;
  std::optional<PartitionHom> backward;
  bool injective = false;
  bool partition_hom = false;
  bool isomorphism = false;

  /// Recomputes every recorded outcome from forward/backward.
  bool recheck() const;
};

DualityWitness psi_witness(const Bpa& bpa);

/// B*(f)(R) = f_{-1}(R), from B*(Y, N) to B*(X, M). Throws
/// UniformContinuityError unless f is uniformly continuous.
PartitionHom b_star_map(const UniformMap& f);

/// S*(phi)(U) = phi_{-1}(U), from the spectrum of phi's target to the spectrum
/// of phi's source.
UniformMap s_star_map(const PartitionHom& phi);

/// C as a map X -> S*(B*(X, M)).
UniformMap c_uniform_map(const PartitionSpace& x);

struct CompletionReport {
  bool uniformly_continuous = false;
  bool dense = false;
  bool embedding = false;
  bool homeomorphism = false;
};

struct Completion {
  PartitionSpace space;
  UniformMap c;
  CompletionReport report;
};

/// S*(B*(X, M)) with C, and which of the graded conclusions hold.
Completion completion(const PartitionSpace& x);

/// Every nonempty basic open set (a block of a crevasse) meets the image.
bool has_dense_image(const UniformMap& f);
/// Injective, and every source crevasse is refined by the preimage of some
/// target crevasse.
bool is_uniform_embedding(const UniformMap& f);

}  // namespace pdual
