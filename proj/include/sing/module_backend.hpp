#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sing/colimit.hpp"
#include "sing/homological.hpp"
#include "sing/stabilization.hpp"

namespace sing {

/// The stable module category (mod A, Ω): morphisms are compared stably.
struct ModuleBackend {
  using Object = RepPtr;
  using Morphism = RepMorphism;

  RepMorphism identity(const RepPtr& x) const { return RepMorphism::identity(x); }
  RepMorphism compose(const RepMorphism& g, const RepMorphism& f) const { return sing::compose(g, f); }
  RepPtr loop(const RepPtr& x) const { return syzygy(x, 1); }
  RepMorphism loop(const RepMorphism& f) const { return syzygy_of_morphism(f); }
  bool equal(const RepMorphism& f, const RepMorphism& g) const { return stably_equal(f, g); }
  bool same_object(const RepPtr& x, const RepPtr& y) const { return x == y || *x == *y; }
};

using ModuleStab = Stabilization<ModuleBackend>;
using ModuleStabObject = StabObject<RepPtr>;
using ModuleStabMorphism = StabMorphism<RepPtr, RepMorphism>;

/// Hom-dimension report of ((X,n),(Y,m)) in the stabilization, through the syzygy tower.
ColimitReport stab_hom_report(const ModuleStabObject& x, const ModuleStabObject& y, std::int64_t p_max,
                              std::size_t window);

/// A functor between module backends commuting strictly with Ω, with a
/// membership test for its essential image (up to isomorphism).
struct ModuleFunctor {
  std::function<RepPtr(const RepPtr&)> object;
  std::function<RepMorphism(const RepMorphism&)> morphism;
  std::function<bool(const RepPtr&)> in_image;
};

enum class EvidenceKind { Witnessed, NotWitnessedUpTo };

struct Evidence {
  EvidenceKind kind;
  std::size_t depth;  ///< largest i needed when witnessed, otherwise the search bound
  std::string detail;
};

struct EquivalenceEvidence {
  Evidence full;
  Evidence faithful;
  Evidence dense;
};

/// Bounded search for the equivalence criteria of the induced functor on
/// stabilizations.  Each asks for some i with a property of Ω^i, so a failed
/// search is reported only as "not witnessed up to depth".
EquivalenceEvidence pre_triangle_equiv_check(const ModuleFunctor& h, const std::vector<RepPtr>& source_objects,
                                             const std::vector<RepPtr>& target_objects, std::size_t depth);

/// Identity functor on modules over one algebra.
ModuleFunctor identity_functor();
/// Inclusion of add(A/r ⊕ A) into mod A.
ModuleFunctor semisimple_plus_projective_inclusion(const AlgebraPtr& alg);
/// The functor sending everything to the zero module.
ModuleFunctor zero_functor(const AlgebraPtr& alg);

/// M ≅ (semisimple) ⊕ (projective).
bool is_semisimple_plus_projective(const RepPtr& m);

}  // namespace sing
