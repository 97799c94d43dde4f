#pragma once

#include <random>

#include "sing/representation.hpp"

namespace sing {

/// Uniform residue over F_p; an integer in [-2, 2] over the rationals.
Scalar random_scalar(const Field& f, std::mt19937_64& rng);

/// A random linear combination of the given parallel morphisms.
RepMorphism random_combination(const std::vector<RepMorphism>& basis, const RepPtr& source, const RepPtr& target,
                               std::mt19937_64& rng);

/// Direct sum of 1..max_summands indecomposable projectives.
RepPtr random_projective(const AlgebraPtr& alg, std::mt19937_64& rng, std::size_t max_summands = 2);

/// Cokernel of a random radical map between random projectives, so top M = top P.
RepPtr random_module(const AlgebraPtr& alg, std::mt19937_64& rng, std::size_t max_summands = 2);

/// The same module in a random basis, with the change of basis as an isomorphism.
RepMorphism random_base_change(const RepPtr& m, std::mt19937_64& rng);

struct ShortExact {
  RepMorphism g;  ///< N -> E, injective
  RepMorphism f;  ///< E -> M, surjective with kernel the image of g
};

/// Either the cover sequence ΩM -> P(M) -> M of a random M, or N = image of a
/// random map from a projective into a random E with M = E/N.
ShortExact random_short_exact(const AlgebraPtr& alg, std::mt19937_64& rng);

}  // namespace sing
