#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "sing/representation.hpp"

namespace sing {

/// A fixed projective cover P(M) -> M with its kernel Ω(M) -> P(M).
///
/// P(M) is the direct sum of P_{w_k}, one summand per chosen top vector; the
/// top vectors are standard basis vectors of M outside the radical, taken
/// vertex by vertex in index order.  The generator of summand k (the trivial
/// path at w_k) maps to the k-th top vector.
struct CoverData {
  RepPtr module;
  RepPtr cover;
  RepMorphism projection;
  RepPtr syzygy;
  RepMorphism kernel_embedding;
  std::vector<VertexId> generator_vertex;
  std::vector<std::size_t> generator_position;  ///< coordinate of generator k inside cover at its vertex
};

CoverData projective_cover(const RepPtr& m);
bool is_projective(const Representation& m);
RepPtr syzygy(const RepPtr& m, std::size_t k = 1);

/// Some h: P -> E with surj ∘ h = g, where P is the cover in `cd` and surj is
/// onto the target of g.  With `rng`, each generator image is shifted by a
/// random element of ker(surj), giving an independent lift.
RepMorphism lift_from_projective(const CoverData& cd, const RepMorphism& g, const RepMorphism& surj,
                                 std::mt19937_64* rng = nullptr);

/// A representative of Ω(f): Ω(M) -> Ω(N) from a lift of f along the covers.
RepMorphism syzygy_of_morphism(const RepMorphism& f, std::mt19937_64* rng = nullptr);

/// Hom(M,N) modulo maps factoring through a projective, with a basis of
/// representatives and a coordinate map.
class StableHomSpace {
 public:
  StableHomSpace(const RepPtr& m, const RepPtr& n);

  const RepPtr& source() const noexcept { return source_; }
  const RepPtr& target() const noexcept { return target_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  std::size_t hom_dim() const noexcept { return hom_dim_; }
  const std::vector<RepMorphism>& basis() const noexcept { return basis_; }

  /// Coordinates of the stable class of f in terms of basis().
  std::vector<Scalar> coordinates(const RepMorphism& f) const;
  Matrix coordinate_column(const RepMorphism& f) const;
  bool is_stably_zero(const RepMorphism& f) const;
  bool stably_equal(const RepMorphism& f, const RepMorphism& g) const { return is_stably_zero(f - g); }
  RepMorphism element(const std::vector<Scalar>& coeffs) const;

 private:
  RepPtr source_;
  RepPtr target_;
  std::size_t hom_dim_ = 0;
  std::vector<RepMorphism> basis_;
  Matrix left_inverse_;  ///< rows 0..dim()-1 give stable coordinates
};

/// Entries of all vertex matrices of f, vertex by vertex, row-major.
Matrix flatten(const RepMorphism& f);

bool stably_equal(const RepMorphism& f, const RepMorphism& g);

struct CanonicalTriangle {
  RepMorphism h;  ///< Ω(M) -> N
  RepMorphism g;  ///< N -> E
  RepMorphism f;  ///< E -> M
  RepMorphism u;  ///< P(M) -> E with f ∘ u = π_M
  CoverData cover;
};

/// Checks 0 -> N -g-> E -f-> M -> 0 is exact (NotExact otherwise).
void require_exact(const RepMorphism& g, const RepMorphism& f);

/// The left triangle Ω(M) -h-> N -g-> E -f-> M of an exact sequence.
CanonicalTriangle canonical_triangle(const RepMorphism& g, const RepMorphism& f, std::mt19937_64* rng = nullptr);

/// Minimal projective resolution: step i covers Ω^i(M).
std::vector<CoverData> minimal_resolution(const RepPtr& m, std::size_t length);

std::size_t ext_dim(const RepPtr& m, const RepPtr& n, std::size_t i);

struct ProjDim {
  bool finite;
  std::size_t value;  ///< the dimension when finite, otherwise the search bound
};

ProjDim proj_dim(const RepPtr& m, std::size_t bound);
bool is_injective(const RepPtr& m);

}  // namespace sing
