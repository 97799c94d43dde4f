#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sing/algebra.hpp"
#include "sing/matrix.hpp"

namespace sing {

/// A finite-dimensional left module: a vector space per vertex and, for each
/// arrow a: i -> j, a dim_j x dim_i matrix.
class Representation {
 public:
  /// Validates shapes and that every relation acts as zero.
  Representation(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Matrix> arrows);
  /// Skips the relation check; for modules that are correct by construction.
  static Representation trusted(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Matrix> arrows);
  static Representation zero(AlgebraPtr alg);

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  const Field& field() const { return alg_->field(); }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t dim(VertexId v) const { return dims_.at(v); }
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  const Matrix& arrow(ArrowId a) const { return arrows_.at(a); }
  const std::vector<Matrix>& arrows() const noexcept { return arrows_; }

  /// Action of a path: the product of its arrow matrices.
  Matrix path_matrix(const Path& p) const;
  Matrix relation_matrix(const Relation& r) const;

  friend bool operator==(const Representation& a, const Representation& b);

 private:
  Representation(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Matrix> arrows, bool check);

  AlgebraPtr alg_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> arrows_;
};

using RepPtr = std::shared_ptr<const Representation>;

inline RepPtr share(Representation r) { return std::make_shared<const Representation>(std::move(r)); }

/// True for the same algebra object or structurally identical algebras.
bool same_algebra(const BoundAlgebra& a, const BoundAlgebra& b);
void require_same_algebra(const Representation& m, const Representation& n);

/// A module homomorphism given by one matrix per vertex.
class RepMorphism {
 public:
  /// Validates shapes and the commutation φ_j M_a = N_a φ_i.
  RepMorphism(RepPtr source, RepPtr target, std::vector<Matrix> maps);
  static RepMorphism trusted(RepPtr source, RepPtr target, std::vector<Matrix> maps);
  static RepMorphism identity(const RepPtr& m);
  static RepMorphism zero(const RepPtr& source, const RepPtr& target);

  const RepPtr& source() const noexcept { return source_; }
  const RepPtr& target() const noexcept { return target_; }
  const Matrix& at(VertexId v) const { return maps_.at(v); }
  const std::vector<Matrix>& maps() const noexcept { return maps_; }
  const Field& field() const { return source_->field(); }

  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_invertible() const;
  std::size_t rank() const;

  RepMorphism scaled(const Scalar& s) const;
  RepMorphism inverse() const;

  friend RepMorphism operator+(const RepMorphism& a, const RepMorphism& b);
  friend RepMorphism operator-(const RepMorphism& a, const RepMorphism& b);
  /// Maps compare equal when their matrices agree and endpoints are equal modules.
  friend bool operator==(const RepMorphism& a, const RepMorphism& b);

 private:
  RepMorphism(RepPtr source, RepPtr target, std::vector<Matrix> maps, bool check);

  RepPtr source_;
  RepPtr target_;
  std::vector<Matrix> maps_;
};

/// g ∘ f.
RepMorphism compose(const RepMorphism& g, const RepMorphism& f);

/// Linear combination Σ c_i f_i of parallel morphisms.
RepMorphism combine(const std::vector<RepMorphism>& basis, const std::vector<Scalar>& coeffs, const RepPtr& source,
                    const RepPtr& target);

Representation projective_rep(const AlgebraPtr& alg, VertexId v);
Representation simple_rep(const AlgebraPtr& alg, VertexId v);
Representation regular_rep(const AlgebraPtr& alg);
/// The left ideal spanned by basis paths whose first arrow is α.
Representation left_ideal_rep(const AlgebraPtr& alg, ArrowId alpha);

struct DirectSum {
  RepPtr sum;
  std::vector<RepMorphism> inclusions;
  std::vector<RepMorphism> projections;
};

DirectSum direct_sum(const std::vector<RepPtr>& parts);
Representation direct_sum_module(const std::vector<RepPtr>& parts);
/// n copies of m.
Representation power(const RepPtr& m, std::size_t n);

std::vector<RepMorphism> hom_space(const RepPtr& m, const RepPtr& n);
std::size_t hom_dim(const Representation& m, const Representation& n);

/// Subobject and its inclusion, or quotient and its projection.
struct SubQuotient {
  RepPtr module;
  RepMorphism map;
};

/// The submodule whose space at v is the column span of bases[v] (independent
/// columns).  NotHomomorphism if the spans are not arrow-stable.
SubQuotient submodule(const RepPtr& m, const std::vector<Matrix>& bases);
SubQuotient kernel(const RepMorphism& f);
SubQuotient image(const RepMorphism& f);
SubQuotient cokernel(const RepMorphism& f);

/// Column basis of the radical J·M at each vertex.
std::vector<Matrix> radical_basis(const Representation& m);
/// dims of rad^k M / rad^{k+1} M per vertex, for k = 0, 1, ... until zero.
std::vector<std::vector<std::size_t>> radical_layers(const Representation& m);
/// dim of top(M) at each vertex.
std::vector<std::size_t> top_dims(const Representation& m);

enum class IsoKind { Yes, No, Unknown };

struct IsoVerdict {
  IsoKind kind;
  std::optional<RepMorphism> witness;  ///< set for Yes
  std::string reason;                  ///< set for No and Unknown
};

struct IsoOptions {
  std::size_t exhaustive_dim = 4;
  std::uint64_t exhaustive_limit = 65536;
  std::size_t samples = 256;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

IsoVerdict is_isomorphic(const RepPtr& m, const RepPtr& n, const IsoOptions& opt = {});

}  // namespace sing
