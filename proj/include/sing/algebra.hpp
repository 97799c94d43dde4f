#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "sing/field.hpp"
#include "sing/quiver.hpp"

namespace sing {

struct PathTerm {
  Scalar coeff;
  std::vector<ArrowId> arrows;  ///< first-applied arrow first
};

/// A formal sum of parallel paths of length at least two.
struct Relation {
  std::vector<PathTerm> terms;
};

struct AlgebraOptions {
  std::size_t length_cap = 32;       ///< give up on finite-dimensionality beyond this path length
  std::size_t path_count_cap = 200000;
};

/// Sparse linear combination of basis elements: (basis index, coefficient).
using BasisCombination = std::vector<std::pair<std::size_t, Scalar>>;

/// The quotient kQ/I of a path algebra by an admissible ideal, with an
/// enumerated basis of paths.
///
/// The basis is computed on the truncation kQ/J^L for the first L at which
/// every path of length L-1 already lies in I + J^L; for admissible I this
/// truncation is kQ/I itself.  Columns are ordered longest path first, so the
/// leading terms of I are the longest paths and the remaining (basis) paths
/// are the shortest possible normal forms.  For monomial ideals the basis is
/// exactly the set of paths that avoid every relation.
class BoundAlgebra {
 public:
  static std::shared_ptr<const BoundAlgebra> build(const Field& field, Quiver quiver, std::vector<Relation> relations,
                                                   AlgebraOptions options = {});

  const Field& field() const noexcept { return field_; }
  const Quiver& quiver() const noexcept { return quiver_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  const std::vector<Path>& basis() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  /// Smallest N with J^N = 0.
  std::size_t nilpotency_degree() const noexcept { return nilpotency_; }

  /// Basis indices of paths from v to w, in basis order.
  const std::vector<std::size_t>& basis_between(VertexId v, VertexId w) const;
  std::optional<std::size_t> basis_index(const Path& p) const;
  BasisCombination normal_form(const Path& p) const;

  VertexId relation_source(const Relation& r) const;
  VertexId relation_target(const Relation& r) const;

  bool is_monomial() const;
  bool is_quadratic_monomial() const;
  /// J^2 = 0, i.e. kQ/J^2.
  bool is_radical_square_zero() const { return nilpotency_ <= 2; }

 private:
  BoundAlgebra(const Field& field, Quiver quiver, std::vector<Relation> relations)
      : field_(field), quiver_(std::move(quiver)), relations_(std::move(relations)) {}

  Field field_;
  Quiver quiver_;
  std::vector<Relation> relations_;
  std::vector<Path> basis_;
  std::map<Path, std::size_t> basis_lookup_;
  std::map<Path, BasisCombination> reductions_;  ///< normal forms of non-basis paths shorter than truncation_
  std::vector<std::vector<std::vector<std::size_t>>> between_;
  std::size_t truncation_ = 0;
  std::size_t nilpotency_ = 0;
};

using AlgebraPtr = std::shared_ptr<const BoundAlgebra>;

/// Monomial relation given by arrow names in application order.
Relation monomial_relation(const Field& f, const Quiver& q, const std::vector<std::string>& arrows);

/// All paths of length 2 as monomial relations (the algebra kQ/J^2).
std::vector<Relation> radical_square_relations(const Field& f, const Quiver& q);

}  // namespace sing
