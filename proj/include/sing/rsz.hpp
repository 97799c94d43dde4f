#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sing/algebra.hpp"
#include "sing/colimit.hpp"

namespace sing {

/// Vertices are the arrows of Q, one arrow [βα]: α -> β per relation βα.
Quiver relation_quiver(const BoundAlgebra& b);

/// Q° : repeatedly delete sinks together with their incoming arrows.
Quiver remove_sinks(const Quiver& q);

/// Dimension-vector model of the stabilization of (A/r-mod, r ⊗ -) for a
/// split radical-square-zero algebra.
struct AdjacencyModel {
  std::size_t vertices = 0;
  /// adjacency[j][i] = number of arrows i -> j.
  std::vector<std::vector<std::uint64_t>> adjacency;

  static AdjacencyModel from_quiver(const Quiver& q);
  std::vector<std::uint64_t> apply(const std::vector<std::uint64_t>& x) const;
  /// v starts a path of length k.
  std::vector<bool> has_path(std::size_t k) const;
};

struct GradedTuple {
  std::vector<std::uint64_t> dims;
  std::int64_t shift = 0;
};

/// H_p = Σ_v (T^{p-n} x)_v (T^{p-m} y)_v with the maps φ ↦ r ⊗ φ.
ColimitReport model_hom_report(const AdjacencyModel& m, const GradedTuple& x, const GradedTuple& y,
                               std::int64_t p_max, std::size_t window = 3);

/// Matrix of φ ↦ r ⊗ φ from ⊕_v Hom(K^{x_v}, K^{y_v}) to ⊕_v Hom(K^{(Tx)_v}, K^{(Ty)_v}).
Matrix model_structure_matrix(const AdjacencyModel& m, const std::vector<std::uint64_t>& x,
                              const std::vector<std::uint64_t>& y, const Field& f = Field::rational());

struct RszEntry {
  VertexId source;
  VertexId target;
  std::int64_t shift;
  std::vector<std::uint64_t> engine_dims;
  /// ranks of the one-step maps H_p -> H_{p+1} of the model on Q: the part of
  /// each model Hom space that survives into the stable category.
  std::vector<std::uint64_t> model_dims;
  Verdict engine_verdict;
  /// verdict of the model on Q°, the Leavitt side.
  Verdict leavitt_verdict;
  bool match;
};

struct RszReport {
  std::vector<RszEntry> entries;
  bool all_match = true;
};

/// Syzygy engine against the adjacency model for all pairs of simples and
/// |t| <= shift_bound.  `model` replaces the adjacency data read off the quiver.
RszReport crosscheck_rsz(const AlgebraPtr& a, std::int64_t p_max, std::int64_t shift_bound = 2, std::size_t window = 3,
                         const std::optional<AdjacencyModel>& model = std::nullopt);

struct MonomialEntry {
  ArrowId source;
  ArrowId target;
  std::int64_t shift;
  std::vector<std::uint64_t> b_dims;
  std::vector<std::uint64_t> c_dims;
  Verdict b_verdict;
  Verdict c_verdict;
  bool match;
};

struct MonomialReport {
  AlgebraPtr relation_algebra;
  std::vector<MonomialEntry> entries;
  bool all_match = true;
};

/// Hom(Bα, Σ^t Bβ) over B against Hom(S_α, Σ^t S_β) over KQ^r/J².
MonomialReport monomial_equiv_check(const AlgebraPtr& b, std::int64_t p_max, std::int64_t shift_bound = 2,
                                    std::size_t window = 3);

/// Radical-square-zero algebra on a random quiver.
AlgebraPtr random_rsz_algebra(const Field& f, std::mt19937_64& rng, std::size_t max_vertices = 4,
                              std::size_t max_arrows = 6);
/// Finite-dimensional gentle algebra on a random quiver.
AlgebraPtr random_gentle_algebra(const Field& f, std::mt19937_64& rng, std::size_t max_vertices = 4);

}  // namespace sing
