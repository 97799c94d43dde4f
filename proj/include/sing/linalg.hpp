#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sing/matrix.hpp"

namespace sing {

/// Reduced row echelon form.  Pivots are the first nonzero entry of each row,
/// scanning columns left to right, so the result is a deterministic function
/// of the input.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

RowEchelon row_reduce(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Columns form a basis of {x : m x = 0}; one column per free variable, in
/// increasing column order.
Matrix kernel_basis(const Matrix& m);

/// Some X with a·X = b (free variables set to zero), or nullopt.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

Matrix inverse(const Matrix& m);

/// Indices of the columns of m that are not in the span of `base` and the
/// previously selected columns of m, scanned left to right.
std::vector<std::size_t> complement_columns(const Matrix& base, const Matrix& m);

/// The pivot columns of m: a basis of its column space drawn from its columns.
Matrix column_basis(const Matrix& m);

/// True when every column of `sub` lies in the column space of `space`.
bool column_span_contains(const Matrix& space, const Matrix& sub);

/// d_0 → d_1 → … → d_q with map i of shape d_{i+1} × d_i.
struct DirectSystem {
  std::vector<std::size_t> spaces;
  std::vector<Matrix> maps;

  void validate() const;
};

/// Rank of map_{q-1} ∘ … ∘ map_p (the identity on d_p when p = q).
std::size_t composite_rank(const DirectSystem& sys, std::size_t p, std::size_t q);

/// rank(t^n) for n = rows(t): the dimension of the colimit of V →t V →t ….
std::size_t eventual_rank(const Matrix& t);

}  // namespace sing
