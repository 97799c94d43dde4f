#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sing/field.hpp"

namespace sing {

/// Dense row-major matrix over a single Field.  Prime-field entries are stored
/// as machine residues, rational entries as GMP fractions.
class Matrix {
 public:
  Matrix(const Field& field, std::size_t rows, std::size_t cols);

  static Matrix zero(const Field& f, std::size_t rows, std::size_t cols) { return Matrix(f, rows, cols); }
  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_rows(const Field& f, const std::vector<std::vector<std::int64_t>>& rows);
  static Matrix from_scalars(const Field& f, std::size_t rows, std::size_t cols, const std::vector<Scalar>& entries);
  /// A single column built from the given entries.
  static Matrix column_vector(const Field& f, const std::vector<Scalar>& entries);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Scalar at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& v);
  bool entry_is_zero(std::size_t i, std::size_t j) const;
  bool is_zero() const;

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Matrix select_rows(std::span<const std::size_t> idx) const;
  Matrix select_cols(std::span<const std::size_t> idx) const;
  Matrix column(std::size_t j) const { return block(0, j, rows_, 1); }
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
  Matrix hstack(const Matrix& right) const;
  Matrix vstack(const Matrix& below) const;
  Matrix scaled(const Scalar& s) const;

  std::vector<std::vector<std::string>> to_strings() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  // Raw storage, used by the elimination kernels.
  std::vector<std::uint64_t>& residues() { return mod_; }
  const std::vector<std::uint64_t>& residues() const { return mod_; }
  std::vector<mpq_class>& rationals() { return rat_; }
  const std::vector<mpq_class>& rationals() const { return rat_; }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint64_t> mod_;
  std::vector<mpq_class> rat_;
};

/// Block-diagonal sum of the given matrices.
Matrix block_diagonal(const Field& f, const std::vector<Matrix>& blocks);

}  // namespace sing
