#include "sing/matrix.hpp"

#include "sing/error.hpp"

namespace sing {

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (field_.is_prime())
    mod_.assign(rows * cols, 0);
  else
    rat_.assign(rows * cols, mpq_class(0));
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
  return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error(ErrorCode::ShapeMismatch, "ragged matrix literal");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Scalar(f, rows[i][j]));
  }
  return m;
}

Matrix Matrix::from_scalars(const Field& f, std::size_t rows, std::size_t cols, const std::vector<Scalar>& entries) {
  if (entries.size() != rows * cols) throw Error(ErrorCode::ShapeMismatch, "entry count does not match shape");
  Matrix m(f, rows, cols);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    require_same_field(f, entries[k].field());
    m.set(k / cols, k % cols, entries[k]);
  }
  return m;
}

Matrix Matrix::column_vector(const Field& f, const std::vector<Scalar>& entries) {
  return from_scalars(f, entries.size(), 1, entries);
}

Scalar Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw Error(ErrorCode::BadIndex, "matrix index out of range");
  std::size_t k = i * cols_ + j;
  return field_.is_prime() ? Scalar::residue(field_, mod_[k]) : Scalar(field_, rat_[k]);
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& v) {
  if (i >= rows_ || j >= cols_) throw Error(ErrorCode::BadIndex, "matrix index out of range");
  require_same_field(field_, v.field());
  std::size_t k = i * cols_ + j;
  if (field_.is_prime())
    mod_[k] = v.residue();
  else
    rat_[k] = v.rational();
}

bool Matrix::entry_is_zero(std::size_t i, std::size_t j) const {
  std::size_t k = i * cols_ + j;
  return field_.is_prime() ? mod_[k] == 0 : sgn(rat_[k]) == 0;
}

bool Matrix::is_zero() const {
  if (field_.is_prime()) {
    for (auto v : mod_)
      if (v != 0) return false;
  } else {
    for (const auto& v : rat_)
      if (sgn(v) != 0) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field_.is_prime())
        t.mod_[j * rows_ + i] = mod_[i * cols_ + j];
      else
        t.rat_[j * rows_ + i] = rat_[i * cols_ + j];
    }
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorCode::BadIndex, "block out of range");
  Matrix b(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) {
      if (field_.is_prime())
        b.mod_[i * nc + j] = mod_[(r0 + i) * cols_ + c0 + j];
      else
        b.rat_[i * nc + j] = rat_[(r0 + i) * cols_ + c0 + j];
    }
  return b;
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
  Matrix b(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= rows_) throw Error(ErrorCode::BadIndex, "row index out of range");
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field_.is_prime())
        b.mod_[i * cols_ + j] = mod_[idx[i] * cols_ + j];
      else
        b.rat_[i * cols_ + j] = rat_[idx[i] * cols_ + j];
    }
  }
  return b;
}

Matrix Matrix::select_cols(std::span<const std::size_t> idx) const {
  Matrix b(field_, rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j)
    if (idx[j] >= cols_) throw Error(ErrorCode::BadIndex, "column index out of range");
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (field_.is_prime())
        b.mod_[i * idx.size() + j] = mod_[i * cols_ + idx[j]];
      else
        b.rat_[i * idx.size() + j] = rat_[i * cols_ + idx[j]];
    }
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  require_same_field(field_, m.field_);
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw Error(ErrorCode::BadIndex, "block out of range");
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) {
      if (field_.is_prime())
        mod_[(r0 + i) * cols_ + c0 + j] = m.mod_[i * m.cols_ + j];
      else
        rat_[(r0 + i) * cols_ + c0 + j] = m.rat_[i * m.cols_ + j];
    }
}

Matrix Matrix::hstack(const Matrix& right) const {
  require_same_field(field_, right.field_);
  if (rows_ != right.rows_) throw Error(ErrorCode::ShapeMismatch, "hstack row mismatch");
  Matrix m(field_, rows_, cols_ + right.cols_);
  m.set_block(0, 0, *this);
  m.set_block(0, cols_, right);
  return m;
}

Matrix Matrix::vstack(const Matrix& below) const {
  require_same_field(field_, below.field_);
  if (cols_ != below.cols_) throw Error(ErrorCode::ShapeMismatch, "vstack column mismatch");
  Matrix m(field_, rows_ + below.rows_, cols_);
  m.set_block(0, 0, *this);
  m.set_block(rows_, 0, below);
  return m;
}

Matrix Matrix::scaled(const Scalar& s) const {
  require_same_field(field_, s.field());
  Matrix m = *this;
  if (field_.is_prime()) {
    for (auto& v : m.mod_) v = v * s.residue() % field_.characteristic();
  } else {
    for (auto& v : m.rat_) v *= s.rational();
  }
  return m;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = at(i, j).to_string();
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix sum shape mismatch");
  Matrix m = a;
  if (a.field_.is_prime()) {
    std::uint64_t p = a.field_.characteristic();
    for (std::size_t k = 0; k < m.mod_.size(); ++k) m.mod_[k] = (m.mod_[k] + b.mod_[k]) % p;
  } else {
    for (std::size_t k = 0; k < m.rat_.size(); ++k) m.rat_[k] += b.rat_[k];
  }
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix difference shape mismatch");
  Matrix m = a;
  if (a.field_.is_prime()) {
    std::uint64_t p = a.field_.characteristic();
    for (std::size_t k = 0; k < m.mod_.size(); ++k) m.mod_[k] = (m.mod_[k] + p - b.mod_[k]) % p;
  } else {
    for (std::size_t k = 0; k < m.rat_.size(); ++k) m.rat_[k] -= b.rat_[k];
  }
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_);
  if (a.cols_ != b.rows_) throw Error(ErrorCode::ShapeMismatch, "matrix product shape mismatch");
  Matrix m(a.field_, a.rows_, b.cols_);
  const std::size_t n = a.cols_, c = b.cols_;
  if (a.field_.is_prime()) {
    const std::uint64_t p = a.field_.characteristic();
    std::vector<std::uint64_t> acc(c);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < n; ++k) {
        std::uint64_t x = a.mod_[i * n + k];
        if (x == 0) continue;
        const std::uint64_t* row = &b.mod_[k * c];
        for (std::size_t j = 0; j < c; ++j) {
          acc[j] += x * row[j];
          // residues are < 2^31, so a handful of products fit before reducing
          if (acc[j] >= (std::uint64_t{1} << 63)) acc[j] %= p;
        }
      }
      for (std::size_t j = 0; j < c; ++j) m.mod_[i * c + j] = acc[j] % p;
    }
  } else {
    mpq_class t;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const mpq_class& x = a.rat_[i * n + k];
        if (sgn(x) == 0) continue;
        for (std::size_t j = 0; j < c; ++j) {
          const mpq_class& y = b.rat_[k * c + j];
          if (sgn(y) == 0) continue;
          t = x * y;
          m.rat_[i * c + j] += t;
        }
      }
  }
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.mod_ == b.mod_ && a.rat_ == b.rat_;
}

Matrix block_diagonal(const Field& f, const std::vector<Matrix>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix m(f, r, c);
  r = c = 0;
  for (const auto& b : blocks) {
    m.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

}  // namespace sing
