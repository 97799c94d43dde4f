#include "sing/linalg.hpp"

#include <numeric>
#include <utility>

#include "sing/error.hpp"

namespace sing {

namespace {

RowEchelon reduce_prime(const Matrix& m) {
  const std::uint64_t p = m.field().characteristic();
  const std::size_t rows = m.rows(), cols = m.cols();
  Matrix r = m;
  auto& a = r.residues();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = rank; i < rows; ++i)
      if (a[i * cols + c] != 0) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    if (sel != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[sel * cols + j], a[rank * cols + j]);
    std::uint64_t inv = mod_inverse(a[rank * cols + c], p);
    for (std::size_t j = c; j < cols; ++j) a[rank * cols + j] = a[rank * cols + j] * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank) continue;
      std::uint64_t f = a[i * cols + c];
      if (f == 0) continue;
      std::uint64_t nf = p - f;
      for (std::size_t j = c; j < cols; ++j) {
        std::uint64_t x = a[rank * cols + j];
        if (x != 0) a[i * cols + j] = (a[i * cols + j] + nf * x) % p;
      }
    }
    pivots.push_back(c);
    ++rank;
  }
  return {std::move(r), std::move(pivots)};
}

// Fraction-free Gauss-Jordan over the integers: rows are cleared of
// denominators, combined without division, and kept primitive.
RowEchelon reduce_rational(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const auto& src = m.rationals();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), src[i * cols + j].get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) {
      const mpq_class& q = src[i * cols + j];
      a[i][j] = q.get_num() * (l / q.get_den());
    }
  }
  auto make_primitive = [cols](std::vector<mpz_class>& row) {
    mpz_class g = 0;
    for (std::size_t j = 0; j < cols; ++j)
      if (row[j] != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[j].get_mpz_t());
    if (g > 1)
      for (auto& v : row)
        if (v != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  };
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = rank; i < rows; ++i)
      if (a[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    std::swap(a[sel], a[rank]);
    const mpz_class piv = a[rank][c];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][c] == 0) continue;
      const mpz_class f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = piv * a[i][j] - f * a[rank][j];
      make_primitive(a[i]);
    }
    pivots.push_back(c);
    ++rank;
  }
  Matrix r(m.field(), rows, cols);
  auto& dst = r.rationals();
  for (std::size_t i = 0; i < rows; ++i) {
    if (i < rank) {
      const mpz_class piv = a[i][pivots[i]];
      for (std::size_t j = 0; j < cols; ++j) {
        dst[i * cols + j] = mpq_class(a[i][j], piv);
        dst[i * cols + j].canonicalize();
      }
    }
  }
  return {std::move(r), std::move(pivots)};
}

}  // namespace

RowEchelon row_reduce(const Matrix& m) {
  return m.field().is_prime() ? reduce_prime(m) : reduce_rational(m);
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  return row_reduce(m).pivots.size();
}

Matrix kernel_basis(const Matrix& m) {
  const Field& f = m.field();
  const std::size_t cols = m.cols();
  RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::size_t nfree = cols - e.pivots.size();
  Matrix k(f, cols, nfree);
  std::size_t col = 0;
  for (std::size_t j = 0; j < cols; ++j) {
    if (is_pivot[j]) continue;
    k.set(j, col, Scalar::one(f));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      if (e.reduced.entry_is_zero(r, j)) continue;
      k.set(e.pivots[r], col, -e.reduced.at(r, j));
    }
    ++col;
  }
  return k;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  if (a.rows() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "solve: row mismatch");
  const Field& f = a.field();
  const std::size_t n = a.cols();
  Matrix x(f, n, b.cols());
  if (a.rows() == 0) return x;
  RowEchelon e = row_reduce(a.hstack(b));
  std::size_t used = 0;
  for (auto c : e.pivots) {
    if (c >= n) return std::nullopt;
    ++used;
  }
  for (std::size_t r = 0; r < used; ++r)
    for (std::size_t j = 0; j < b.cols(); ++j) x.set(e.pivots[r], j, e.reduced.at(r, n + j));
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::NonSquare, "inverse of a non-square matrix");
  auto x = solve(m, Matrix::identity(m.field(), m.rows()));
  if (!x || rank(m) != m.rows()) throw Error(ErrorCode::Singular, "matrix is not invertible");
  return *x;
}

std::vector<std::size_t> complement_columns(const Matrix& base, const Matrix& m) {
  require_same_field(base.field(), m.field());
  if (base.rows() != m.rows()) throw Error(ErrorCode::ShapeMismatch, "complement_columns: row mismatch");
  // Pivot columns of [base | m] that fall in the m-part are exactly the
  // greedily independent columns of m.
  RowEchelon e = row_reduce(base.hstack(m));
  std::vector<std::size_t> out;
  for (auto c : e.pivots)
    if (c >= base.cols()) out.push_back(c - base.cols());
  return out;
}

bool column_span_contains(const Matrix& space, const Matrix& sub) {
  if (sub.cols() == 0) return true;
  return complement_columns(space, sub).empty();
}

void DirectSystem::validate() const {
  if (spaces.empty() || maps.size() + 1 != spaces.size())
    throw Error(ErrorCode::ShapeMismatch, "direct system needs one map fewer than spaces");
  for (std::size_t i = 0; i < maps.size(); ++i)
    if (maps[i].rows() != spaces[i + 1] || maps[i].cols() != spaces[i])
      throw Error(ErrorCode::ShapeMismatch, "direct system map " + std::to_string(i) + " has the wrong shape");
}

std::size_t composite_rank(const DirectSystem& sys, std::size_t p, std::size_t q) {
  sys.validate();
  if (p > q || q >= sys.spaces.size()) throw Error(ErrorCode::BadIndex, "composite_rank needs p <= q < length");
  if (p == q) return sys.spaces[p];
  Matrix acc = sys.maps[p];
  for (std::size_t i = p + 1; i < q; ++i) acc = sys.maps[i] * acc;
  return rank(acc);
}

std::size_t eventual_rank(const Matrix& t) {
  if (t.rows() != t.cols()) throw Error(ErrorCode::NonSquare, "eventual_rank needs a square matrix");
  const std::size_t n = t.rows();
  Matrix power = Matrix::identity(t.field(), n);
  for (std::size_t i = 0; i < n; ++i) power = power * t;
  return rank(power);
}

Matrix column_basis(const Matrix& m) {
  RowEchelon re = row_reduce(m);
  return m.select_cols(re.pivots);
}

}  // namespace sing
