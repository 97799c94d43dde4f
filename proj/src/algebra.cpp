#include "sing/algebra.hpp"

#include <algorithm>

#include "sing/error.hpp"
#include "sing/linalg.hpp"
#include "sing/matrix.hpp"

namespace sing {

namespace {

// Longest first, then lexicographic.
bool column_before(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() > b.length();
  return a < b;
}

Relation normalize(const Field& f, const Quiver& q, Relation r) {
  std::map<std::vector<ArrowId>, Scalar> acc;
  for (auto& t : r.terms) {
    require_same_field(f, t.coeff.field());
    if (t.arrows.size() < 2) throw Error(ErrorCode::InadmissibleRelation, "relation term of length < 2");
    for (ArrowId a : t.arrows)
      if (a >= q.arrow_count()) throw Error(ErrorCode::BadIndex, "relation arrow out of range");
    if (!is_path(q, q.arrow(t.arrows.front()).source, t.arrows))
      throw Error(ErrorCode::RelationNotParallel, "relation term is not a composable path");
    auto it = acc.find(t.arrows);
    if (it == acc.end())
      acc.emplace(t.arrows, t.coeff);
    else
      it->second = it->second + t.coeff;
  }
  Relation out;
  for (auto& [arrows, c] : acc)
    if (!c.is_zero()) out.terms.push_back({c, arrows});
  if (out.terms.empty()) return out;
  VertexId s = q.arrow(out.terms.front().arrows.front()).source;
  VertexId t = q.arrow(out.terms.front().arrows.back()).target;
  for (auto& term : out.terms)
    if (q.arrow(term.arrows.front()).source != s || q.arrow(term.arrows.back()).target != t)
      throw Error(ErrorCode::RelationNotParallel, "relation terms are not parallel");
  return out;
}

}  // namespace

std::shared_ptr<const BoundAlgebra> BoundAlgebra::build(const Field& field, Quiver quiver,
                                                        std::vector<Relation> relations, AlgebraOptions options) {
  std::vector<Relation> rels;
  for (auto& r : relations) {
    Relation n = normalize(field, quiver, std::move(r));
    if (!n.terms.empty()) rels.push_back(std::move(n));
  }
  std::shared_ptr<BoundAlgebra> alg(new BoundAlgebra(field, std::move(quiver), std::move(rels)));
  const Quiver& q = alg->quiver_;

  // by_length[k] = all paths of length k.
  std::vector<std::vector<Path>> by_length(1);
  for (VertexId v = 0; v < q.vertex_count(); ++v) by_length[0].push_back(Path{v, {}});
  std::size_t total = by_length[0].size();

  for (std::size_t L = 2; L <= options.length_cap; ++L) {
    while (by_length.size() < L) {
      std::vector<Path> next;
      for (const Path& p : by_length.back())
        for (ArrowId a : q.arrows_out(p.target(q))) next.push_back(p.then(a));
      total += next.size();
      if (total > options.path_count_cap)
        throw Error(ErrorCode::InfiniteDimensional, "path count exceeds cap before the ideal stabilizes");
      by_length.push_back(std::move(next));
    }

    std::vector<Path> cols;
    for (const auto& level : by_length) cols.insert(cols.end(), level.begin(), level.end());
    std::sort(cols.begin(), cols.end(), column_before);
    std::map<Path, std::size_t> col_of;
    for (std::size_t i = 0; i < cols.size(); ++i) col_of.emplace(cols[i], i);

    // Rows: w·ρ·u truncated below length L, for paths u into s(ρ) and w out of t(ρ).
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;
    for (const Relation& r : alg->relations_) {
      std::size_t minlen = L;
      for (const auto& t : r.terms) minlen = std::min(minlen, t.arrows.size());
      if (minlen >= L) continue;
      VertexId s = alg->relation_source(r), t = alg->relation_target(r);
      for (std::size_t lu = 0; lu + minlen < L; ++lu) {
        for (const Path& u : by_length[lu]) {
          if (u.target(q) != s) continue;
          for (std::size_t lw = 0; lu + minlen + lw < L; ++lw) {
            for (const Path& w : by_length[lw]) {
              if (w.source != t) continue;
              std::vector<std::pair<std::size_t, Scalar>> row;
              for (const auto& term : r.terms) {
                if (lu + term.arrows.size() + lw >= L) continue;
                Path p{u.source, u.arrows};
                p.arrows.insert(p.arrows.end(), term.arrows.begin(), term.arrows.end());
                p.arrows.insert(p.arrows.end(), w.arrows.begin(), w.arrows.end());
                row.emplace_back(col_of.at(p), term.coeff);
              }
              if (!row.empty()) rows.push_back(std::move(row));
            }
          }
        }
      }
    }

    Matrix m(field, rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (auto& [j, c] : rows[i]) m.set(i, j, m.at(i, j) + c);
    RowEchelon re = row_reduce(m);

    std::vector<char> is_pivot(cols.size(), 0);
    std::vector<std::size_t> pivot_row(cols.size(), 0);
    for (std::size_t i = 0; i < re.pivots.size(); ++i) {
      is_pivot[re.pivots[i]] = 1;
      pivot_row[re.pivots[i]] = i;
    }
    auto reduction = [&](std::size_t col) {
      BasisCombination out;
      std::size_t r = pivot_row[col];
      for (std::size_t j = col + 1; j < cols.size(); ++j)
        if (!is_pivot[j] && !re.reduced.entry_is_zero(r, j)) out.emplace_back(j, -re.reduced.at(r, j));
      return out;
    };

    bool stable = true;
    for (const Path& p : by_length[L - 1]) {
      std::size_t c = col_of.at(p);
      if (!is_pivot[c] || !reduction(c).empty()) {
        stable = false;
        break;
      }
    }
    if (!stable) continue;

    // Basis = non-pivot columns, reported in increasing length then lexicographic order.
    std::vector<std::size_t> basis_cols;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (!is_pivot[j]) basis_cols.push_back(j);
    std::sort(basis_cols.begin(), basis_cols.end(), [&](std::size_t a, std::size_t b) {
      if (cols[a].length() != cols[b].length()) return cols[a].length() < cols[b].length();
      return cols[a] < cols[b];
    });
    std::vector<std::size_t> index_of_col(cols.size(), 0);
    for (std::size_t i = 0; i < basis_cols.size(); ++i) {
      index_of_col[basis_cols[i]] = i;
      alg->basis_.push_back(cols[basis_cols[i]]);
      alg->basis_lookup_.emplace(cols[basis_cols[i]], i);
    }
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (!is_pivot[j]) continue;
      BasisCombination red = reduction(j);
      for (auto& [k, c] : red) k = index_of_col[k];
      std::sort(red.begin(), red.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      alg->reductions_.emplace(cols[j], std::move(red));
    }
    alg->truncation_ = L;

    std::size_t n = 1;
    for (; n < L; ++n) {
      bool all_zero = true;
      for (const Path& p : by_length[n])
        if (!alg->normal_form(p).empty()) {
          all_zero = false;
          break;
        }
      if (all_zero) break;
    }
    alg->nilpotency_ = n;

    const std::size_t nv = q.vertex_count();
    alg->between_.assign(nv, std::vector<std::vector<std::size_t>>(nv));
    for (std::size_t i = 0; i < alg->basis_.size(); ++i) {
      const Path& p = alg->basis_[i];
      alg->between_[p.source][p.target(q)].push_back(i);
    }
    return alg;
  }
  throw Error(ErrorCode::InfiniteDimensional, "arrow ideal not nilpotent below the length cap");
}

const std::vector<std::size_t>& BoundAlgebra::basis_between(VertexId v, VertexId w) const {
  if (v >= quiver_.vertex_count() || w >= quiver_.vertex_count()) throw Error(ErrorCode::BadIndex, "vertex out of range");
  return between_[v][w];
}

std::optional<std::size_t> BoundAlgebra::basis_index(const Path& p) const {
  auto it = basis_lookup_.find(p);
  if (it == basis_lookup_.end()) return std::nullopt;
  return it->second;
}

BasisCombination BoundAlgebra::normal_form(const Path& p) const {
  if (p.length() >= truncation_) return {};
  if (auto i = basis_index(p)) return {{*i, Scalar::one(field_)}};
  auto it = reductions_.find(p);
  if (it == reductions_.end()) throw Error(ErrorCode::BadIndex, "not a path of the quiver");
  return it->second;
}

VertexId BoundAlgebra::relation_source(const Relation& r) const {
  return quiver_.arrow(r.terms.front().arrows.front()).source;
}

VertexId BoundAlgebra::relation_target(const Relation& r) const {
  return quiver_.arrow(r.terms.front().arrows.back()).target;
}

bool BoundAlgebra::is_monomial() const {
  return std::all_of(relations_.begin(), relations_.end(), [](const Relation& r) { return r.terms.size() == 1; });
}

bool BoundAlgebra::is_quadratic_monomial() const {
  return std::all_of(relations_.begin(), relations_.end(),
                     [](const Relation& r) { return r.terms.size() == 1 && r.terms[0].arrows.size() == 2; });
}

Relation monomial_relation(const Field& f, const Quiver& q, const std::vector<std::string>& arrows) {
  Relation r;
  PathTerm t{Scalar::one(f), {}};
  for (const auto& name : arrows) t.arrows.push_back(q.arrow_id(name));
  r.terms.push_back(std::move(t));
  return r;
}

std::vector<Relation> radical_square_relations(const Field& f, const Quiver& q) {
  std::vector<Relation> out;
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    for (ArrowId b : q.arrows_out(q.arrow(a).target)) out.push_back(Relation{{PathTerm{Scalar::one(f), {a, b}}}});
  return out;
}

}  // namespace sing
