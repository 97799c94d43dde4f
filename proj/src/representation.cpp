#include "sing/representation.hpp"

#include <algorithm>
#include <random>

#include "sing/error.hpp"
#include "sing/linalg.hpp"

namespace sing {

// ---------------------------------------------------------------- modules

Representation::Representation(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Matrix> arrows, bool check)
    : alg_(std::move(alg)), dims_(std::move(dims)), arrows_(std::move(arrows)) {
  const Quiver& q = alg_->quiver();
  if (dims_.size() != q.vertex_count()) throw Error(ErrorCode::ShapeMismatch, "one dimension per vertex expected");
  if (arrows_.size() != q.arrow_count()) throw Error(ErrorCode::ShapeMismatch, "one matrix per arrow expected");
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    require_same_field(alg_->field(), arrows_[a].field());
    const Arrow& ar = q.arrow(a);
    if (arrows_[a].rows() != dims_[ar.target] || arrows_[a].cols() != dims_[ar.source])
      throw Error(ErrorCode::ShapeMismatch, "arrow " + ar.name + " has the wrong shape");
  }
  if (!check) return;
  for (const Relation& r : alg_->relations())
    if (!relation_matrix(r).is_zero()) throw Error(ErrorCode::RelationNotSatisfied, "a relation acts nontrivially");
}

Representation::Representation(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Matrix> arrows)
    : Representation(std::move(alg), std::move(dims), std::move(arrows), true) {}

Representation Representation::trusted(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Matrix> arrows) {
  return Representation(std::move(alg), std::move(dims), std::move(arrows), false);
}

Representation Representation::zero(AlgebraPtr alg) {
  const Quiver& q = alg->quiver();
  std::vector<Matrix> arrows(q.arrow_count(), Matrix(alg->field(), 0, 0));
  return trusted(alg, std::vector<std::size_t>(q.vertex_count(), 0), std::move(arrows));
}

std::size_t Representation::total_dim() const {
  std::size_t s = 0;
  for (auto d : dims_) s += d;
  return s;
}

Matrix Representation::path_matrix(const Path& p) const {
  Matrix m = Matrix::identity(field(), dims_.at(p.source));
  for (ArrowId a : p.arrows) m = arrows_.at(a) * m;
  return m;
}

Matrix Representation::relation_matrix(const Relation& r) const {
  VertexId s = alg_->relation_source(r), t = alg_->relation_target(r);
  Matrix acc(field(), dims_[t], dims_[s]);
  for (const auto& term : r.terms) acc = acc + path_matrix(Path{s, term.arrows}).scaled(term.coeff);
  return acc;
}

bool operator==(const Representation& a, const Representation& b) {
  if (&a == &b) return true;
  return same_algebra(*a.alg_, *b.alg_) && a.dims_ == b.dims_ && a.arrows_ == b.arrows_;
}

namespace {

bool same_terms(const Relation& a, const Relation& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i)
    if (!(a.terms[i].coeff == b.terms[i].coeff) || a.terms[i].arrows != b.terms[i].arrows) return false;
  return true;
}

}  // namespace

bool same_algebra(const BoundAlgebra& a, const BoundAlgebra& b) {
  if (&a == &b) return true;
  if (!(a.field() == b.field()) || !(a.quiver() == b.quiver())) return false;
  if (a.relations().size() != b.relations().size() || a.basis() != b.basis()) return false;
  for (std::size_t i = 0; i < a.relations().size(); ++i)
    if (!same_terms(a.relations()[i], b.relations()[i])) return false;
  return true;
}

void require_same_algebra(const Representation& m, const Representation& n) {
  if (!same_algebra(*m.algebra(), *n.algebra())) throw Error(ErrorCode::AlgebraMismatch, "modules over different algebras");
}

// ---------------------------------------------------------------- morphisms

RepMorphism::RepMorphism(RepPtr source, RepPtr target, std::vector<Matrix> maps, bool check)
    : source_(std::move(source)), target_(std::move(target)), maps_(std::move(maps)) {
  require_same_algebra(*source_, *target_);
  const Quiver& q = source_->algebra()->quiver();
  if (maps_.size() != q.vertex_count()) throw Error(ErrorCode::ShapeMismatch, "one matrix per vertex expected");
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    require_same_field(source_->field(), maps_[v].field());
    if (maps_[v].rows() != target_->dim(v) || maps_[v].cols() != source_->dim(v))
      throw Error(ErrorCode::ShapeMismatch, "vertex map has the wrong shape");
  }
  if (!check) return;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (!(target_->arrow(a) * maps_[ar.source] == maps_[ar.target] * source_->arrow(a)))
      throw Error(ErrorCode::NotHomomorphism, "square for arrow " + ar.name + " does not commute");
  }
}

RepMorphism::RepMorphism(RepPtr source, RepPtr target, std::vector<Matrix> maps)
    : RepMorphism(std::move(source), std::move(target), std::move(maps), true) {}

RepMorphism RepMorphism::trusted(RepPtr source, RepPtr target, std::vector<Matrix> maps) {
  return RepMorphism(std::move(source), std::move(target), std::move(maps), false);
}

RepMorphism RepMorphism::identity(const RepPtr& m) {
  std::vector<Matrix> maps;
  for (auto d : m->dims()) maps.push_back(Matrix::identity(m->field(), d));
  return trusted(m, m, std::move(maps));
}

RepMorphism RepMorphism::zero(const RepPtr& source, const RepPtr& target) {
  std::vector<Matrix> maps;
  for (VertexId v = 0; v < source->dims().size(); ++v)
    maps.push_back(Matrix::zero(source->field(), target->dim(v), source->dim(v)));
  return trusted(source, target, std::move(maps));
}

bool RepMorphism::is_zero() const {
  return std::all_of(maps_.begin(), maps_.end(), [](const Matrix& m) { return m.is_zero(); });
}

bool RepMorphism::is_injective() const {
  for (VertexId v = 0; v < maps_.size(); ++v)
    if (sing::rank(maps_[v]) != source_->dim(v)) return false;
  return true;
}

bool RepMorphism::is_surjective() const {
  for (VertexId v = 0; v < maps_.size(); ++v)
    if (sing::rank(maps_[v]) != target_->dim(v)) return false;
  return true;
}

bool RepMorphism::is_invertible() const {
  return source_->dims() == target_->dims() && is_injective();
}

std::size_t RepMorphism::rank() const {
  std::size_t r = 0;
  for (const auto& m : maps_) r += sing::rank(m);
  return r;
}

RepMorphism RepMorphism::scaled(const Scalar& s) const {
  std::vector<Matrix> maps;
  for (const auto& m : maps_) maps.push_back(m.scaled(s));
  return trusted(source_, target_, std::move(maps));
}

RepMorphism RepMorphism::inverse() const {
  if (!is_invertible()) throw Error(ErrorCode::Singular, "morphism is not invertible");
  std::vector<Matrix> maps;
  for (const auto& m : maps_) maps.push_back(sing::inverse(m));
  return trusted(target_, source_, std::move(maps));
}

namespace {

void require_parallel(const RepMorphism& a, const RepMorphism& b) {
  if (!(*a.source() == *b.source()) || !(*a.target() == *b.target()))
    throw Error(ErrorCode::SourceTargetMismatch, "morphisms are not parallel");
}

}  // namespace

RepMorphism operator+(const RepMorphism& a, const RepMorphism& b) {
  require_parallel(a, b);
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < a.maps_.size(); ++v) maps.push_back(a.maps_[v] + b.maps_[v]);
  return RepMorphism::trusted(a.source_, a.target_, std::move(maps));
}

RepMorphism operator-(const RepMorphism& a, const RepMorphism& b) {
  require_parallel(a, b);
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < a.maps_.size(); ++v) maps.push_back(a.maps_[v] - b.maps_[v]);
  return RepMorphism::trusted(a.source_, a.target_, std::move(maps));
}

bool operator==(const RepMorphism& a, const RepMorphism& b) {
  return a.maps_ == b.maps_ && *a.source_ == *b.source_ && *a.target_ == *b.target_;
}

RepMorphism compose(const RepMorphism& g, const RepMorphism& f) {
  if (f.target() != g.source() && !(*f.target() == *g.source()))
    throw Error(ErrorCode::SourceTargetMismatch, "morphisms are not composable");
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < f.maps().size(); ++v) maps.push_back(g.at(v) * f.at(v));
  return RepMorphism::trusted(f.source(), g.target(), std::move(maps));
}

RepMorphism combine(const std::vector<RepMorphism>& basis, const std::vector<Scalar>& coeffs, const RepPtr& source,
                    const RepPtr& target) {
  if (basis.size() != coeffs.size()) throw Error(ErrorCode::ShapeMismatch, "one coefficient per basis element");
  RepMorphism acc = RepMorphism::zero(source, target);
  std::vector<Matrix> maps = acc.maps();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    for (std::size_t v = 0; v < maps.size(); ++v) maps[v] = maps[v] + basis[k].at(v).scaled(coeffs[k]);
  }
  return RepMorphism::trusted(source, target, std::move(maps));
}

// ---------------------------------------------------------------- standard modules

Representation projective_rep(const AlgebraPtr& alg, VertexId v) {
  const Quiver& q = alg->quiver();
  const std::size_t nv = q.vertex_count();
  if (v >= nv) throw Error(ErrorCode::BadIndex, "vertex out of range");
  std::vector<std::size_t> dims(nv);
  std::vector<std::size_t> pos(alg->dimension(), 0);
  for (VertexId w = 0; w < nv; ++w) {
    const auto& idx = alg->basis_between(v, w);
    dims[w] = idx.size();
    for (std::size_t k = 0; k < idx.size(); ++k) pos[idx[k]] = k;
  }
  std::vector<Matrix> arrows;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    Matrix m(alg->field(), dims[ar.target], dims[ar.source]);
    const auto& src = alg->basis_between(v, ar.source);
    for (std::size_t c = 0; c < src.size(); ++c)
      for (const auto& [idx, coeff] : alg->normal_form(alg->basis()[src[c]].then(a))) m.set(pos[idx], c, coeff);
    arrows.push_back(std::move(m));
  }
  return Representation::trusted(alg, std::move(dims), std::move(arrows));
}

Representation simple_rep(const AlgebraPtr& alg, VertexId v) {
  const Quiver& q = alg->quiver();
  if (v >= q.vertex_count()) throw Error(ErrorCode::BadIndex, "vertex out of range");
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  dims[v] = 1;
  std::vector<Matrix> arrows;
  for (const Arrow& ar : q.arrows()) arrows.emplace_back(alg->field(), dims[ar.target], dims[ar.source]);
  return Representation::trusted(alg, std::move(dims), std::move(arrows));
}

Representation regular_rep(const AlgebraPtr& alg) {
  std::vector<RepPtr> parts;
  for (VertexId v = 0; v < alg->quiver().vertex_count(); ++v) parts.push_back(share(projective_rep(alg, v)));
  return direct_sum_module(parts);
}

Representation left_ideal_rep(const AlgebraPtr& alg, ArrowId alpha) {
  if (!alg->is_quadratic_monomial()) throw Error(ErrorCode::NotMonomial, "left ideal model needs a quadratic monomial algebra");
  const Quiver& q = alg->quiver();
  if (alpha >= q.arrow_count()) throw Error(ErrorCode::BadIndex, "arrow out of range");
  VertexId v = q.arrow(alpha).source;
  RepPtr p = share(projective_rep(alg, v));
  std::vector<Matrix> bases;
  for (VertexId w = 0; w < q.vertex_count(); ++w) {
    const auto& idx = alg->basis_between(v, w);
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const Path& path = alg->basis()[idx[k]];
      if (!path.arrows.empty() && path.arrows.front() == alpha) keep.push_back(k);
    }
    Matrix b(alg->field(), idx.size(), keep.size());
    for (std::size_t c = 0; c < keep.size(); ++c) b.set(keep[c], c, Scalar::one(alg->field()));
    bases.push_back(std::move(b));
  }
  return *submodule(p, bases).module;
}

DirectSum direct_sum(const std::vector<RepPtr>& parts) {
  if (parts.empty()) throw Error(ErrorCode::BadIndex, "direct sum of no modules");
  for (const auto& p : parts) require_same_algebra(*parts.front(), *p);
  const AlgebraPtr& alg = parts.front()->algebra();
  const Quiver& q = alg->quiver();
  const Field& f = alg->field();
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  for (const auto& p : parts)
    for (VertexId v = 0; v < dims.size(); ++v) dims[v] += p->dim(v);
  std::vector<Matrix> arrows;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p->arrow(a));
    arrows.push_back(block_diagonal(f, blocks));
  }
  DirectSum out{share(Representation::trusted(alg, dims, std::move(arrows))), {}, {}};
  std::vector<std::size_t> offset(q.vertex_count(), 0);
  for (const auto& p : parts) {
    std::vector<Matrix> inc, proj;
    for (VertexId v = 0; v < dims.size(); ++v) {
      Matrix i(f, dims[v], p->dim(v));
      i.set_block(offset[v], 0, Matrix::identity(f, p->dim(v)));
      proj.push_back(i.transpose());
      inc.push_back(std::move(i));
      offset[v] += p->dim(v);
    }
    out.inclusions.push_back(RepMorphism::trusted(p, out.sum, std::move(inc)));
    out.projections.push_back(RepMorphism::trusted(out.sum, p, std::move(proj)));
  }
  return out;
}

Representation direct_sum_module(const std::vector<RepPtr>& parts) { return *direct_sum(parts).sum; }

Representation power(const RepPtr& m, std::size_t n) {
  if (n == 0) return Representation::zero(m->algebra());
  return direct_sum_module(std::vector<RepPtr>(n, m));
}

// ---------------------------------------------------------------- Hom

std::vector<RepMorphism> hom_space(const RepPtr& m, const RepPtr& n) {
  require_same_algebra(*m, *n);
  const Quiver& q = m->algebra()->quiver();
  const Field& f = m->field();
  const std::size_t nv = q.vertex_count();
  std::vector<std::size_t> off(nv + 1, 0);
  for (VertexId v = 0; v < nv; ++v) off[v + 1] = off[v] + n->dim(v) * m->dim(v);
  const std::size_t unknowns = off[nv];
  std::size_t eqs = 0;
  for (const Arrow& ar : q.arrows()) eqs += n->dim(ar.target) * m->dim(ar.source);

  // φ_v entry (r, c) is unknown off[v] + r * dim M_v + c.
  Matrix sys(f, eqs, unknowns);
  std::size_t row = 0;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    const std::size_t i = ar.source, j = ar.target;
    const Matrix& Ma = m->arrow(a);
    const Matrix& Na = n->arrow(a);
    for (std::size_t r = 0; r < n->dim(j); ++r)
      for (std::size_t c = 0; c < m->dim(i); ++c, ++row) {
        for (std::size_t k = 0; k < n->dim(i); ++k)
          if (!Na.entry_is_zero(r, k)) {
            std::size_t u = off[i] + k * m->dim(i) + c;
            sys.set(row, u, sys.at(row, u) + Na.at(r, k));
          }
        for (std::size_t k = 0; k < m->dim(j); ++k)
          if (!Ma.entry_is_zero(k, c)) {
            std::size_t u = off[j] + r * m->dim(j) + k;
            sys.set(row, u, sys.at(row, u) - Ma.at(k, c));
          }
      }
  }
  Matrix ker = kernel_basis(sys);
  std::vector<RepMorphism> out;
  for (std::size_t col = 0; col < ker.cols(); ++col) {
    std::vector<Matrix> maps;
    for (VertexId v = 0; v < nv; ++v) {
      Matrix phi(f, n->dim(v), m->dim(v));
      for (std::size_t r = 0; r < n->dim(v); ++r)
        for (std::size_t c = 0; c < m->dim(v); ++c) {
          std::size_t u = off[v] + r * m->dim(v) + c;
          if (!ker.entry_is_zero(u, col)) phi.set(r, c, ker.at(u, col));
        }
      maps.push_back(std::move(phi));
    }
    out.push_back(RepMorphism::trusted(m, n, std::move(maps)));
  }
  return out;
}

std::size_t hom_dim(const Representation& m, const Representation& n) {
  return hom_space(share(m), share(n)).size();
}

// ---------------------------------------------------------------- sub and quotient modules

SubQuotient submodule(const RepPtr& m, const std::vector<Matrix>& bases) {
  const AlgebraPtr& alg = m->algebra();
  const Quiver& q = alg->quiver();
  if (bases.size() != q.vertex_count()) throw Error(ErrorCode::ShapeMismatch, "one basis per vertex expected");
  std::vector<std::size_t> dims;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    if (bases[v].rows() != m->dim(v)) throw Error(ErrorCode::ShapeMismatch, "basis has the wrong height");
    dims.push_back(bases[v].cols());
  }
  std::vector<Matrix> arrows;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    Matrix img = m->arrow(a) * bases[ar.source];
    if (dims[ar.target] == 0 || dims[ar.source] == 0) {
      if (!img.is_zero()) throw Error(ErrorCode::NotHomomorphism, "subspace is not arrow-stable");
      arrows.emplace_back(alg->field(), dims[ar.target], dims[ar.source]);
      continue;
    }
    auto x = solve(bases[ar.target], img);
    if (!x) throw Error(ErrorCode::NotHomomorphism, "subspace is not arrow-stable");
    arrows.push_back(std::move(*x));
  }
  RepPtr sub = share(Representation::trusted(alg, std::move(dims), std::move(arrows)));
  return {sub, RepMorphism::trusted(sub, m, bases)};
}

SubQuotient kernel(const RepMorphism& f) {
  std::vector<Matrix> bases;
  for (const auto& m : f.maps()) bases.push_back(kernel_basis(m));
  return submodule(f.source(), bases);
}

SubQuotient image(const RepMorphism& f) {
  std::vector<Matrix> bases;
  for (const auto& m : f.maps()) bases.push_back(column_basis(m));
  return submodule(f.target(), bases);
}

namespace {

// Quotient of m by the arrow-stable subspaces spanned by `sub` (independent columns).
SubQuotient quotient(const RepPtr& m, const std::vector<Matrix>& sub) {
  const AlgebraPtr& alg = m->algebra();
  const Quiver& q = alg->quiver();
  const Field& f = alg->field();
  std::vector<Matrix> comp, proj;
  std::vector<std::size_t> dims;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    const std::size_t n = m->dim(v), r = sub[v].cols();
    Matrix id = Matrix::identity(f, n);
    auto cols = complement_columns(sub[v], id);
    Matrix c = id.select_cols(cols);
    Matrix full = sub[v].hstack(c);
    Matrix inv = inverse(full);
    proj.push_back(inv.block(r, 0, n - r, n));
    comp.push_back(std::move(c));
    dims.push_back(n - r);
  }
  std::vector<Matrix> arrows;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    arrows.push_back(proj[ar.target] * m->arrow(a) * comp[ar.source]);
  }
  RepPtr quot = share(Representation::trusted(alg, std::move(dims), std::move(arrows)));
  return {quot, RepMorphism::trusted(m, quot, std::move(proj))};
}

}  // namespace

SubQuotient cokernel(const RepMorphism& f) {
  std::vector<Matrix> bases;
  for (const auto& m : f.maps()) bases.push_back(column_basis(m));
  return quotient(f.target(), bases);
}

// ---------------------------------------------------------------- radical and top

namespace {

std::vector<Matrix> next_layer(const Representation& m, const std::vector<Matrix>& current) {
  const Quiver& q = m.algebra()->quiver();
  std::vector<Matrix> out;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    Matrix span(m.field(), m.dim(v), 0);
    for (ArrowId a : q.arrows_in(v)) span = span.hstack(m.arrow(a) * current[q.arrow(a).source]);
    out.push_back(column_basis(span));
  }
  return out;
}

std::vector<Matrix> whole(const Representation& m) {
  std::vector<Matrix> out;
  for (auto d : m.dims()) out.push_back(Matrix::identity(m.field(), d));
  return out;
}

}  // namespace

std::vector<Matrix> radical_basis(const Representation& m) { return next_layer(m, whole(m)); }

std::vector<std::vector<std::size_t>> radical_layers(const Representation& m) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<Matrix> cur = whole(m);
  while (true) {
    std::vector<Matrix> nxt = next_layer(m, cur);
    std::vector<std::size_t> layer;
    bool any = false;
    for (std::size_t v = 0; v < cur.size(); ++v) {
      layer.push_back(cur[v].cols() - nxt[v].cols());
      any = any || cur[v].cols() > 0;
    }
    if (!any) break;
    out.push_back(std::move(layer));
    cur = std::move(nxt);
  }
  return out;
}

std::vector<std::size_t> top_dims(const Representation& m) {
  std::vector<Matrix> rad = radical_basis(m);
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < rad.size(); ++v) out.push_back(m.dim(v) - rad[v].cols());
  return out;
}

// ---------------------------------------------------------------- isomorphism

IsoVerdict is_isomorphic(const RepPtr& m, const RepPtr& n, const IsoOptions& opt) {
  require_same_algebra(*m, *n);
  if (m->dims() != n->dims()) return {IsoKind::No, std::nullopt, "dimension vectors differ"};
  if (*m == *n) return {IsoKind::Yes, RepMorphism::identity(m), ""};
  if (radical_layers(*m) != radical_layers(*n)) return {IsoKind::No, std::nullopt, "radical layers differ"};
  auto hmn = hom_space(m, n);
  auto hnm = hom_space(n, m);
  const std::size_t end = hom_space(m, m).size();
  if (hmn.size() != end || hnm.size() != end)
    return {IsoKind::No, std::nullopt, "dim Hom(M,N), dim Hom(N,M) and dim End(M) disagree"};
  for (const auto& f : hmn)
    if (f.is_invertible()) return {IsoKind::Yes, f, ""};

  const Field& fld = m->field();
  const std::size_t d = hmn.size();
  std::vector<std::int64_t> values;
  if (fld.is_prime())
    for (std::uint64_t r = 0; r < fld.characteristic(); ++r) values.push_back(static_cast<std::int64_t>(r));
  else
    values = {0, 1, -1, 2, -2};
  const std::uint64_t base = values.size();

  auto candidate = [&](const std::vector<std::int64_t>& c) {
    std::vector<Scalar> coeffs;
    for (auto x : c) coeffs.push_back(Scalar(fld, x));
    return combine(hmn, coeffs, m, n);
  };

  std::uint64_t total = 1;
  bool exhaustive = d <= opt.exhaustive_dim;
  for (std::size_t i = 0; i < d && exhaustive; ++i) {
    total *= base;
    if (total > opt.exhaustive_limit) exhaustive = false;
  }
  if (exhaustive) {
    std::vector<std::int64_t> c(d);
    for (std::uint64_t code = 1; code < total; ++code) {
      std::uint64_t x = code;
      for (std::size_t i = 0; i < d; ++i, x /= base) c[i] = values[x % base];
      RepMorphism f = candidate(c);
      if (f.is_invertible()) return {IsoKind::Yes, f, ""};
    }
    if (fld.is_prime()) return {IsoKind::No, std::nullopt, "no invertible map in Hom(M,N)"};
    return {IsoKind::Unknown, std::nullopt, "no invertible map on the coefficient grid"};
  }
  std::mt19937_64 rng(opt.seed);
  std::vector<std::int64_t> c(d);
  for (std::size_t s = 0; s < opt.samples; ++s) {
    for (auto& x : c) x = values[rng() % base];
    RepMorphism f = candidate(c);
    if (f.is_invertible()) return {IsoKind::Yes, f, ""};
  }
  return {IsoKind::Unknown, std::nullopt, "no invertible map found among sampled combinations"};
}

}  // namespace sing
