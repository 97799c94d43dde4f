#include "sing/homological.hpp"

#include "sing/error.hpp"
#include "sing/linalg.hpp"
#include "sing/random_modules.hpp"

namespace sing {

namespace {

// Position of each summand's block inside the cover at vertex u.
std::vector<std::size_t> summand_offsets(const BoundAlgebra& alg, const std::vector<VertexId>& gens, VertexId u) {
  std::vector<std::size_t> off;
  std::size_t acc = 0;
  for (VertexId w : gens) {
    off.push_back(acc);
    acc += alg.basis_between(w, u).size();
  }
  return off;
}

// φ(x) for x in P at vertex u, as a linear function of the generator images of
// φ: P -> N stacked generator by generator.
Matrix evaluate_on_free(const CoverData& p, const Representation& n, VertexId u, const Matrix& x) {
  const BoundAlgebra& alg = *p.cover->algebra();
  std::size_t total = 0;
  std::vector<std::size_t> col_off;
  for (VertexId w : p.generator_vertex) {
    col_off.push_back(total);
    total += n.dim(w);
  }
  Matrix out(n.field(), n.dim(u), total);
  auto off = summand_offsets(alg, p.generator_vertex, u);
  for (std::size_t k = 0; k < p.generator_vertex.size(); ++k) {
    const VertexId w = p.generator_vertex[k];
    const auto& paths = alg.basis_between(w, u);
    Matrix block(n.field(), n.dim(u), n.dim(w));
    bool any = false;
    for (std::size_t i = 0; i < paths.size(); ++i) {
      if (x.entry_is_zero(off[k] + i, 0)) continue;
      block = block + n.path_matrix(alg.basis()[paths[i]]).scaled(x.at(off[k] + i, 0));
      any = true;
    }
    if (any) out.set_block(0, col_off[k], block);
  }
  return out;
}

}  // namespace

CoverData projective_cover(const RepPtr& m) {
  const AlgebraPtr& alg = m->algebra();
  const Quiver& q = alg->quiver();
  const Field& f = alg->field();
  std::vector<Matrix> rad = radical_basis(*m);
  std::vector<VertexId> gen_vertex;
  std::vector<std::size_t> gen_vector;
  for (VertexId v = 0; v < q.vertex_count(); ++v)
    for (std::size_t j : complement_columns(rad[v], Matrix::identity(f, m->dim(v)))) {
      gen_vertex.push_back(v);
      gen_vector.push_back(j);
    }

  RepPtr cover;
  if (gen_vertex.empty()) {
    cover = share(Representation::zero(alg));
  } else {
    std::vector<RepPtr> parts;
    for (VertexId w : gen_vertex) parts.push_back(share(projective_rep(alg, w)));
    cover = direct_sum(parts).sum;
  }

  std::vector<Matrix> proj;
  for (VertexId u = 0; u < q.vertex_count(); ++u) {
    Matrix pu(f, m->dim(u), cover->dim(u));
    auto off = summand_offsets(*alg, gen_vertex, u);
    for (std::size_t k = 0; k < gen_vertex.size(); ++k) {
      const auto& paths = alg->basis_between(gen_vertex[k], u);
      for (std::size_t i = 0; i < paths.size(); ++i)
        pu.set_block(0, off[k] + i, m->path_matrix(alg->basis()[paths[i]]).column(gen_vector[k]));
    }
    proj.push_back(std::move(pu));
  }
  RepMorphism projection = RepMorphism::trusted(cover, m, std::move(proj));
  SubQuotient ker = kernel(projection);

  std::vector<std::size_t> gen_pos;
  for (std::size_t k = 0; k < gen_vertex.size(); ++k)
    gen_pos.push_back(summand_offsets(*alg, gen_vertex, gen_vertex[k])[k]);
  return CoverData{m, cover, std::move(projection), ker.module, std::move(ker.map), std::move(gen_vertex),
                   std::move(gen_pos)};
}

bool is_projective(const Representation& m) { return projective_cover(share(m)).syzygy->is_zero(); }

RepPtr syzygy(const RepPtr& m, std::size_t k) {
  RepPtr cur = m;
  for (std::size_t i = 0; i < k; ++i) cur = projective_cover(cur).syzygy;
  return cur;
}

RepMorphism lift_from_projective(const CoverData& cd, const RepMorphism& g, const RepMorphism& surj,
                                 std::mt19937_64* rng) {
  const AlgebraPtr& alg = cd.cover->algebra();
  const Quiver& q = alg->quiver();
  const Field& f = alg->field();
  const RepPtr& e = surj.source();
  std::vector<Matrix> images;
  for (std::size_t k = 0; k < cd.generator_vertex.size(); ++k) {
    const VertexId w = cd.generator_vertex[k];
    Matrix t = g.at(w).column(cd.generator_position[k]);
    auto y = solve(surj.at(w), t);
    if (!y) throw Error(ErrorCode::Internal, "lift: map is not onto the generator image");
    if (rng) {
      Matrix kb = kernel_basis(surj.at(w));
      for (std::size_t c = 0; c < kb.cols(); ++c) *y = *y + kb.column(c).scaled(random_scalar(f, *rng));
    }
    images.push_back(std::move(*y));
  }
  std::vector<Matrix> maps;
  for (VertexId u = 0; u < q.vertex_count(); ++u) {
    Matrix hu(f, e->dim(u), cd.cover->dim(u));
    auto off = summand_offsets(*alg, cd.generator_vertex, u);
    for (std::size_t k = 0; k < cd.generator_vertex.size(); ++k) {
      const auto& paths = alg->basis_between(cd.generator_vertex[k], u);
      for (std::size_t i = 0; i < paths.size(); ++i)
        hu.set_block(0, off[k] + i, e->path_matrix(alg->basis()[paths[i]]) * images[k]);
    }
    maps.push_back(std::move(hu));
  }
  return RepMorphism::trusted(cd.cover, e, std::move(maps));
}

RepMorphism syzygy_of_morphism(const RepMorphism& f, std::mt19937_64* rng) {
  CoverData cm = projective_cover(f.source());
  CoverData cn = projective_cover(f.target());
  RepMorphism h = lift_from_projective(cm, compose(f, cm.projection), cn.projection, rng);
  RepMorphism r = compose(h, cm.kernel_embedding);
  std::vector<Matrix> maps;
  for (VertexId v = 0; v < r.maps().size(); ++v) {
    auto x = solve(cn.kernel_embedding.at(v), r.at(v));
    if (!x) throw Error(ErrorCode::Internal, "lift does not preserve kernels");
    maps.push_back(std::move(*x));
  }
  return RepMorphism::trusted(cm.syzygy, cn.syzygy, std::move(maps));
}

// ---------------------------------------------------------------- stable Hom

Matrix flatten(const RepMorphism& f) {
  std::size_t total = 0;
  for (const auto& m : f.maps()) total += m.rows() * m.cols();
  Matrix out(f.field(), total, 1);
  std::size_t k = 0;
  for (const auto& m : f.maps())
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c, ++k)
        if (!m.entry_is_zero(r, c)) out.set(k, 0, m.at(r, c));
  return out;
}

namespace {

Matrix flatten_all(const Field& f, std::size_t rows, const std::vector<RepMorphism>& maps) {
  Matrix out(f, rows, maps.size());
  for (std::size_t j = 0; j < maps.size(); ++j) out.set_block(0, j, flatten(maps[j]));
  return out;
}

std::size_t flat_size(const Representation& m, const Representation& n) {
  std::size_t s = 0;
  for (VertexId v = 0; v < m.dims().size(); ++v) s += m.dim(v) * n.dim(v);
  return s;
}

}  // namespace

StableHomSpace::StableHomSpace(const RepPtr& m, const RepPtr& n)
    : source_(m), target_(n), left_inverse_(m->field(), 0, 0) {
  require_same_algebra(*m, *n);
  const Field& f = m->field();
  const std::size_t u = flat_size(*m, *n);
  std::vector<RepMorphism> hom = hom_space(m, n);
  hom_dim_ = hom.size();
  if (hom.empty()) return;

  CoverData cn = projective_cover(n);
  std::vector<RepMorphism> through;
  for (const auto& phi : hom_space(m, cn.cover)) through.push_back(compose(cn.projection, phi));
  Matrix pb = column_basis(flatten_all(f, u, through));
  Matrix vh = flatten_all(f, u, hom);
  std::vector<std::size_t> idx = complement_columns(pb, vh);
  for (std::size_t i : idx) basis_.push_back(hom[i]);

  Matrix a = vh.select_cols(idx).hstack(pb);
  RowEchelon rt = row_reduce(a.transpose());
  Matrix sq = a.select_rows(rt.pivots);
  Matrix inv = inverse(sq);
  left_inverse_ = Matrix(f, a.cols(), u);
  for (std::size_t i = 0; i < rt.pivots.size(); ++i) left_inverse_.set_block(0, rt.pivots[i], inv.column(i));
}

Matrix StableHomSpace::coordinate_column(const RepMorphism& f) const {
  if (basis_.empty()) return Matrix(source_->field(), 0, 1);
  return (left_inverse_ * flatten(f)).block(0, 0, basis_.size(), 1);
}

std::vector<Scalar> StableHomSpace::coordinates(const RepMorphism& f) const {
  Matrix c = coordinate_column(f);
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < c.rows(); ++i) out.push_back(c.at(i, 0));
  return out;
}

bool StableHomSpace::is_stably_zero(const RepMorphism& f) const { return coordinate_column(f).is_zero(); }

RepMorphism StableHomSpace::element(const std::vector<Scalar>& coeffs) const {
  return combine(basis_, coeffs, source_, target_);
}

bool stably_equal(const RepMorphism& f, const RepMorphism& g) {
  return StableHomSpace(f.source(), f.target()).stably_equal(f, g);
}

// ---------------------------------------------------------------- triangles

void require_exact(const RepMorphism& g, const RepMorphism& f) {
  if (!(*g.target() == *f.source())) throw Error(ErrorCode::NotExact, "maps are not composable");
  for (VertexId v = 0; v < g.maps().size(); ++v) {
    const std::size_t rg = rank(g.at(v)), rf = rank(f.at(v));
    if (rg != g.source()->dim(v)) throw Error(ErrorCode::NotExact, "first map is not injective");
    if (rf != f.target()->dim(v)) throw Error(ErrorCode::NotExact, "second map is not surjective");
    if (!(f.at(v) * g.at(v)).is_zero() || rg + rf != f.source()->dim(v))
      throw Error(ErrorCode::NotExact, "image of the first map is not the kernel of the second");
  }
}

CanonicalTriangle canonical_triangle(const RepMorphism& g, const RepMorphism& f, std::mt19937_64* rng) {
  require_exact(g, f);
  CoverData cm = projective_cover(f.target());
  RepMorphism u = lift_from_projective(cm, cm.projection, f, rng);
  RepMorphism r = compose(u, cm.kernel_embedding);
  std::vector<Matrix> maps;
  for (VertexId v = 0; v < r.maps().size(); ++v) {
    auto x = solve(g.at(v), r.at(v));
    if (!x) throw Error(ErrorCode::Internal, "lifted kernel does not land in the image of g");
    maps.push_back(std::move(*x));
  }
  RepMorphism h = RepMorphism::trusted(cm.syzygy, g.source(), std::move(maps));
  return CanonicalTriangle{std::move(h), g, f, std::move(u), std::move(cm)};
}

// ---------------------------------------------------------------- Ext and dimensions

std::vector<CoverData> minimal_resolution(const RepPtr& m, std::size_t length) {
  std::vector<CoverData> steps;
  steps.push_back(projective_cover(m));
  while (steps.size() <= length) steps.push_back(projective_cover(steps.back().syzygy));
  return steps;
}

std::size_t ext_dim(const RepPtr& m, const RepPtr& n, std::size_t i) {
  require_same_algebra(*m, *n);
  std::vector<CoverData> res = minimal_resolution(m, i + 1);
  auto cochain_dim = [&](std::size_t k) {
    std::size_t d = 0;
    for (VertexId w : res[k].generator_vertex) d += n->dim(w);
    return d;
  };
  // Rank of Hom(P_{k-1}, N) -> Hom(P_k, N), φ ↦ φ ∘ d_k.
  auto coboundary_rank = [&](std::size_t k) -> std::size_t {
    if (k == 0 || cochain_dim(k) == 0 || cochain_dim(k - 1) == 0) return 0;
    RepMorphism d = compose(res[k - 1].kernel_embedding, res[k].projection);
    Matrix mat(n->field(), 0, cochain_dim(k - 1));
    for (std::size_t j = 0; j < res[k].generator_vertex.size(); ++j) {
      const VertexId w = res[k].generator_vertex[j];
      mat = mat.vstack(evaluate_on_free(res[k - 1], *n, w, d.at(w).column(res[k].generator_position[j])));
    }
    return rank(mat);
  };
  return cochain_dim(i) - coboundary_rank(i + 1) - coboundary_rank(i);
}

ProjDim proj_dim(const RepPtr& m, std::size_t bound) {
  RepPtr cur = m;
  for (std::size_t d = 0; d <= bound; ++d) {
    RepPtr next = projective_cover(cur).syzygy;
    if (next->is_zero()) return {true, d};
    cur = next;
  }
  return {false, bound};
}

bool is_injective(const RepPtr& m) {
  const AlgebraPtr& alg = m->algebra();
  for (VertexId v = 0; v < alg->quiver().vertex_count(); ++v)
    if (ext_dim(share(simple_rep(alg, v)), m, 1) != 0) return false;
  return true;
}

}  // namespace sing
