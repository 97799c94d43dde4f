#include "sing/tower.hpp"

#include <numeric>

#include "sing/error.hpp"
#include "sing/linalg.hpp"

namespace sing {

namespace {

using u128 = unsigned __int128;

std::uint64_t checked(u128 v) {
  if (v > static_cast<u128>(UINT64_MAX)) throw Error(ErrorCode::Overflow, "dimension exceeds 64 bits");
  return static_cast<std::uint64_t>(v);
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

Matrix row_basis(const Matrix& m) {
  RowEchelon re = row_reduce(m);
  return re.reduced.block(0, 0, re.pivots.size(), m.cols());
}

}  // namespace

std::vector<CoordinateBlock> coordinate_blocks(const RepPtr& m) {
  const Quiver& q = m->algebra()->quiver();
  const Field& f = m->field();
  const std::size_t nv = q.vertex_count();
  std::vector<std::size_t> off(nv + 1, 0);
  for (VertexId v = 0; v < nv; ++v) off[v + 1] = off[v] + m->dim(v);
  UnionFind uf(off[nv]);
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    const Matrix& mat = m->arrow(a);
    for (std::size_t r = 0; r < mat.rows(); ++r)
      for (std::size_t c = 0; c < mat.cols(); ++c)
        if (!mat.entry_is_zero(r, c)) uf.unite(off[ar.source] + c, off[ar.target] + r);
  }
  std::map<std::size_t, std::vector<std::vector<std::size_t>>> comps;
  for (VertexId v = 0; v < nv; ++v)
    for (std::size_t i = 0; i < m->dim(v); ++i) {
      auto& c = comps[uf.find(off[v] + i)];
      if (c.empty()) c.resize(nv);
      c[v].push_back(i);
    }
  std::vector<CoordinateBlock> out;
  if (comps.size() == 1) {
    out.push_back({m, RepMorphism::identity(m), RepMorphism::identity(m)});
    return out;
  }
  for (auto& [root, idx] : comps) {
    std::vector<std::size_t> dims;
    for (VertexId v = 0; v < nv; ++v) dims.push_back(idx[v].size());
    std::vector<Matrix> arrows;
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
      const Arrow& ar = q.arrow(a);
      arrows.push_back(m->arrow(a).select_rows(idx[ar.target]).select_cols(idx[ar.source]));
    }
    RepPtr b = share(Representation::trusted(m->algebra(), dims, std::move(arrows)));
    std::vector<Matrix> inc, proj;
    for (VertexId v = 0; v < nv; ++v) {
      Matrix i(f, m->dim(v), idx[v].size());
      for (std::size_t k = 0; k < idx[v].size(); ++k) i.set(idx[v][k], k, Scalar::one(f));
      proj.push_back(i.transpose());
      inc.push_back(std::move(i));
    }
    out.push_back({b, RepMorphism::trusted(b, m, std::move(inc)), RepMorphism::trusted(m, b, std::move(proj))});
  }
  return out;
}

SyzygyTower::SyzygyTower(AlgebraPtr alg, IsoOptions iso) : alg_(std::move(alg)), iso_(iso) {
  for (VertexId v = 0; v < alg_->quiver().vertex_count(); ++v)
    projective_dims_.push_back(projective_rep(alg_, v).total_dim());
}

bool SyzygyTower::looks_projective(const Representation& m) {
  // M is projective iff its projective cover has the same dimension.
  std::size_t cover = 0;
  auto top = top_dims(m);
  for (VertexId v = 0; v < top.size(); ++v) cover += top[v] * projective_dims_[v];
  return cover == m.total_dim();
}

std::size_t SyzygyTower::find_or_add(const RepPtr& block, RepMorphism& witness) {
  for (std::size_t id = 0; id < atoms_.size(); ++id) {
    const RepPtr& a = atoms_[id].module;
    if (a->dims() != block->dims()) continue;
    IsoVerdict v = is_isomorphic(a, block, iso_);
    if (v.kind == IsoKind::Yes) {
      witness = *v.witness;
      return id;
    }
  }
  atoms_.push_back(Atom{block, false, {}});
  witness = RepMorphism::identity(block);
  return atoms_.size() - 1;
}

std::vector<SyzygyTower::Child> SyzygyTower::classify(const RepPtr& m) {
  std::vector<Child> out;
  for (auto& b : coordinate_blocks(m)) {
    if (looks_projective(*b.module)) continue;
    RepMorphism w = RepMorphism::identity(b.module);
    std::size_t id = find_or_add(b.module, w);
    out.push_back(Child{id, compose(b.inclusion, w), compose(w.inverse(), b.projection)});
  }
  return out;
}

const std::vector<SyzygyTower::Child>& SyzygyTower::children(std::size_t a) {
  if (!atoms_[a].expanded) {
    RepPtr omega = projective_cover(atoms_[a].module).syzygy;
    std::vector<Child> kids = classify(omega);
    atoms_[a].children = std::move(kids);
    atoms_[a].expanded = true;
  }
  return atoms_[a].children;
}

std::size_t SyzygyTower::add_object(const RepPtr& m) {
  if (!same_algebra(*m->algebra(), *alg_)) throw Error(ErrorCode::AlgebraMismatch, "object over a different algebra");
  Multiset ms;
  for (const Child& c : classify(m)) ++ms[c.atom];
  levels_.push_back({std::move(ms)});
  return levels_.size() - 1;
}

const SyzygyTower::Multiset& SyzygyTower::level(std::size_t obj, std::size_t k) {
  auto& lv = levels_.at(obj);
  while (lv.size() <= k) {
    std::map<std::size_t, u128> acc;
    Multiset cur = lv.back();
    for (const auto& [atom, mult] : cur)
      for (const Child& c : children(atom)) acc[c.atom] += mult;
    Multiset next;
    for (const auto& [atom, mult] : acc) next[atom] = checked(mult);
    lv.push_back(std::move(next));
  }
  return lv[k];
}

const StableHomSpace& SyzygyTower::stable_hom(std::size_t a, std::size_t b) {
  auto key = std::make_pair(a, b);
  auto it = stable_.find(key);
  if (it == stable_.end())
    it = stable_.emplace(key, std::make_unique<StableHomSpace>(atoms_.at(a).module, atoms_.at(b).module)).first;
  return *it->second;
}

std::uint64_t SyzygyTower::hom_dim(std::size_t x, std::size_t kx, std::size_t y, std::size_t ky) {
  Multiset lx = level(x, kx), ly = level(y, ky);
  u128 total = 0;
  for (const auto& [a, ma] : lx)
    for (const auto& [b, mb] : ly) {
      const std::size_t d = stable_hom(a, b).dim();
      if (d) total += static_cast<u128>(ma) * mb * d;
    }
  return checked(total);
}

const std::vector<SyzygyTower::StepBlock>& SyzygyTower::step(std::size_t a, std::size_t b) {
  auto key = std::make_pair(a, b);
  auto it = steps_.find(key);
  if (it != steps_.end()) return it->second;
  const StableHomSpace& st = stable_hom(a, b);
  std::vector<Child> ca = children(a), cb = children(b);
  std::vector<StepBlock> blocks;
  for (std::size_t r = 0; r < ca.size(); ++r)
    for (std::size_t s = 0; s < cb.size(); ++s)
      blocks.push_back(StepBlock{r, s, Matrix(alg_->field(), stable_hom(ca[r].atom, cb[s].atom).dim(), st.dim())});
  for (std::size_t i = 0; i < st.dim(); ++i) {
    RepMorphism om = syzygy_of_morphism(st.basis()[i]);
    for (auto& blk : blocks) {
      if (blk.map.rows() == 0) continue;
      RepMorphism g = compose(cb[blk.s].from_omega, compose(om, ca[blk.r].into_omega));
      blk.map.set_block(0, i, stable_hom(ca[blk.r].atom, cb[blk.s].atom).coordinate_column(g));
    }
  }
  return steps_.emplace(key, std::move(blocks)).first->second;
}

const Matrix& SyzygyTower::annihilator(std::size_t a, std::size_t b, std::size_t k) {
  auto key = std::make_tuple(a, b, k);
  auto it = annihilators_.find(key);
  if (it != annihilators_.end()) return it->second;
  const std::size_t d = stable_hom(a, b).dim();
  Matrix ann(alg_->field(), 0, d);
  if (k == 0) {
    ann = Matrix::identity(alg_->field(), d);
  } else if (d > 0) {
    const std::vector<Child> ca = children(a);
    const std::vector<Child> cb = children(b);
    const std::vector<StepBlock> blocks = step(a, b);
    for (const auto& blk : blocks) {
      if (blk.map.rows() == 0) continue;
      Matrix child = annihilator(ca[blk.r].atom, cb[blk.s].atom, k - 1);
      if (child.rows() > 0) ann = ann.vstack(child * blk.map);
    }
    if (ann.rows() > 0) ann = row_basis(ann);
  }
  return annihilators_.emplace(key, std::move(ann)).first->second;
}

std::uint64_t SyzygyTower::map_rank(std::size_t x, std::size_t kx, std::size_t y, std::size_t ky, std::size_t steps) {
  Multiset lx = level(x, kx), ly = level(y, ky);
  u128 total = 0;
  for (const auto& [a, ma] : lx)
    for (const auto& [b, mb] : ly) {
      if (stable_hom(a, b).dim() == 0) continue;
      const std::size_t r = annihilator(a, b, steps).rows();
      if (r) total += static_cast<u128>(ma) * mb * r;
    }
  return checked(total);
}

std::optional<std::size_t> SyzygyTower::zero_level(std::size_t obj, std::size_t bound) {
  for (std::size_t k = 0; k <= bound; ++k)
    if (level(obj, k).empty()) return k;
  return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> SyzygyTower::period(std::size_t obj, std::size_t bound) {
  for (std::size_t b = 1; b <= bound; ++b)
    for (std::size_t a = 0; a < b; ++a)
      if (level(obj, a) == level(obj, b)) return std::make_pair(a, b - a);
  return std::nullopt;
}

ColimitReport tower_report(SyzygyTower& tower, std::size_t x, std::int64_t n, std::size_t y, std::int64_t m,
                           std::int64_t p_max, std::size_t window, std::size_t certificate_depth) {
  ColimitSource src;
  src.p0 = std::max(n, m);
  src.p_max = p_max;
  src.window = window;
  if (p_max < src.p0) throw Error(ErrorCode::ShiftOutOfRange, "p_max is below max(n, m)");
  auto ix = [n](std::int64_t p) { return static_cast<std::size_t>(p - n); };
  auto iy = [m](std::int64_t p) { return static_cast<std::size_t>(p - m); };
  src.dim = [&](std::int64_t p) { return tower.hom_dim(x, ix(p), y, iy(p)); };
  src.rank = [&](std::int64_t p, std::int64_t q) {
    return tower.map_rank(x, ix(p), y, iy(p), static_cast<std::size_t>(q - p));
  };

  auto zx = tower.zero_level(x, certificate_depth);
  auto zy = tower.zero_level(y, certificate_depth);
  if (zx || zy) {
    std::int64_t from = INT64_MAX;
    if (zx) from = std::min(from, static_cast<std::int64_t>(*zx) + n);
    if (zy) from = std::min(from, static_cast<std::int64_t>(*zy) + m);
    src.zero_from = std::max(from, src.p0);
    src.zero_reason = zx ? "source has finite projective dimension " + std::to_string(*zx)
                         : "target has finite projective dimension " + std::to_string(*zy);
  } else {
    auto px = tower.period(x, certificate_depth);
    auto py = tower.period(y, certificate_depth);
    if (px && py) {
      const std::int64_t start =
          std::max({src.p0, static_cast<std::int64_t>(px->first) + n, static_cast<std::int64_t>(py->first) + m});
      const std::int64_t len = std::lcm(static_cast<std::int64_t>(px->second), static_cast<std::int64_t>(py->second));
      src.period = PeriodCertificate{start, len};
      src.period_reason = "syzygy multisets repeat with period " + std::to_string(len) + " from index " +
                          std::to_string(start);
    }
  }
  return build_colimit_report(src);
}

ColimitReport explicit_report(const RepPtr& x, std::int64_t n, const RepPtr& y, std::int64_t m, std::int64_t p_max,
                              std::size_t window) {
  const std::int64_t p0 = std::max(n, m);
  if (p_max < p0) throw Error(ErrorCode::ShiftOutOfRange, "p_max is below max(n, m)");
  std::vector<StableHomSpace> spaces;
  for (std::int64_t p = p0; p <= p_max; ++p)
    spaces.emplace_back(syzygy(x, static_cast<std::size_t>(p - n)), syzygy(y, static_cast<std::size_t>(p - m)));
  DirectSystem sys;
  for (const auto& s : spaces) sys.spaces.push_back(s.dim());
  for (std::size_t i = 0; i + 1 < spaces.size(); ++i) {
    Matrix t(x->field(), spaces[i + 1].dim(), spaces[i].dim());
    for (std::size_t j = 0; j < spaces[i].dim(); ++j)
      t.set_block(0, j, spaces[i + 1].coordinate_column(syzygy_of_morphism(spaces[i].basis()[j])));
    sys.maps.push_back(std::move(t));
  }
  ColimitReport r = direct_system_report(sys, window);
  r.p0 = p0;
  r.p_max = p_max;
  return r;
}

}  // namespace sing
