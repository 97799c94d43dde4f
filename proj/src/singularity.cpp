#include "sing/singularity.hpp"

#include <algorithm>

#include "sing/error.hpp"
#include "sing/tower.hpp"

namespace sing {

ColimitReport sg_hom_dim(const SgQuery& q) {
  require_same_algebra(*q.source, *q.target);
  SyzygyTower tower(q.source->algebra());
  const std::size_t x = tower.add_object(q.source);
  const std::size_t y = tower.add_object(q.target);
  const std::int64_t p0 = std::max<std::int64_t>(0, q.shift);
  const std::size_t depth = static_cast<std::size_t>(std::max<std::int64_t>(q.p_max - p0, 0)) + 4;
  return tower_report(tower, x, 0, y, q.shift, q.p_max, q.window, depth);
}

SgZeroVerdict is_sg_zero(const RepPtr& m, std::size_t bound) {
  ProjDim pd = proj_dim(m, bound);
  if (pd.finite) return {SgZeroKind::Zero, pd.value};
  SyzygyTower tower(m->algebra());
  const std::size_t id = tower.add_object(m);
  if (auto per = tower.period(id, bound); per && !tower.level(id, per->first).empty())
    return {SgZeroKind::NonzeroCertified, per->second, per->first};
  return {SgZeroKind::UnknownUpTo, bound};
}

bool is_selfinjective(const AlgebraPtr& alg) {
  for (VertexId v = 0; v < alg->quiver().vertex_count(); ++v)
    if (!is_injective(share(projective_rep(alg, v)))) return false;
  return true;
}

GpVerdict gp_test(const RepPtr& m, std::size_t ext_bound, std::optional<std::size_t> selfinj_dim) {
  if (ext_bound == 0) throw Error(ErrorCode::ShiftOutOfRange, "ext_bound must be at least 1");
  if (is_projective(*m)) return {GpKind::Certified, "projective"};
  const AlgebraPtr& alg = m->algebra();
  if (is_selfinjective(alg)) return {GpKind::Certified, "self-injective algebra"};
  RepPtr reg = share(regular_rep(alg));
  const std::size_t top = std::max(ext_bound, selfinj_dim.value_or(0));
  for (std::size_t i = 1; i <= top; ++i)
    if (std::size_t e = ext_dim(m, reg, i); e != 0) {
      GpVerdict v{GpKind::NotGP, "Ext^" + std::to_string(i) + "(M, A) != 0"};
      v.witness = i;
      v.ext = e;
      return v;
    }
  if (selfinj_dim)
    return {GpKind::Certified, "Ext^i(M, A) = 0 up to self-injective dimension " + std::to_string(*selfinj_dim)};
  GpVerdict v{GpKind::UpToBound, "no nonvanishing Ext^i(M, A) up to the bound"};
  v.bound = ext_bound;
  return v;
}

bool gorenstein_defect_witness(const RepPtr& m, std::size_t bound) {
  return is_sg_zero(m, bound).kind == SgZeroKind::NonzeroCertified && gp_test(m, bound).kind == GpKind::NotGP;
}

BuchweitzReport buchweitz_check(const AlgebraPtr& alg, const std::vector<BuchweitzPair>& pairs, std::int64_t p_max,
                                std::size_t window) {
  if (!is_selfinjective(alg)) throw Error(ErrorCode::NotSelfInjective, "buchweitz_check needs a self-injective algebra");
  BuchweitzReport out;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& pr = pairs[k];
    ColimitReport sg = sg_hom_dim({pr.source, pr.target, pr.shift, p_max, window});
    const std::size_t a = static_cast<std::size_t>(sg.p0);
    StableHomSpace direct(syzygy(pr.source, a), syzygy(pr.target, static_cast<std::size_t>(sg.p0 - pr.shift)));
    bool iso = true;
    for (std::size_t i = 0; i < sg.rank_table.size(); ++i)
      for (std::size_t j = 0; j < sg.rank_table[i].size(); ++j)
        iso = iso && sg.rank_table[i][j] == sg.dims[i] && sg.dims[i] == sg.dims[i + j];
    const bool certified = sg.verdict.kind == VerdictKind::CertifiedStable || sg.verdict.kind == VerdictKind::CertifiedZero;
    const bool ok = iso && certified && sg.verdict.value == direct.dim() && sg.dims.front() == direct.dim();
    out.entries.push_back({k, pr.shift, std::move(sg), direct.dim(), iso, ok});
    out.all_ok = out.all_ok && ok;
  }
  return out;
}

}  // namespace sing
