#include "sing/module_backend.hpp"

#include "sing/linalg.hpp"
#include "sing/tower.hpp"

namespace sing {

ColimitReport stab_hom_report(const ModuleStabObject& x, const ModuleStabObject& y, std::int64_t p_max,
                              std::size_t window) {
  SyzygyTower tower(x.object->algebra());
  const std::size_t ix = tower.add_object(x.object);
  const std::size_t iy = tower.add_object(y.object);
  const std::int64_t p0 = std::max(x.shift, y.shift);
  const std::size_t depth = static_cast<std::size_t>(std::max<std::int64_t>(p_max - p0, 0)) + 4;
  return tower_report(tower, ix, x.shift, iy, y.shift, p_max, window, depth);
}

namespace {

Evidence witnessed(std::size_t depth) { return {EvidenceKind::Witnessed, depth, ""}; }

Matrix coordinates_of(const StableHomSpace& space, const std::vector<RepMorphism>& maps) {
  Matrix out(space.source()->field(), space.dim(), maps.size());
  for (std::size_t j = 0; j < maps.size(); ++j) out.set_block(0, j, space.coordinate_column(maps[j]));
  return out;
}

}  // namespace

EquivalenceEvidence pre_triangle_equiv_check(const ModuleFunctor& h, const std::vector<RepPtr>& source_objects,
                                             const std::vector<RepPtr>& target_objects, std::size_t depth) {
  EquivalenceEvidence ev{witnessed(0), witnessed(0), witnessed(0)};

  for (std::size_t a = 0; a < source_objects.size(); ++a)
    for (std::size_t b = 0; b < source_objects.size(); ++b) {
      const RepPtr& x = source_objects[a];
      const RepPtr& y = source_objects[b];
      StableHomSpace here(x, y);
      StableHomSpace there(h.object(x), h.object(y));
      const std::string pair = "objects " + std::to_string(a) + " -> " + std::to_string(b);

      // Faithful: every stable map killed by H is killed by some Ω^i.
      if (ev.faithful.kind == EvidenceKind::Witnessed && here.dim() > 0) {
        std::vector<RepMorphism> images;
        for (const auto& f : here.basis()) images.push_back(h.morphism(f));
        Matrix ker = kernel_basis(coordinates_of(there, images));
        for (std::size_t c = 0; c < ker.cols(); ++c) {
          std::vector<Scalar> coeffs;
          for (std::size_t i = 0; i < ker.rows(); ++i) coeffs.push_back(ker.at(i, c));
          RepMorphism f = here.element(coeffs);
          std::size_t i = 0;
          bool found = false;
          for (; i <= depth; ++i, f = syzygy_of_morphism(f))
            if (stably_equal(f, f - f)) {
              found = true;
              break;
            }
          if (!found) {
            ev.faithful = {EvidenceKind::NotWitnessedUpTo, depth, pair + ": a nonzero map is sent to zero"};
            break;
          }
          ev.faithful.depth = std::max(ev.faithful.depth, i);
        }
      }

      // Full: Ω^i g lies in H(stHom(Ω^i X, Ω^i Y)) for some i.
      if (ev.full.kind == EvidenceKind::Witnessed) {
        for (const auto& g0 : there.basis()) {
          RepMorphism g = g0;
          bool found = false;
          std::size_t i = 0;
          for (; i <= depth; ++i) {
            RepPtr xi = syzygy(x, i), yi = syzygy(y, i);
            StableHomSpace src(xi, yi);
            StableHomSpace tgt(g.source(), g.target());
            std::vector<RepMorphism> images;
            for (const auto& f : src.basis()) images.push_back(h.morphism(f));
            if (column_span_contains(coordinates_of(tgt, images), tgt.coordinate_column(g))) {
              found = true;
              break;
            }
            g = syzygy_of_morphism(g);
          }
          if (!found) {
            ev.full = {EvidenceKind::NotWitnessedUpTo, depth, pair + ": a target map has no preimage"};
            break;
          }
          ev.full.depth = std::max(ev.full.depth, i);
        }
      }
    }

  // Dense: some Ω^i Z is in the image.
  for (std::size_t k = 0; k < target_objects.size(); ++k) {
    RepPtr z = target_objects[k];
    bool found = false;
    std::size_t i = 0;
    for (; i <= depth; ++i, z = syzygy(z, 1))
      if (h.in_image(z)) {
        found = true;
        break;
      }
    if (!found) {
      ev.dense = {EvidenceKind::NotWitnessedUpTo, depth, "target object " + std::to_string(k) + " not reached"};
      break;
    }
    ev.dense.depth = std::max(ev.dense.depth, i);
  }
  return ev;
}

ModuleFunctor identity_functor() {
  return {[](const RepPtr& x) { return x; }, [](const RepMorphism& f) { return f; },
          [](const RepPtr&) { return true; }};
}

bool is_semisimple_plus_projective(const RepPtr& m) {
  const AlgebraPtr& alg = m->algebra();
  const std::size_t nv = alg->quiver().vertex_count();
  std::vector<RepPtr> proj;
  for (VertexId v = 0; v < nv; ++v) proj.push_back(share(projective_rep(alg, v)));
  const std::vector<std::size_t> top = top_dims(*m);
  // Try every count of projective summands P_v^{b_v} with b_v <= top_v.
  std::vector<std::size_t> b(nv, 0);
  while (true) {
    std::vector<std::size_t> rest = m->dims();
    bool fits = true;
    for (VertexId v = 0; v < nv && fits; ++v)
      for (VertexId w = 0; w < nv; ++w) {
        const std::size_t need = b[v] * proj[v]->dim(w);
        if (need > rest[w]) {
          fits = false;
          break;
        }
        rest[w] -= need;
      }
    if (fits) {
      std::vector<RepPtr> parts;
      for (VertexId v = 0; v < nv; ++v) {
        for (std::size_t k = 0; k < b[v]; ++k) parts.push_back(proj[v]);
        for (std::size_t k = 0; k < rest[v]; ++k) parts.push_back(share(simple_rep(alg, v)));
      }
      RepPtr candidate = parts.empty() ? share(Representation::zero(alg)) : direct_sum(parts).sum;
      if (is_isomorphic(m, candidate).kind == IsoKind::Yes) return true;
    }
    VertexId v = 0;
    while (v < nv && b[v] == top[v]) b[v++] = 0;
    if (v == nv) return false;
    ++b[v];
  }
}

ModuleFunctor semisimple_plus_projective_inclusion(const AlgebraPtr&) {
  return {[](const RepPtr& x) { return x; }, [](const RepMorphism& f) { return f; },
          [](const RepPtr& z) { return is_semisimple_plus_projective(z); }};
}

ModuleFunctor zero_functor(const AlgebraPtr& alg) {
  RepPtr zero = share(Representation::zero(alg));
  return {[zero](const RepPtr&) { return zero; },
          [zero](const RepMorphism&) { return RepMorphism::zero(zero, zero); },
          [](const RepPtr& z) { return is_projective(*z); }};
}

}  // namespace sing
