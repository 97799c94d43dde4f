#include "sing/random_modules.hpp"

#include "sing/homological.hpp"
#include "sing/linalg.hpp"

namespace sing {

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
  if (f.is_prime()) return Scalar::residue(f, rng() % f.characteristic());
  return Scalar(f, static_cast<std::int64_t>(rng() % 5) - 2);
}

RepMorphism random_combination(const std::vector<RepMorphism>& basis, const RepPtr& source, const RepPtr& target,
                               std::mt19937_64& rng) {
  std::vector<Scalar> c;
  for (std::size_t i = 0; i < basis.size(); ++i) c.push_back(random_scalar(source->field(), rng));
  return combine(basis, c, source, target);
}

RepPtr random_projective(const AlgebraPtr& alg, std::mt19937_64& rng, std::size_t max_summands) {
  const std::size_t nv = alg->quiver().vertex_count();
  const std::size_t k = 1 + rng() % max_summands;
  std::vector<RepPtr> parts;
  for (std::size_t i = 0; i < k; ++i) parts.push_back(share(projective_rep(alg, rng() % nv)));
  return parts.size() == 1 ? parts.front() : direct_sum(parts).sum;
}

namespace {

// Basis of the maps q -> p with image inside rad p.
std::vector<RepMorphism> radical_hom_space(const RepPtr& q, const RepPtr& p) {
  const std::vector<RepMorphism> basis = hom_space(q, p);
  const std::vector<Matrix> rad = radical_basis(*p);
  std::vector<Matrix> left;  // rows cut out rad p at each vertex
  for (const auto& b : rad) left.push_back(kernel_basis(b.transpose()).transpose());
  std::vector<Matrix> cols;
  std::size_t rows = 0;
  for (const auto& psi : basis) {
    std::vector<Matrix> parts;
    for (std::size_t v = 0; v < left.size(); ++v) parts.push_back(left[v] * psi.at(v));
    std::size_t total = 0;
    for (const auto& m : parts) total += m.rows() * m.cols();
    Matrix col(p->field(), total, 1);
    std::size_t k = 0;
    for (const auto& m : parts)
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) col.set(k++, 0, m.at(i, j));
    rows = total;
    cols.push_back(std::move(col));
  }
  Matrix conditions(p->field(), rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) conditions.set_block(0, j, cols[j]);
  const Matrix ker = kernel_basis(conditions);
  std::vector<RepMorphism> out;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    std::vector<Scalar> coeffs;
    for (std::size_t i = 0; i < ker.rows(); ++i) coeffs.push_back(ker.at(i, c));
    out.push_back(combine(basis, coeffs, q, p));
  }
  return out;
}

}  // namespace

RepPtr random_module(const AlgebraPtr& alg, std::mt19937_64& rng, std::size_t max_summands) {
  RepPtr p = random_projective(alg, rng, max_summands);
  RepPtr q = random_projective(alg, rng, max_summands);
  RepMorphism phi = random_combination(radical_hom_space(q, p), q, p, rng);
  return cokernel(phi).module;
}

RepMorphism random_base_change(const RepPtr& m, std::mt19937_64& rng) {
  const Field& f = m->field();
  std::vector<Matrix> q, qinv;
  for (auto d : m->dims()) {
    Matrix g(f, d, d);
    do {
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) g.set(i, j, random_scalar(f, rng));
    } while (rank(g) != d);
    qinv.push_back(inverse(g));
    q.push_back(std::move(g));
  }
  const Quiver& quiv = m->algebra()->quiver();
  std::vector<Matrix> arrows;
  for (ArrowId a = 0; a < quiv.arrow_count(); ++a) {
    const Arrow& ar = quiv.arrow(a);
    arrows.push_back(q[ar.target] * m->arrow(a) * qinv[ar.source]);
  }
  RepPtr n = share(Representation::trusted(m->algebra(), m->dims(), std::move(arrows)));
  return RepMorphism::trusted(m, n, std::move(q));
}

ShortExact random_short_exact(const AlgebraPtr& alg, std::mt19937_64& rng) {
  if (rng() % 3 == 0) {
    // The defining sequence 0 -> ΩM -> P(M) -> M -> 0 of a random module.
    CoverData cd = projective_cover(random_module(alg, rng, 2));
    return ShortExact{cd.kernel_embedding, cd.projection};
  }
  for (int attempt = 0;; ++attempt) {
    RepPtr e = random_module(alg, rng, 2);
    RepPtr p = random_projective(alg, rng, 2);
    RepMorphism phi = random_combination(hom_space(p, e), p, e, rng);
    SubQuotient img = image(phi);
    SubQuotient quot = cokernel(img.map);
    // Prefer sequences with both ends nonzero; give up after a few draws.
    if (attempt < 8 && (img.module->total_dim() == 0 || quot.module->total_dim() == 0)) continue;
    return ShortExact{img.map, quot.map};
  }
}

}  // namespace sing
