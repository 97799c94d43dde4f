#include "sing/rsz.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>

#include "sing/error.hpp"
#include "sing/representation.hpp"
#include "sing/singularity.hpp"

namespace sing {

Quiver relation_quiver(const BoundAlgebra& b) {
  if (!b.is_quadratic_monomial()) throw Error(ErrorCode::NotQuadraticMonomial, "relation quiver needs quadratic monomial relations");
  const Quiver& q = b.quiver();
  bool short_names = true;
  for (const auto& a : q.arrows()) short_names = short_names && a.name.size() == 1;
  std::vector<std::string> vertices;
  for (const auto& a : q.arrows()) vertices.push_back(a.name);
  std::vector<Arrow> arrows;
  for (const auto& rel : b.relations()) {
    const ArrowId alpha = rel.terms.front().arrows[0], beta = rel.terms.front().arrows[1];
    const std::string& an = q.arrow(alpha).name;
    const std::string& bn = q.arrow(beta).name;
    arrows.push_back({"[" + bn + (short_names ? "" : ".") + an + "]", alpha, beta});
  }
  return Quiver(std::move(vertices), std::move(arrows));
}

namespace {

// Vertices surviving iterated sink removal, given out-arrow targets.
std::vector<bool> core_vertices(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::vector<bool> alive(n, true);
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<bool> has_out(n, false);
    for (auto [s, t] : edges)
      if (alive[s] && alive[t]) has_out[s] = true;
    for (std::size_t v = 0; v < n; ++v)
      if (alive[v] && !has_out[v]) alive[v] = false, changed = true;
  }
  return alive;
}

std::vector<std::pair<VertexId, VertexId>> model_edges(const AdjacencyModel& m) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (std::size_t j = 0; j < m.vertices; ++j)
    for (std::size_t i = 0; i < m.vertices; ++i)
      if (m.adjacency[j][i] > 0) e.emplace_back(i, j);
  return e;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  if (r >> 63) throw Error(ErrorCode::Overflow, "model dimension exceeds 2^63");
  return static_cast<std::uint64_t>(r);
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a + b < a || a + b >= (std::uint64_t{1} << 63)) throw Error(ErrorCode::Overflow, "model dimension exceeds 2^63");
  return a + b;
}

AdjacencyModel restrict_model(const AdjacencyModel& m, const std::vector<bool>& keep, std::vector<std::size_t>& index) {
  index.assign(m.vertices, SIZE_MAX);
  AdjacencyModel r;
  for (std::size_t v = 0; v < m.vertices; ++v)
    if (keep[v]) index[v] = r.vertices++;
  r.adjacency.assign(r.vertices, std::vector<std::uint64_t>(r.vertices, 0));
  for (std::size_t j = 0; j < m.vertices; ++j)
    for (std::size_t i = 0; i < m.vertices; ++i)
      if (keep[i] && keep[j]) r.adjacency[index[j]][index[i]] = m.adjacency[j][i];
  return r;
}

// Some cycle of arrows composes without hitting a monomial relation.
bool has_unbounded_path(const std::vector<Arrow>& arrows, const std::vector<Relation>& relations) {
  const std::size_t n = arrows.size();
  std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
  for (ArrowId a = 0; a < n; ++a)
    for (ArrowId b = 0; b < n; ++b) next[a][b] = arrows[a].target == arrows[b].source;
  for (const auto& r : relations) next[r.terms.front().arrows[0]][r.terms.front().arrows[1]] = false;
  std::vector<int> state(n, 0);
  std::function<bool(ArrowId)> visit = [&](ArrowId a) {
    state[a] = 1;
    for (ArrowId b = 0; b < n; ++b)
      if (next[a][b] && (state[b] == 1 || (state[b] == 0 && visit(b)))) return true;
    state[a] = 2;
    return false;
  };
  for (ArrowId a = 0; a < n; ++a)
    if (state[a] == 0 && visit(a)) return true;
  return false;
}

}  // namespace

Quiver remove_sinks(const Quiver& q) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& a : q.arrows()) edges.emplace_back(a.source, a.target);
  std::vector<bool> alive = core_vertices(q.vertex_count(), edges);
  std::vector<VertexId> index(q.vertex_count(), 0);
  std::vector<std::string> vertices;
  for (VertexId v = 0; v < q.vertex_count(); ++v)
    if (alive[v]) {
      index[v] = vertices.size();
      vertices.push_back(q.vertex_name(v));
    }
  std::vector<Arrow> arrows;
  for (const auto& a : q.arrows())
    if (alive[a.source] && alive[a.target]) arrows.push_back({a.name, index[a.source], index[a.target]});
  return Quiver(std::move(vertices), std::move(arrows));
}

AdjacencyModel AdjacencyModel::from_quiver(const Quiver& q) {
  AdjacencyModel m;
  m.vertices = q.vertex_count();
  m.adjacency.assign(m.vertices, std::vector<std::uint64_t>(m.vertices, 0));
  for (const auto& a : q.arrows()) ++m.adjacency[a.target][a.source];
  return m;
}

std::vector<std::uint64_t> AdjacencyModel::apply(const std::vector<std::uint64_t>& x) const {
  if (x.size() != vertices) throw Error(ErrorCode::ShapeMismatch, "dimension vector has the wrong length");
  std::vector<std::uint64_t> y(vertices, 0);
  for (std::size_t j = 0; j < vertices; ++j)
    for (std::size_t i = 0; i < vertices; ++i)
      if (adjacency[j][i] != 0) y[j] = checked_add(y[j], checked_mul(adjacency[j][i], x[i]));
  return y;
}

std::vector<bool> AdjacencyModel::has_path(std::size_t k) const {
  std::vector<bool> h(vertices, true);
  for (std::size_t step = 0; step < k; ++step) {
    std::vector<bool> next(vertices, false);
    for (std::size_t j = 0; j < vertices; ++j)
      if (h[j])
        for (std::size_t i = 0; i < vertices; ++i)
          if (adjacency[j][i] != 0) next[i] = true;
    if (next == h) break;  // the sequence is constant from here on
    h = std::move(next);
  }
  return h;
}

ColimitReport model_hom_report(const AdjacencyModel& m, const GradedTuple& x, const GradedTuple& y,
                               std::int64_t p_max, std::size_t window) {
  if (x.dims.size() != m.vertices || y.dims.size() != m.vertices)
    throw Error(ErrorCode::ShapeMismatch, "graded tuple does not match the model");
  const std::int64_t p0 = std::max(x.shift, y.shift);
  if (p_max < p0) throw Error(ErrorCode::ShiftOutOfRange, "p_max below max(n, m)");

  using State = std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>;
  auto states = std::make_shared<std::vector<State>>();
  State s{x.dims, y.dims};
  for (std::int64_t k = x.shift; k < p0; ++k) s.first = m.apply(s.first);
  for (std::int64_t k = y.shift; k < p0; ++k) s.second = m.apply(s.second);

  ColimitSource src;
  src.p0 = p0;
  src.p_max = p_max;
  src.window = window;
  // Iterate until p_max and, beyond it, until the state repeats or overflows.
  std::map<State, std::int64_t> seen;
  const std::int64_t horizon = p_max + 4 * static_cast<std::int64_t>(m.vertices) + 8;
  for (std::int64_t p = p0;; ++p) {
    auto zero = [](const std::vector<std::uint64_t>& v) { return std::all_of(v.begin(), v.end(), [](auto e) { return e == 0; }); };
    if (!src.zero_from && (zero(s.first) || zero(s.second))) {
      src.zero_from = p;
      src.zero_reason = "T^k annihilates a dimension vector";
    }
    if (auto it = seen.find(s); it != seen.end() && !src.period) {
      src.period = PeriodCertificate{it->second, p - it->second};
      src.period_reason = "dimension vectors repeat";
    }
    if (p > p_max && (src.period || src.zero_from || p > horizon)) break;
    seen.emplace(s, p);
    states->push_back(s);
    try {
      State next{m.apply(s.first), m.apply(s.second)};
      s = std::move(next);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Overflow || p < p_max) throw;
      break;
    }
  }

  const auto period = src.period;
  auto state_at = [states, p0, period](std::int64_t p) -> const State& {
    std::int64_t k = p - p0;
    if (period && p >= period->start + period->length)
      k = period->start - p0 + (p - period->start) % period->length;
    if (k < 0 || k >= static_cast<std::int64_t>(states->size()))
      throw Error(ErrorCode::ShiftOutOfRange, "model index outside the computed range");
    return (*states)[static_cast<std::size_t>(k)];
  };
  auto paths = std::make_shared<std::map<std::int64_t, std::vector<bool>>>();
  src.dim = [state_at](std::int64_t p) {
    const State& st = state_at(p);
    std::uint64_t d = 0;
    for (std::size_t v = 0; v < st.first.size(); ++v) d = checked_add(d, checked_mul(st.first[v], st.second[v]));
    return d;
  };
  src.rank = [state_at, paths, &m](std::int64_t p, std::int64_t q) {
    const State& st = state_at(p);
    auto it = paths->find(q - p);
    if (it == paths->end()) it = paths->emplace(q - p, m.has_path(static_cast<std::size_t>(q - p))).first;
    std::uint64_t r = 0;
    for (std::size_t v = 0; v < st.first.size(); ++v)
      if (it->second[v]) r = checked_add(r, checked_mul(st.first[v], st.second[v]));
    return r;
  };
  return build_colimit_report(src);
}

Matrix model_structure_matrix(const AdjacencyModel& m, const std::vector<std::uint64_t>& x,
                              const std::vector<std::uint64_t>& y, const Field& f) {
  const std::vector<std::uint64_t> tx = m.apply(x), ty = m.apply(y);
  std::vector<std::size_t> src_off(m.vertices + 1, 0), tgt_off(m.vertices + 1, 0);
  for (std::size_t v = 0; v < m.vertices; ++v) {
    src_off[v + 1] = src_off[v] + x[v] * y[v];
    tgt_off[v + 1] = tgt_off[v] + tx[v] * ty[v];
  }
  Matrix out(f, tgt_off.back(), src_off.back());
  for (std::size_t j = 0; j < m.vertices; ++j) {
    std::size_t ox = 0, oy = 0;  // block offsets of the current arrow inside (r ⊗ X)_j, (r ⊗ Y)_j
    for (std::size_t i = 0; i < m.vertices; ++i)
      for (std::uint64_t k = 0; k < m.adjacency[j][i]; ++k) {
        for (std::size_t r = 0; r < y[i]; ++r)
          for (std::size_t c = 0; c < x[i]; ++c)
            out.set(tgt_off[j] + (oy + r) * tx[j] + ox + c, src_off[i] + r * x[i] + c, Scalar::one(f));
        ox += x[i];
        oy += y[i];
      }
  }
  return out;
}

RszReport crosscheck_rsz(const AlgebraPtr& a, std::int64_t p_max, std::int64_t shift_bound, std::size_t window,
                         const std::optional<AdjacencyModel>& model) {
  if (!a->is_radical_square_zero()) throw Error(ErrorCode::NotRadicalSquareZero, "relations must be all paths of length 2");
  const std::size_t n = a->quiver().vertex_count();
  const AdjacencyModel full = model ? *model : AdjacencyModel::from_quiver(a->quiver());
  if (full.vertices != n) throw Error(ErrorCode::ShapeMismatch, "adjacency model has the wrong number of vertices");
  std::vector<std::size_t> index;
  const AdjacencyModel leavitt = restrict_model(full, core_vertices(n, model_edges(full)), index);
  auto unit = [](std::size_t size, std::size_t at) {
    std::vector<std::uint64_t> e(size, 0);
    if (at < size) e[at] = 1;
    return e;
  };

  RszReport out;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = 0; j < n; ++j)
      for (std::int64_t t = -shift_bound; t <= shift_bound; ++t) {
        const std::int64_t p0 = std::max<std::int64_t>(0, t);
        if (p_max < p0) continue;
        ColimitReport engine = sg_hom_dim({share(simple_rep(a, i)), share(simple_rep(a, j)), t, p_max, window});
        ColimitReport wide = model_hom_report(full, {unit(n, i), 0}, {unit(n, j), t}, p_max + 1, window);
        std::vector<std::uint64_t> reduced;
        for (std::size_t k = 0; k < engine.dims.size(); ++k) reduced.push_back(wide.rank_table[k][1]);
        ColimitReport core =
            model_hom_report(leavitt, {unit(leavitt.vertices, index[i]), 0}, {unit(leavitt.vertices, index[j]), t}, p_max, window);
        const bool match = engine.dims == reduced && engine.verdict.kind == core.verdict.kind &&
                           engine.verdict.value == core.verdict.value;
        out.entries.push_back({i, j, t, engine.dims, reduced, engine.verdict, core.verdict, match});
        out.all_match = out.all_match && match;
      }
  return out;
}

MonomialReport monomial_equiv_check(const AlgebraPtr& b, std::int64_t p_max, std::int64_t shift_bound, std::size_t window) {
  if (!b->is_quadratic_monomial()) throw Error(ErrorCode::NotQuadraticMonomial, "monomial check needs quadratic monomial relations");
  Quiver qr = relation_quiver(*b);
  MonomialReport out;
  out.relation_algebra = BoundAlgebra::build(b->field(), qr, radical_square_relations(b->field(), qr));
  const std::size_t na = b->quiver().arrow_count();
  std::vector<RepPtr> ideals, simples;
  for (ArrowId x = 0; x < na; ++x) {
    ideals.push_back(share(left_ideal_rep(b, x)));
    simples.push_back(share(simple_rep(out.relation_algebra, x)));
  }
  for (ArrowId x = 0; x < na; ++x)
    for (ArrowId y = 0; y < na; ++y)
      for (std::int64_t t = -shift_bound; t <= shift_bound; ++t) {
        if (p_max < std::max<std::int64_t>(0, t)) continue;
        ColimitReport rb = sg_hom_dim({ideals[x], ideals[y], t, p_max, window});
        ColimitReport rc = sg_hom_dim({simples[x], simples[y], t, p_max, window});
        const bool match = rb.dims == rc.dims && rb.verdict.kind == rc.verdict.kind && rb.verdict.value == rc.verdict.value;
        out.entries.push_back({x, y, t, rb.dims, rc.dims, rb.verdict, rc.verdict, match});
        out.all_match = out.all_match && match;
      }
  return out;
}

AlgebraPtr random_rsz_algebra(const Field& f, std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_arrows) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
  const std::size_t m = std::uniform_int_distribution<std::size_t>(1, max_arrows)(rng);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::string> vertices;
  for (std::size_t v = 0; v < n; ++v) vertices.push_back(std::to_string(v + 1));
  std::vector<Arrow> arrows;
  for (std::size_t k = 0; k < m; ++k) {
    const VertexId s = pick(rng), t = pick(rng);
    arrows.push_back({"a" + std::to_string(k + 1), s, t});
  }
  Quiver q(std::move(vertices), std::move(arrows));
  return BoundAlgebra::build(f, q, radical_square_relations(f, q));
}

AlgebraPtr random_gentle_algebra(const Field& f, std::mt19937_64& rng, std::size_t max_vertices) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<std::size_t> out_deg(n, 0), in_deg(n, 0);
    std::vector<Arrow> arrows;
    const std::size_t tries = std::uniform_int_distribution<std::size_t>(1, 2 * n)(rng);
    for (std::size_t k = 0; k < tries; ++k) {
      const VertexId s = pick(rng), t = pick(rng);
      if (out_deg[s] == 2 || in_deg[t] == 2) continue;
      ++out_deg[s];
      ++in_deg[t];
      arrows.push_back({"a" + std::to_string(arrows.size() + 1), s, t});
    }
    if (arrows.empty()) continue;
    // At each vertex split incoming × outgoing pairs into two partial
    // matchings: zero relations and nonzero compositions.
    std::vector<Relation> relations;
    for (VertexId v = 0; v < n; ++v) {
      std::vector<ArrowId> in, out;
      for (ArrowId a = 0; a < arrows.size(); ++a) {
        if (arrows[a].target == v) in.push_back(a);
        if (arrows[a].source == v) out.push_back(a);
      }
      if (in.empty() || out.empty()) continue;
      const bool flip = std::bernoulli_distribution(0.5)(rng);
      for (std::size_t x = 0; x < in.size(); ++x)
        for (std::size_t y = 0; y < out.size(); ++y) {
          const bool rel = (in.size() == 1 && out.size() == 1) ? flip : (((x + y) % 2 == 0) != flip);
          if (rel) relations.push_back(Relation{{PathTerm{Scalar::one(f), {in[x], out[y]}}}});
        }
    }
    if (has_unbounded_path(arrows, relations)) continue;
    std::vector<std::string> vertices;
    for (std::size_t v = 0; v < n; ++v) vertices.push_back(std::to_string(v + 1));
    try {
      return BoundAlgebra::build(f, Quiver(std::move(vertices), std::move(arrows)), std::move(relations));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InfiniteDimensional) throw;
    }
  }
  throw Error(ErrorCode::Internal, "no finite-dimensional gentle algebra found");
}

}  // namespace sing
