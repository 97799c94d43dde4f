#include <random>

#include "doctest.h"
#include "sing/corpus.hpp"
#include "sing/error.hpp"
#include "sing/rsz.hpp"
#include "sing/singularity.hpp"

using namespace sing;

namespace {

const Field F7 = Field::prime(7);

std::vector<std::uint64_t> unit(std::size_t n, std::size_t i) {
  std::vector<std::uint64_t> e(n, 0);
  e[i] = 1;
  return e;
}

bool has_sink(const Quiver& q) {
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    bool out = false;
    for (const auto& a : q.arrows()) out = out || a.source == v;
    if (!out) return true;
  }
  return false;
}

// v lies on a cycle: some path of positive length returns to v.
bool on_cycle(const Quiver& q, VertexId v) {
  std::vector<bool> seen(q.vertex_count(), false);
  std::vector<VertexId> stack{v};
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (const auto& a : q.arrows())
      if (a.source == u) {
        if (a.target == v) return true;
        if (!seen[a.target]) seen[a.target] = true, stack.push_back(a.target);
      }
  }
  return false;
}

// Naive integer matrix power applied to a vector.
std::vector<std::uint64_t> power_apply(const AdjacencyModel& m, std::vector<std::uint64_t> x, std::int64_t k) {
  for (std::int64_t s = 0; s < k; ++s) {
    std::vector<std::uint64_t> y(m.vertices, 0);
    for (std::size_t j = 0; j < m.vertices; ++j)
      for (std::size_t i = 0; i < m.vertices; ++i) y[j] += m.adjacency[j][i] * x[i];
    x = y;
  }
  return x;
}

}  // namespace

TEST_CASE("relation quivers") {
  Quiver d = relation_quiver(*corpus::dual_numbers(F7));
  REQUIRE(d.vertex_count() == 1);
  REQUIRE(d.arrow_count() == 1);
  CHECK(d.vertex_name(0) == "x");
  CHECK(d.arrow(0).name == "[xx]");
  CHECK(d.arrow(0).source == 0);
  CHECK(d.arrow(0).target == 0);

  Quiver g = relation_quiver(*corpus::two_cycle_gentle(F7));
  CHECK(g.vertex_count() == 2);
  CHECK(g.arrow_count() == 2);
  for (const auto& a : g.arrows()) CHECK(a.source != a.target);

  Quiver a3 = relation_quiver(*corpus::a3_zero_relation(F7));
  REQUIRE(a3.arrow_count() == 1);
  CHECK(a3.arrow(0).name == "[ba]");
  CHECK(a3.vertex_name(a3.arrow(0).source) == "a");
  CHECK(a3.vertex_name(a3.arrow(0).target) == "b");

  Quiver c3 = relation_quiver(*corpus::cyclic_radical_square_zero(F7, 3));
  CHECK(c3.arrow(0).name == "[a2.a1]");

  try {
    relation_quiver(*corpus::commutative_square(F7));
    FAIL("expected NotQuadraticMonomial");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotQuadraticMonomial);
  }
}

TEST_CASE("relation quiver counts") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 20; ++i) {
    AlgebraPtr b = random_gentle_algebra(F7, rng);
    Quiver r = relation_quiver(*b);
    CHECK(r.vertex_count() == b->quiver().arrow_count());
    CHECK(r.arrow_count() == b->relations().size());
  }
}

TEST_CASE("sink removal") {
  Quiver c3 = corpus::cyclic_radical_square_zero(F7, 3)->quiver();
  CHECK(remove_sinks(c3) == c3);
  Quiver line = Quiver::from_names({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
  CHECK(remove_sinks(line).vertex_count() == 0);
  Quiver tail = Quiver::from_names({"v", "w"}, {{"x", "v", "v"}, {"a", "v", "w"}});
  Quiver core = remove_sinks(tail);
  REQUIRE(core.vertex_count() == 1);
  CHECK(core.vertex_name(0) == "v");
  REQUIRE(core.arrow_count() == 1);
  CHECK(core.arrow(0).name == "x");
}

TEST_CASE("sink removal properties") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 40; ++i) {
    Quiver q = random_rsz_algebra(F7, rng)->quiver();
    Quiver r = remove_sinks(q);
    CHECK(remove_sinks(r) == r);
    CHECK_FALSE(has_sink(r));
    for (VertexId v = 0; v < q.vertex_count(); ++v)
      if (on_cycle(q, v)) CHECK(r.find_vertex(q.vertex_name(v)).has_value());
  }
}

TEST_CASE("adjacency model examples") {
  AdjacencyModel empty = AdjacencyModel::from_quiver(Quiver());
  ColimitReport e = model_hom_report(empty, {{}, 0}, {{}, 0}, 5);
  for (auto d : e.dims) CHECK(d == 0);
  CHECK(e.verdict.kind == VerdictKind::CertifiedZero);

  AdjacencyModel c3 = AdjacencyModel::from_quiver(corpus::cyclic_radical_square_zero(F7, 3)->quiver());
  ColimitReport r = model_hom_report(c3, {unit(3, 0), 0}, {unit(3, 0), 0}, 8);
  for (auto d : r.dims) CHECK(d == 1);
  CHECK(r.verdict.kind == VerdictKind::CertifiedStable);
  CHECK(r.verdict.value == 1);

  AdjacencyModel tl = AdjacencyModel::from_quiver(corpus::two_loops_radical_square_zero(F7)->quiver());
  ColimitReport g = model_hom_report(tl, {{1}, 0}, {{1}, 0}, 2);
  CHECK(g.dims == std::vector<std::uint64_t>{1, 4, 16});
  CHECK(g.verdict.kind == VerdictKind::GrowingLowerBound);

  CHECK_THROWS_AS(model_hom_report(c3, {unit(3, 0), 4}, {unit(3, 0), 0}, 3), Error);
}

TEST_CASE("model dims and ranks against explicit matrices") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 30; ++i) {
    AlgebraPtr a = random_rsz_algebra(F7, rng, 4, 5);
    AdjacencyModel m = AdjacencyModel::from_quiver(a->quiver());
    const std::size_t n = m.vertices;
    std::uniform_int_distribution<std::uint64_t> d(0, 1);
    std::vector<std::uint64_t> x(n), y(n);
    for (std::size_t v = 0; v < n; ++v) x[v] = d(rng), y[v] = d(rng);
    const std::int64_t sx = static_cast<std::int64_t>(rng() % 3), sy = static_cast<std::int64_t>(rng() % 3);
    ColimitReport r = model_hom_report(m, {x, sx}, {y, sy}, 4);
    std::vector<Matrix> maps;
    for (std::int64_t p = r.p0; p <= r.p_max; ++p) {
      auto xp = power_apply(m, x, p - sx), yp = power_apply(m, y, p - sy);
      std::uint64_t dot = 0;
      for (std::size_t v = 0; v < n; ++v) dot += xp[v] * yp[v];
      CHECK(r.dim_at(p) == dot);
      if (p < r.p_max) maps.push_back(model_structure_matrix(m, xp, yp, F7));
    }
    for (std::size_t s = 0; s < maps.size(); ++s) {
      Matrix acc = maps[s];
      for (std::size_t q = s + 1; q <= maps.size(); ++q) {
        CHECK(r.rank_table[s][q - s] == rank(acc));
        if (q < maps.size()) acc = maps[q] * acc;
      }
    }
  }
}

TEST_CASE("constant square model maps and eventual rank") {
  // A permutation part plus a sink: every vector supported on the cycle is fixed by T^3.
  Quiver q = Quiver::from_names({"1", "2", "3", "4"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "1"}, {"d", "1", "4"}});
  AdjacencyModel m = AdjacencyModel::from_quiver(q);
  std::vector<std::uint64_t> x{1, 0, 0, 0};
  ColimitReport r = model_hom_report(m, {x, 0}, {x, 0}, 9);
  CHECK(r.verdict.kind == VerdictKind::CertifiedStable);
  // The state returns after three steps, so the composite of the three step maps is square.
  std::vector<std::uint64_t> x1 = power_apply(m, x, 1), x2 = power_apply(m, x, 2);
  CHECK(power_apply(m, x, 3) == x);
  Matrix period = model_structure_matrix(m, x2, x2) * model_structure_matrix(m, x1, x1) * model_structure_matrix(m, x, x);
  REQUIRE(period.rows() == period.cols());
  CHECK(eventual_rank(period) == r.verdict.value);
}

TEST_CASE("cross-check on radical-square-zero algebras") {
  std::vector<AlgebraPtr> algs{corpus::cyclic_radical_square_zero(F7, 2), corpus::cyclic_radical_square_zero(F7, 3),
                               corpus::two_loops_radical_square_zero(F7), corpus::a2(F7)};
  std::mt19937_64 rng(24);
  for (int i = 0; i < 6; ++i) algs.push_back(random_rsz_algebra(F7, rng));
  for (const auto& a : algs) {
    RszReport r = crosscheck_rsz(a, 6, 2);
    CHECK(r.all_match);
    for (const auto& e : r.entries)
      if (!e.match) {
        std::string dims;
        for (auto v : e.engine_dims) dims += std::to_string(v) + " ";
        dims += "| ";
        for (auto v : e.model_dims) dims += std::to_string(v) + " ";
        FAIL_CHECK("mismatch " << e.source << " " << e.target << " " << e.shift << ": " << dims);
      }
  }
  RszReport tl = crosscheck_rsz(corpus::two_loops_radical_square_zero(F7), 3, 0);
  REQUIRE(tl.entries.size() == 1);
  CHECK(tl.entries[0].engine_dims == std::vector<std::uint64_t>{1, 4, 16, 64});
  RszReport a2 = crosscheck_rsz(corpus::a2(F7), 4, 0);
  for (const auto& e : a2.entries) {
    CHECK(e.engine_verdict.kind == VerdictKind::CertifiedZero);
    CHECK(e.leavitt_verdict.kind == VerdictKind::CertifiedZero);
  }
  try {
    crosscheck_rsz(corpus::commutative_square(F7), 4);
    FAIL("expected NotRadicalSquareZero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotRadicalSquareZero);
  }
}

TEST_CASE("corrupted adjacency data is detected") {
  auto c3 = corpus::cyclic_radical_square_zero(F7, 3);
  AdjacencyModel bad = AdjacencyModel::from_quiver(c3->quiver());
  bad.adjacency[0][0] = 1;
  CHECK_FALSE(crosscheck_rsz(c3, 4, 1, 3, bad).all_match);
}

TEST_CASE("stable windows are isomorphisms for radical square zero") {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 8; ++i) {
    AlgebraPtr a = random_rsz_algebra(F7, rng);
    const std::size_t n = a->quiver().vertex_count();
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = 0; v < n; ++v) {
        ColimitReport r = sg_hom_dim({share(simple_rep(a, u)), share(simple_rep(a, v)), 0, 8, 3});
        if (r.verdict.kind != VerdictKind::CertifiedStable) continue;
        for (std::size_t k = n; k < r.rank_table.size(); ++k)
          for (std::size_t j = 0; j < r.rank_table[k].size(); ++j) {
            CHECK(r.rank_table[k][j] == r.dims[k]);
            CHECK(r.dims[k + j] == r.dims[k]);
          }
      }
  }
}

TEST_CASE("monomial singular equivalence") {
  std::vector<AlgebraPtr> algs{corpus::dual_numbers(F7), corpus::two_cycle_gentle(F7), corpus::a3_zero_relation(F7)};
  std::mt19937_64 rng(26);
  for (int i = 0; i < 4; ++i) algs.push_back(random_gentle_algebra(F7, rng));
  for (const auto& b : algs) {
    MonomialReport r = monomial_equiv_check(b, 6, 2);
    CHECK(r.all_match);
    for (const auto& e : r.entries)
      if (!e.match) FAIL_CHECK("mismatch " << e.source << " " << e.target << " " << e.shift);
  }
  MonomialReport d = monomial_equiv_check(corpus::dual_numbers(F7), 5, 2);
  for (const auto& e : d.entries)
    for (auto v : e.b_dims) CHECK(v == 1);
  MonomialReport a3 = monomial_equiv_check(corpus::a3_zero_relation(F7), 5, 2);
  for (const auto& e : a3.entries) {
    CHECK(e.b_verdict.kind == VerdictKind::CertifiedZero);
    CHECK(e.c_verdict.kind == VerdictKind::CertifiedZero);
  }
  CHECK_THROWS_AS(monomial_equiv_check(corpus::commutative_square(F7), 4), Error);
}
