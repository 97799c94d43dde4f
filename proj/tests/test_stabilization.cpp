#include <random>

#include "doctest.h"
#include "sing/corpus.hpp"
#include "sing/error.hpp"
#include "sing/module_backend.hpp"
#include "sing/random_modules.hpp"

using namespace sing;

namespace {

const Field F5 = Field::prime(5);
const ModuleBackend backend;

using Functor = LoopedFunctor<RepPtr, RepMorphism, RepPtr, RepMorphism>;

RepMorphism random_map(const RepPtr& x, const RepPtr& y, std::mt19937_64& rng) {
  return random_combination(hom_space(x, y), x, y, rng);
}

// F(X) = (X, 0) with δ the canonical isomorphism (ΩX, 0) -> (X, -1).
Functor inclusion_functor(const ModuleStab& st) {
  return {[](const RepPtr& x) { return ModuleStabObject{x, 0}; },
          [&st](const RepMorphism& f) { return st.stabilize(f.source(), f.target(), f); },
          [&st](const RepPtr& x) { return st.canonical_iso_inverse(ModuleStabObject{x, -1}, 1); },
          [&st](const RepPtr& x) { return st.canonical_iso(ModuleStabObject{x, -1}, 1); }};
}

// F(X) = (ΩX, 0), F(f) = ι_0(Ωf).
Functor loop_functor(const ModuleStab& st) {
  return {[](const RepPtr& x) { return ModuleStabObject{syzygy(x, 1), 0}; },
          [&st](const RepMorphism& f) {
            RepMorphism g = syzygy_of_morphism(f);
            return st.stabilize(g.source(), g.target(), g);
          },
          [&st](const RepPtr& x) { return st.canonical_iso_inverse(ModuleStabObject{syzygy(x, 1), -1}, 1); },
          [&st](const RepPtr& x) { return st.canonical_iso(ModuleStabObject{syzygy(x, 1), -1}, 1); }};
}

struct Fixture {
  AlgebraPtr alg;
  std::vector<RepPtr> objects;
};

std::vector<Fixture> fixtures(std::mt19937_64& rng) {
  std::vector<Fixture> out;
  for (const auto& named : corpus::standard(F5)) {
    Fixture fx{named.algebra, {}};
    for (VertexId v = 0; v < named.algebra->quiver().vertex_count(); ++v)
      fx.objects.push_back(share(simple_rep(named.algebra, v)));
    for (int i = 0; i < 2; ++i) fx.objects.push_back(random_module(named.algebra, rng));
    out.push_back(std::move(fx));
  }
  return out;
}

}  // namespace

TEST_CASE("promotion does not change the class") {
  ModuleStab st(backend);
  std::mt19937_64 rng(11);
  for (const auto& fx : fixtures(rng))
    for (const auto& x : fx.objects)
      for (const auto& y : fx.objects) {
        auto f = st.make({x, 1}, {y, 0}, 2, random_map(syzygy(x, 1), syzygy(y, 2), rng));
        auto g = st.promote(f, 2);
        CHECK(g.level == 4);
        CHECK(st.equal_up_to(f, g, 0).equal);
      }
}

TEST_CASE("composition is associative and unital") {
  ModuleStab st(backend);
  std::mt19937_64 rng(12);
  for (const auto& fx : fixtures(rng)) {
    const auto& o = fx.objects;
    for (std::size_t i = 0; i + 2 < o.size(); ++i) {
      ModuleStabObject x{o[i], 0}, y{o[i + 1], 1}, z{o[i + 2], 0};
      auto f = st.make(x, y, 1, random_map(syzygy(o[i], 1), o[i + 1], rng));
      auto g = st.make(y, z, 2, random_map(syzygy(o[i + 1], 1), syzygy(o[i + 2], 2), rng));
      auto h = st.stabilize(o[i + 2], o[i], random_map(o[i + 2], o[i], rng));
      CHECK(st.equal_up_to(st.compose(h, st.compose(g, f)), st.compose(st.compose(h, g), f), 0).equal);
      CHECK(st.equal_up_to(st.compose(st.identity(y), f), f, 0).equal);
      CHECK(st.equal_up_to(st.compose(f, st.identity(x)), f, 0).equal);
    }
  }
}

TEST_CASE("shape errors") {
  ModuleStab st(backend);
  auto d = corpus::dual_numbers(F5);
  RepPtr s = share(simple_rep(d, 0));
  CHECK_THROWS_AS(st.make({s, 2}, {s, 0}, 1, RepMorphism::identity(s)), Error);
  try {
    st.make({s, 2}, {s, 0}, 1, RepMorphism::identity(s));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ShiftOutOfRange);
  }
  auto f = st.stabilize(s, s, RepMorphism::identity(s));
  auto g = st.identity({s, 1});
  try {
    st.compose(g, f);
    FAIL("expected mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SourceTargetMismatch);
  }
}

TEST_CASE("canonical isomorphisms and suspension") {
  ModuleStab st(backend);
  std::mt19937_64 rng(13);
  for (const auto& fx : fixtures(rng))
    for (const auto& x : fx.objects)
      for (std::int64_t s = 0; s <= 2; ++s) {
        ModuleStabObject ox{x, -1};
        auto iso = st.canonical_iso(ox, s);
        auto inv = st.canonical_iso_inverse(ox, s);
        CHECK(st.equal_up_to(st.compose(inv, iso), st.identity(ox), 0).equal);
        CHECK(st.equal_up_to(st.compose(iso, inv), st.identity(iso.target), 0).equal);
        auto up = st.suspend(iso, 3);
        CHECK(up.source.shift == 2);
        auto back = st.unsuspend(up, 3);
        CHECK(st.same(back.source, iso.source));
        CHECK(st.equal_up_to(back, iso, 0).equal);
      }
}

TEST_CASE("suspension respects composition") {
  ModuleStab st(backend);
  std::mt19937_64 rng(14);
  for (const auto& fx : fixtures(rng)) {
    const auto& o = fx.objects;
    for (std::size_t i = 0; i + 2 < o.size(); ++i) {
      auto f = st.stabilize(o[i], o[i + 1], random_map(o[i], o[i + 1], rng));
      auto g = st.stabilize(o[i + 1], o[i + 2], random_map(o[i + 1], o[i + 2], rng));
      for (std::int64_t k : {-2, 1, 3})
        CHECK(st.equal_up_to(st.suspend(st.compose(g, f), k), st.compose(st.suspend(g, k), st.suspend(f, k)), 0)
                  .equal);
    }
  }
}

TEST_CASE("stable equality needs a bounded number of loops") {
  ModuleStab st(backend);
  auto a3 = corpus::a3_zero_relation(F5);
  RepPtr s1 = share(simple_rep(a3, 0));
  // S_1 has finite projective dimension, so its identity dies after enough loops
  // while it is not stably zero at level 0.
  auto id = st.identity({s1, 0});
  auto z = st.make({s1, 0}, {s1, 0}, 0, RepMorphism::zero(s1, s1));
  EqualityVerdict v0 = st.equal_up_to(id, z, 0);
  CHECK_FALSE(v0.equal);
  EqualityVerdict v = st.equal_up_to(id, z, 4);
  CHECK(v.equal);
  CHECK(v.at >= 1);
  auto d = corpus::dual_numbers(F5);
  RepPtr s = share(simple_rep(d, 0));
  auto ids = st.identity({s, 0});
  auto zs = st.make({s, 0}, {s, 0}, 0, RepMorphism::zero(s, s));
  EqualityVerdict w = st.equal_up_to(ids, zs, 6);
  CHECK_FALSE(w.equal);
  CHECK(w.at == 6);
}

TEST_CASE("universal extension of the inclusion is the identity") {
  ModuleStab st(backend);
  Functor fun = inclusion_functor(st);
  std::mt19937_64 rng(15);
  for (const auto& fx : fixtures(rng)) {
    const auto& o = fx.objects;
    for (std::size_t i = 0; i + 1 < o.size(); ++i) {
      for (auto [n, m, p] : {std::tuple{0, 0, 0}, {1, 0, 2}, {-1, 1, 1}, {2, 2, 3}}) {
        auto phi = st.make({o[i], n}, {o[i + 1], m}, p, random_map(syzygy(o[i], p - n), syzygy(o[i + 1], p - m), rng));
        auto out = universal_apply(st, st, fun, phi);
        REQUIRE(st.same(out.source, phi.source));
        REQUIRE(st.same(out.target, phi.target));
        CHECK(st.equal_up_to(out, phi, 0).equal);
      }
    }
  }
}

TEST_CASE("universal extension of the loop functor") {
  ModuleStab st(backend);
  Functor fun = loop_functor(st);
  std::mt19937_64 rng(16);
  for (const auto& fx : fixtures(rng)) {
    const auto& o = fx.objects;
    for (std::size_t i = 0; i + 1 < o.size(); ++i)
      for (auto [n, m, p] : {std::tuple{0, 0, 0}, {1, 0, 2}, {0, 2, 2}}) {
        ModuleStabObject x{o[i], n}, y{o[i + 1], m};
        auto phi = st.make(x, y, p, random_map(syzygy(o[i], p - n), syzygy(o[i + 1], p - m), rng));
        auto out = universal_apply(st, st, fun, phi);
        auto expect = st.unsuspend(st.compose(st.canonical_iso(y, 1), st.compose(phi, st.canonical_iso_inverse(x, 1))), 1);
        REQUIRE(st.same(out.source, expect.source));
        REQUIRE(st.same(out.target, expect.target));
        CHECK(st.equal_up_to(out, expect, 0).equal);
      }
  }
}

TEST_CASE("universal extension is functorial") {
  ModuleStab st(backend);
  Functor fun = loop_functor(st);
  std::mt19937_64 rng(17);
  for (const auto& fx : fixtures(rng)) {
    const auto& o = fx.objects;
    for (std::size_t i = 0; i + 2 < o.size(); ++i) {
      ModuleStabObject x{o[i], 0}, y{o[i + 1], 1}, z{o[i + 2], 0};
      auto f = st.make(x, y, 1, random_map(syzygy(o[i], 1), o[i + 1], rng));
      auto g = st.make(y, z, 1, random_map(o[i + 1], syzygy(o[i + 2], 1), rng));
      auto lhs = universal_apply(st, st, fun, st.compose(g, f));
      auto rhs = st.compose(universal_apply(st, st, fun, g), universal_apply(st, st, fun, f));
      CHECK(st.equal_up_to(lhs, rhs, 0).equal);
      auto id = universal_apply(st, st, fun, st.identity(y));
      CHECK(st.equal_up_to(id, st.identity(id.source), 0).equal);
    }
  }
}

TEST_CASE("hom reports are invariant under a common shift") {
  std::mt19937_64 rng(18);
  for (const auto& fx : fixtures(rng)) {
    const auto& o = fx.objects;
    for (std::size_t i = 0; i + 1 < o.size(); ++i) {
      ColimitReport r = stab_hom_report({o[i], 0}, {o[i + 1], 1}, 6, 3);
      ColimitReport s = stab_hom_report({o[i], 2}, {o[i + 1], 3}, 8, 3);
      CHECK(r.dims == s.dims);
      CHECK(r.rank_table == s.rank_table);
      CHECK(r.verdict.kind == s.verdict.kind);
      CHECK(r.verdict.value == s.verdict.value);
      for (std::size_t k = 0; k < r.dims.size(); ++k) {
        const std::int64_t p = r.p0 + static_cast<std::int64_t>(k);
        if (p > 3) break;
        StableHomSpace sp(syzygy(o[i], static_cast<std::size_t>(p)), syzygy(o[i + 1], static_cast<std::size_t>(p - 1)));
        CHECK(r.dims[k] == sp.dim());
      }
    }
  }
}

TEST_CASE("certified verdicts for periodic and vanishing systems") {
  auto d = corpus::dual_numbers(F5);
  RepPtr s = share(simple_rep(d, 0));
  ColimitReport r = stab_hom_report({s, 0}, {s, 0}, 5, 2);
  CHECK(r.verdict.kind == VerdictKind::CertifiedStable);
  CHECK(r.verdict.value == 1);
  auto a3 = corpus::a3_zero_relation(F5);
  ColimitReport z = stab_hom_report({share(simple_rep(a3, 0)), 0}, {share(simple_rep(a3, 0)), 0}, 5, 2);
  CHECK(z.verdict.kind == VerdictKind::CertifiedZero);
  CHECK(z.verdict.value == 0);
}

TEST_CASE("equivalence evidence for simple functors") {
  std::mt19937_64 rng(19);
  auto c3 = corpus::cyclic_radical_square_zero(F5, 3);
  std::vector<RepPtr> simples;
  for (VertexId v = 0; v < 3; ++v) simples.push_back(share(simple_rep(c3, v)));
  std::vector<RepPtr> targets = simples;
  for (int i = 0; i < 4; ++i) targets.push_back(random_module(c3, rng));

  EquivalenceEvidence id = pre_triangle_equiv_check(identity_functor(), simples, targets, 3);
  CHECK(id.full.kind == EvidenceKind::Witnessed);
  CHECK(id.faithful.kind == EvidenceKind::Witnessed);
  CHECK(id.dense.kind == EvidenceKind::Witnessed);
  CHECK(id.dense.depth == 0);

  EquivalenceEvidence inc = pre_triangle_equiv_check(semisimple_plus_projective_inclusion(c3), simples, targets, 3);
  CHECK(inc.full.kind == EvidenceKind::Witnessed);
  CHECK(inc.faithful.kind == EvidenceKind::Witnessed);
  CHECK(inc.dense.kind == EvidenceKind::Witnessed);
  CHECK(inc.dense.depth <= 1);

  EquivalenceEvidence zero = pre_triangle_equiv_check(zero_functor(c3), simples, targets, 3);
  CHECK(zero.full.kind == EvidenceKind::Witnessed);
  CHECK(zero.faithful.kind == EvidenceKind::NotWitnessedUpTo);
  CHECK(zero.dense.kind == EvidenceKind::NotWitnessedUpTo);

  // Over an algebra of finite global dimension everything dies eventually.
  auto a3 = corpus::a3_zero_relation(F5);
  std::vector<RepPtr> s3;
  for (VertexId v = 0; v < 3; ++v) s3.push_back(share(simple_rep(a3, v)));
  EquivalenceEvidence z3 = pre_triangle_equiv_check(zero_functor(a3), s3, s3, 4);
  CHECK(z3.faithful.kind == EvidenceKind::Witnessed);
  CHECK(z3.dense.kind == EvidenceKind::Witnessed);
}

TEST_CASE("semisimple plus projective recognition") {
  auto tl = corpus::two_loops_radical_square_zero(F5);
  std::mt19937_64 rng(20);
  for (int i = 0; i < 5; ++i) {
    RepPtr m = random_module(tl, rng);
    CHECK(is_semisimple_plus_projective(syzygy(m, 1)));
  }
  auto d = corpus::dual_numbers(F5);
  CHECK(is_semisimple_plus_projective(share(direct_sum_module({share(simple_rep(d, 0)), share(projective_rep(d, 0))}))));
  auto a3 = corpus::a3_zero_relation(F5);
  CHECK(is_semisimple_plus_projective(share(regular_rep(a3))));
  auto sq = corpus::commutative_square(F5);
  RepPtr p0 = share(projective_rep(sq, 0));
  RepPtr rad = submodule(p0, radical_basis(*p0)).module;
  CHECK_FALSE(is_semisimple_plus_projective(rad));
}
