#include <random>

#include "doctest.h"
#include "sing/corpus.hpp"
#include "sing/error.hpp"
#include "sing/homological.hpp"
#include "sing/linalg.hpp"
#include "sing/random_modules.hpp"
#include "sing/representation.hpp"

using namespace sing;

namespace {

const Field F7 = Field::prime(7);

Matrix m(const std::vector<std::vector<std::int64_t>>& rows) { return Matrix::from_rows(F7, rows); }

}  // namespace

TEST_CASE("projective modules") {
  auto c3 = corpus::cyclic_radical_square_zero(F7, 3);
  CHECK(projective_rep(c3, 0).dims() == std::vector<std::size_t>{1, 1, 0});

  auto d = corpus::dual_numbers(F7);
  Representation p = projective_rep(d, 0);
  CHECK(p.dims() == std::vector<std::size_t>{2});
  CHECK(p.arrow(0) == m({{0, 0}, {1, 0}}));

  auto a2 = corpus::a2(F7);
  CHECK(projective_rep(a2, 1).dims() == std::vector<std::size_t>{0, 1});
  CHECK(projective_rep(a2, 0).dims() == std::vector<std::size_t>{1, 1});
}

TEST_CASE("module validation") {
  auto d = corpus::dual_numbers(F7);
  CHECK_THROWS_AS(Representation(d, {2}, {m({{0, 0}, {1, 1}})}), Error);  // x^2 != 0
  try {
    Representation bad(d, {2}, {m({{0, 0, 0}, {1, 0, 0}})});
    FAIL("expected ShapeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ShapeMismatch);
  }
  Representation ok(d, {2}, {m({{0, 0}, {3, 0}})});
  CHECK(ok.total_dim() == 2);
}

TEST_CASE("hom space examples") {
  auto a2 = corpus::a2(F7);
  auto s1 = share(simple_rep(a2, 0)), s2 = share(simple_rep(a2, 1));
  CHECK(hom_space(s1, s1).size() == 1);
  CHECK(hom_space(s1, s2).size() == 0);
  auto c3 = corpus::cyclic_radical_square_zero(F7, 3);
  auto p1 = share(projective_rep(c3, 0));
  CHECK(hom_space(p1, p1).size() == 1);
  try {
    (void)hom_space(s1, share(simple_rep(c3, 0)));
    FAIL("expected AlgebraMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AlgebraMismatch);
  }
}

TEST_CASE("hom space properties on random modules") {
  std::mt19937_64 rng(3);
  for (const auto& [name, alg] : corpus::standard(F7)) {
    INFO(name);
    for (int it = 0; it < 4; ++it) {
      RepPtr x = random_module(alg, rng), y = random_module(alg, rng);
      for (const auto& f : hom_space(x, y)) CHECK_NOTHROW(RepMorphism(f.source(), f.target(), f.maps()));
      for (VertexId v = 0; v < alg->quiver().vertex_count(); ++v)
        CHECK(hom_space(share(projective_rep(alg, v)), x).size() == x->dim(v));
    }
  }
}

TEST_CASE("left ideals") {
  auto g = corpus::two_cycle_gentle(F7);
  Representation ba = left_ideal_rep(g, g->quiver().arrow_id("a"));
  CHECK(ba.dims() == std::vector<std::size_t>{0, 1});
  CHECK(is_isomorphic(share(ba), share(simple_rep(g, 1))).kind == IsoKind::Yes);

  auto d = corpus::dual_numbers(F7);
  CHECK(left_ideal_rep(d, 0).dims() == std::vector<std::size_t>{1});

  auto a3 = corpus::a3_zero_relation(F7);
  CHECK(left_ideal_rep(a3, a3->quiver().arrow_id("b")).dims() == std::vector<std::size_t>{0, 0, 1});

  auto sq = corpus::commutative_square(F7);
  try {
    (void)left_ideal_rep(sq, 0);
    FAIL("expected NotMonomial");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotMonomial);
  }
}

TEST_CASE("isomorphism examples") {
  auto d = corpus::dual_numbers(F7);
  auto s = share(simple_rep(d, 0));
  auto v = is_isomorphic(s, s);
  REQUIRE(v.kind == IsoKind::Yes);
  CHECK(v.witness->is_invertible());
  CHECK(is_isomorphic(s, share(projective_rep(d, 0))).kind == IsoKind::No);
  CHECK(is_isomorphic(syzygy(s), s).kind == IsoKind::Yes);
}

TEST_CASE("isomorphism is reflexive and symmetric with valid witnesses") {
  std::mt19937_64 rng(11);
  for (const auto& [name, alg] : corpus::standard(F7)) {
    INFO(name);
    for (int it = 0; it < 3; ++it) {
      RepPtr x = random_module(alg, rng);
      RepMorphism q = random_base_change(x, rng);
      RepPtr y = q.target();
      auto xy = is_isomorphic(x, y), yx = is_isomorphic(y, x);
      REQUIRE(xy.kind == IsoKind::Yes);
      REQUIRE(yx.kind == IsoKind::Yes);
      CHECK(compose(xy.witness->inverse(), *xy.witness) == RepMorphism::identity(x));
      CHECK(compose(*yx.witness, yx.witness->inverse()) == RepMorphism::identity(x));
      CHECK_NOTHROW(RepMorphism(x, y, xy.witness->maps()));
      RepPtr z = random_module(alg, rng);
      CHECK(is_isomorphic(x, z).kind == is_isomorphic(z, x).kind);
    }
  }
}

TEST_CASE("isomorphism over the rationals") {
  auto d = corpus::two_cycle_gentle(Field::rational());
  std::mt19937_64 rng(2);
  RepPtr x = share(regular_rep(d));
  RepMorphism q = random_base_change(x, rng);
  CHECK(is_isomorphic(x, q.target()).kind == IsoKind::Yes);
}

TEST_CASE("sub and quotient modules") {
  std::mt19937_64 rng(8);
  for (const auto& [name, alg] : corpus::standard(F7)) {
    INFO(name);
    for (int it = 0; it < 3; ++it) {
      ShortExact s = random_short_exact(alg, rng);
      CHECK_NOTHROW(require_exact(s.g, s.f));
      CHECK_NOTHROW(Representation(alg, s.f.target()->dims(), s.f.target()->arrows()));
      CHECK_NOTHROW(RepMorphism(s.f.source(), s.f.target(), s.f.maps()));
      CHECK_NOTHROW(RepMorphism(s.g.source(), s.g.target(), s.g.maps()));
    }
  }
}

TEST_CASE("radical layers") {
  auto d = corpus::dual_numbers(F7);
  CHECK(radical_layers(projective_rep(d, 0)) == std::vector<std::vector<std::size_t>>{{1}, {1}});
  CHECK(top_dims(projective_rep(d, 0)) == std::vector<std::size_t>{1});
  CHECK(radical_layers(Representation::zero(d)).empty());
}
