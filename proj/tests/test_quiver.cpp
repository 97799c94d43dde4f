#include <set>

#include "doctest.h"
#include "sing/algebra.hpp"
#include "sing/error.hpp"

using namespace sing;

namespace {

const Field F7 = Field::prime(7);

// Paths that contain no relation as a consecutive subpath, by direct enumeration.
std::set<Path> avoiding_paths(const Quiver& q, const std::vector<std::vector<ArrowId>>& rels, std::size_t max_len) {
  std::set<Path> out;
  std::vector<Path> frontier;
  for (VertexId v = 0; v < q.vertex_count(); ++v) frontier.push_back(Path{v, {}});
  for (std::size_t len = 0; len <= max_len && !frontier.empty(); ++len) {
    std::vector<Path> next;
    for (const Path& p : frontier) {
      bool bad = false;
      for (const auto& r : rels)
        for (std::size_t s = 0; s + r.size() <= p.arrows.size() && !bad; ++s)
          bad = std::equal(r.begin(), r.end(), p.arrows.begin() + static_cast<long>(s));
      if (bad) continue;
      out.insert(p);
      for (ArrowId a : q.arrows_out(p.target(q))) next.push_back(p.then(a));
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("quiver validation") {
  CHECK_THROWS_AS(Quiver::from_names({"1", "1"}, {}), Error);
  CHECK_THROWS_AS(Quiver::from_names({"1"}, {{"a", "1", "2"}}), Error);
  CHECK_THROWS_AS(Quiver::from_names({"1", "2"}, {{"a", "1", "2"}, {"a", "2", "1"}}), Error);
  Quiver q = Quiver::from_names({"1", "2"}, {{"a", "1", "2"}});
  CHECK(q.is_sink(1));
  CHECK_FALSE(q.is_sink(0));
  CHECK(Path{0, {0}}.describe(q) == "a");
}

TEST_CASE("dual numbers") {
  Quiver q = Quiver::from_names({"v"}, {{"x", "v", "v"}});
  auto alg = BoundAlgebra::build(F7, q, {monomial_relation(F7, q, {"x", "x"})});
  REQUIRE(alg->dimension() == 2);
  CHECK(alg->basis()[0] == Path{0, {}});
  CHECK(alg->basis()[1] == Path{0, {0}});
  CHECK(alg->nilpotency_degree() == 2);
  CHECK(alg->is_quadratic_monomial());
  CHECK(alg->is_radical_square_zero());
}

TEST_CASE("A2 without relations") {
  Quiver q = Quiver::from_names({"1", "2"}, {{"a", "1", "2"}});
  auto alg = BoundAlgebra::build(F7, q, {});
  CHECK(alg->dimension() == 3);
  CHECK(alg->nilpotency_degree() == 2);
  CHECK(alg->basis_between(0, 1).size() == 1);
}

TEST_CASE("free loop is infinite dimensional") {
  Quiver q = Quiver::from_names({"v"}, {{"x", "v", "v"}});
  try {
    (void)BoundAlgebra::build(F7, q, {});
    FAIL("expected InfiniteDimensional");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InfiniteDimensional);
  }
}

TEST_CASE("relation validation") {
  Quiver q = Quiver::from_names({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "1", "3"}});
  CHECK_THROWS_AS(BoundAlgebra::build(F7, q, {monomial_relation(F7, q, {"a"})}), Error);
  try {
    (void)BoundAlgebra::build(F7, q, {monomial_relation(F7, q, {"b", "a"})});
    FAIL("expected RelationNotParallel");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RelationNotParallel);
  }
}

TEST_CASE("commutativity relation") {
  // Square 1 -a-> 2 -b-> 4, 1 -c-> 3 -d-> 4 with ba = dc.
  Quiver q = Quiver::from_names({"1", "2", "3", "4"},
                                {{"a", "1", "2"}, {"b", "2", "4"}, {"c", "1", "3"}, {"d", "3", "4"}});
  Relation r{{PathTerm{Scalar::one(F7), {q.arrow_id("a"), q.arrow_id("b")}},
              PathTerm{Scalar(F7, std::int64_t{-1}), {q.arrow_id("c"), q.arrow_id("d")}}}};
  auto alg = BoundAlgebra::build(F7, q, {r});
  CHECK(alg->dimension() == 4 + 4 + 1);
  CHECK_FALSE(alg->is_monomial());
  CHECK(alg->nilpotency_degree() == 3);
  auto nf_ba = alg->normal_form(Path{0, {q.arrow_id("a"), q.arrow_id("b")}});
  auto nf_dc = alg->normal_form(Path{0, {q.arrow_id("c"), q.arrow_id("d")}});
  CHECK(nf_ba.size() == 1);
  CHECK(nf_ba == nf_dc);
}

TEST_CASE("monomial basis matches path avoidance") {
  struct Case {
    Quiver q;
    std::vector<std::vector<std::string>> rels;
  };
  std::vector<Case> cases = {
      {Quiver::from_names({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "1"}}),
       {{"a", "b"}, {"b", "c"}, {"c", "a"}}},
      {Quiver::from_names({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "1"}}), {{"a", "b", "c"}}},
      {Quiver::from_names({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}}), {{"a", "b"}}},
      {Quiver::from_names({"v"}, {{"x", "v", "v"}, {"y", "v", "v"}}),
       {{"x", "x"}, {"y", "y"}, {"x", "y"}, {"y", "x"}}},
      {Quiver::from_names({"v"}, {{"x", "v", "v"}}), {{"x", "x", "x", "x"}}},
  };
  for (const auto& c : cases) {
    std::vector<Relation> rels;
    std::vector<std::vector<ArrowId>> ids;
    for (const auto& r : c.rels) {
      rels.push_back(monomial_relation(F7, c.q, r));
      ids.push_back(rels.back().terms[0].arrows);
    }
    auto alg = BoundAlgebra::build(F7, c.q, rels);
    std::set<Path> got(alg->basis().begin(), alg->basis().end());
    CHECK(got == avoiding_paths(c.q, ids, 40));
    std::size_t longest = 0;
    for (const Path& p : alg->basis()) longest = std::max(longest, p.length());
    CHECK(alg->nilpotency_degree() == longest + 1);
  }
}
