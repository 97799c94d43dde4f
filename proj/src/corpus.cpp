#include "sing/corpus.hpp"

namespace sing::corpus {

namespace {

AlgebraPtr monomial(const Field& f, const Quiver& q, const std::vector<std::vector<std::string>>& rels) {
  std::vector<Relation> r;
  for (const auto& names : rels) r.push_back(monomial_relation(f, q, names));
  return BoundAlgebra::build(f, q, std::move(r));
}

}  // namespace

AlgebraPtr dual_numbers(const Field& f) {
  return monomial(f, Quiver::from_names({"v"}, {{"x", "v", "v"}}), {{"x", "x"}});
}

AlgebraPtr a2(const Field& f) { return monomial(f, Quiver::from_names({"1", "2"}, {{"a", "1", "2"}}), {}); }

AlgebraPtr a3_zero_relation(const Field& f) {
  return monomial(f, Quiver::from_names({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}}), {{"a", "b"}});
}

AlgebraPtr cyclic_radical_square_zero(const Field& f, std::size_t n) {
  std::vector<std::string> vs;
  std::vector<std::tuple<std::string, std::string, std::string>> as;
  for (std::size_t i = 1; i <= n; ++i) vs.push_back(std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) as.emplace_back("a" + std::to_string(i), vs[i - 1], vs[i % n]);
  Quiver q = Quiver::from_names(vs, as);
  return BoundAlgebra::build(f, q, radical_square_relations(f, q));
}

AlgebraPtr two_loops_radical_square_zero(const Field& f) {
  Quiver q = Quiver::from_names({"v"}, {{"x", "v", "v"}, {"y", "v", "v"}});
  return BoundAlgebra::build(f, q, radical_square_relations(f, q));
}

AlgebraPtr two_cycle_gentle(const Field& f) {
  return monomial(f, Quiver::from_names({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}}), {{"a", "b"}, {"b", "a"}});
}

AlgebraPtr commutative_square(const Field& f) {
  Quiver q = Quiver::from_names({"1", "2", "3", "4"},
                                {{"a", "1", "2"}, {"b", "2", "4"}, {"c", "1", "3"}, {"d", "3", "4"}});
  Relation r{{PathTerm{Scalar::one(f), {q.arrow_id("a"), q.arrow_id("b")}},
              PathTerm{-Scalar::one(f), {q.arrow_id("c"), q.arrow_id("d")}}}};
  return BoundAlgebra::build(f, q, {r});
}

std::vector<Named> standard(const Field& f) {
  return {
      {"dual-numbers", dual_numbers(f)},
      {"A2", a2(f)},
      {"A3-ba", a3_zero_relation(f)},
      {"cyclic2-J2", cyclic_radical_square_zero(f, 2)},
      {"cyclic3-J2", cyclic_radical_square_zero(f, 3)},
      {"two-loops-J2", two_loops_radical_square_zero(f)},
      {"two-cycle-gentle", two_cycle_gentle(f)},
      {"commutative-square", commutative_square(f)},
  };
}

}  // namespace sing::corpus
