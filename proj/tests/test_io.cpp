#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sing/corpus.hpp"
#include "sing/error.hpp"
#include "sing/io.hpp"
#include "sing/singularity.hpp"

using namespace sing;

namespace {

std::string data(const std::string& name) { return std::string(SING_TEST_DATA) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("algebra files round-trip byte for byte") {
  for (const char* name : {"dual_numbers.json", "a2.json", "a3_ba.json", "cyclic3_j2.json", "cyclic2_j2.json",
                           "two_loops_j2.json", "two_cycle_gentle.json", "commutative_square_q.json"}) {
    INFO(name);
    AlgebraPtr alg = io::load_algebra(data(name));
    CHECK(io::canonical_dump(io::algebra_to_json(*alg)) == slurp(data(name)));
  }
}

TEST_CASE("module files round-trip byte for byte") {
  const std::vector<std::pair<const char*, const char*>> cases{
      {"dual_numbers.json", "dual_simple.json"}, {"dual_numbers.json", "dual_projective.json"},
      {"a2.json", "a2_s1.json"},                 {"a2.json", "a2_s2.json"},
      {"cyclic3_j2.json", "cyclic3_s1.json"},    {"cyclic3_j2.json", "cyclic3_s3.json"},
      {"two_loops_j2.json", "two_loops_simple.json"}};
  for (auto [a, m] : cases) {
    INFO(m);
    AlgebraPtr alg = io::load_algebra(data(a));
    Representation rep = io::load_module(alg, data(m));
    CHECK(io::canonical_dump(io::module_to_json(rep)) == slurp(data(m)));
  }
}

TEST_CASE("parsed algebras match the built-in corpus") {
  const Field f = Field::prime(7);
  AlgebraPtr d = io::load_algebra(data("dual_numbers.json"));
  CHECK(d->dimension() == 2);
  CHECK(same_algebra(*d, *corpus::dual_numbers(f)));
  CHECK(same_algebra(*io::load_algebra(data("cyclic3_j2.json")), *corpus::cyclic_radical_square_zero(f, 3)));
  CHECK(io::load_module(d, data("dual_projective.json")) == projective_rep(d, 0));
  AlgebraPtr sq = io::load_algebra(data("commutative_square_q.json"));
  CHECK_FALSE(sq->field().is_prime());
  CHECK(sq->dimension() == 9);
}

TEST_CASE("round trip of serialized corpus objects") {
  for (const auto& named : corpus::standard(Field::prime(5))) {
    io::json j = io::algebra_to_json(*named.algebra);
    AlgebraPtr back = io::parse_algebra(j);
    CHECK(io::algebra_to_json(*back) == j);
    for (VertexId v = 0; v < back->quiver().vertex_count(); ++v) {
      Representation p = projective_rep(named.algebra, v);
      io::json mj = io::module_to_json(p);
      CHECK(io::module_to_json(io::parse_module(back, mj)) == mj);
    }
  }
}

TEST_CASE("parse errors carry codes") {
  CHECK(code_of([] { io::load_algebra(data("bad_relation_a2.json")); }) == ErrorCode::RelationNotParallel);
  CHECK(code_of([] { io::load_algebra(data("bad_schema.json")); }) == ErrorCode::SchemaError);
  CHECK(code_of([] { io::load_algebra(data("missing.json")); }) == ErrorCode::IoError);
  AlgebraPtr d = io::load_algebra(data("dual_numbers.json"));
  CHECK(code_of([&] { io::load_module(d, data("bad_shape_module.json")); }) == ErrorCode::MatrixShapeMismatch);
  CHECK(code_of([&] { io::load_module(d, data("bad_relation_module.json")); }) == ErrorCode::RelationNotSatisfied);
  try {
    io::load_algebra(data("bad_schema.json"));
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("/field/p") != std::string::npos);
  }
  io::json m = {{"dims", {{"v", 1}}}, {"arrows", {{"x", {{"q"}}}}}};
  CHECK(code_of([&] { io::parse_module(d, m); }) == ErrorCode::SchemaError);
  io::json missing = {{"dims", io::json::object()}};
  CHECK(code_of([&] { io::parse_module(d, missing); }) == ErrorCode::SchemaError);
}

TEST_CASE("rational scalars and matrix literals") {
  const Field q = Field::rational();
  Matrix m = io::parse_matrix(q, io::json::parse(R"([["1/2","-3"],["0","4/6"]])"), 2, 2, "/m");
  CHECK(io::matrix_to_json(m) == io::json::parse(R"([["1/2","-3"],["0","2/3"]])"));
  const Field f = Field::prime(7);
  Matrix r = io::parse_matrix(f, io::json::parse(R"([["-1","1/2"]])"), 1, 2, "/m");
  CHECK(io::matrix_to_json(r) == io::json::parse(R"([["6","4"]])"));
}

TEST_CASE("reports serialize canonically") {
  AlgebraPtr d = io::load_algebra(data("dual_numbers.json"));
  RepPtr s = share(io::load_module(d, data("dual_simple.json")));
  io::json a = io::report_to_json(sg_hom_dim({s, s, 0, 4, 3}));
  io::json b = io::report_to_json(sg_hom_dim({s, s, 0, 4, 3}));
  CHECK(io::canonical_dump(a) == io::canonical_dump(b));
  CHECK(a["verdict"]["kind"] == "CertifiedStable");
  CHECK(a["verdict"]["value"] == 1);
  CHECK(a["dims"] == io::json::parse("[1,1,1,1,1]"));
  CHECK(a.contains("rankTable"));
  CHECK(a["pMax"] == 4);
  CHECK(io::fnv1a_hex("") == "cbf29ce484222325");
  CHECK(io::fnv1a_hex("a") == "af63dc4c8601ec8c");
}
