#include "doctest.h"
#include "sing/axioms.hpp"

using namespace sing;

TEST_CASE("property suites pass for several seeds") {
  for (std::uint64_t seed : {0u, 1u, 99u}) {
    for (const auto& s : run_axioms(seed)) {
      INFO(s.name);
      CHECK(s.ok());
      CHECK(s.cases > 0);
      for (const auto& f : s.failures) FAIL_CHECK(f);
    }
  }
}

TEST_CASE("suite sizes") {
  CHECK(well_definedness_suite(3).cases == 50);
  CHECK(hom_exactness_suite(3).cases == 300);
  CHECK(calculus_suite(3).cases == 50 * 3 + 25);
}
