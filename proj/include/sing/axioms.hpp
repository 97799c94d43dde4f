#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sing/algebra.hpp"

namespace sing {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t passed = 0;
  std::vector<std::string> failures;

  bool ok() const { return cases == passed; }
};

/// Algebras the suites rotate through.
std::vector<AlgebraPtr> axiom_corpus(const Field& f);

/// The connecting map Ω M -> N of a short exact sequence does not depend on
/// the chosen lift: two independently perturbed lifts give the same stable class.
SuiteResult well_definedness_suite(std::uint64_t seed, std::size_t count = 50);

/// stHom(X, -) applied to Ω M -> N -> E -> M is exact at N and at E.
SuiteResult hom_exactness_suite(std::uint64_t seed, std::size_t count = 50, std::size_t test_modules = 3);

/// Identities of the stabilization calculus on seeded morphisms.
SuiteResult calculus_suite(std::uint64_t seed, std::size_t triples = 50, std::size_t pairs = 25, std::size_t k_max = 8);

std::vector<SuiteResult> run_axioms(std::uint64_t seed, std::size_t k_max = 8);

}  // namespace sing
