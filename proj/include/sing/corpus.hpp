#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sing/algebra.hpp"

namespace sing::corpus {

/// k[x]/(x^2).
AlgebraPtr dual_numbers(const Field& f);
/// 1 -a-> 2, no relations.
AlgebraPtr a2(const Field& f);
/// 1 -a-> 2 -b-> 3 with ba = 0.
AlgebraPtr a3_zero_relation(const Field& f);
/// Oriented n-cycle 1 -> 2 -> ... -> n -> 1 with J^2 = 0.
AlgebraPtr cyclic_radical_square_zero(const Field& f, std::size_t n);
/// One vertex with loops x, y and J^2 = 0.
AlgebraPtr two_loops_radical_square_zero(const Field& f);
/// 1 -a-> 2 -b-> 1 with ab = ba = 0.
AlgebraPtr two_cycle_gentle(const Field& f);
/// Commutative square 1 -> 2 -> 4, 1 -> 3 -> 4 with ba = dc.
AlgebraPtr commutative_square(const Field& f);

struct Named {
  std::string name;
  AlgebraPtr algebra;
};

/// The algebras used by property suites.
std::vector<Named> standard(const Field& f);

}  // namespace sing::corpus
