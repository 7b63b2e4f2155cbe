#pragma once

#include <utility>
#include <vector>

#include "metlie/poly.hpp"

namespace metlie {

// Factorisation over Q: monic irreducible factors with multiplicities, sorted
// by degree and then coefficients. Zassenhaus: Cantor-Zassenhaus modulo a
// small prime, multifactor Hensel lifting, exact recombination.
std::vector<std::pair<Poly, int>> factor(const Poly& f);
bool is_irreducible(const Poly& f);

// Caps the number of recombination trials; exceeding it throws
// PreconditionError rather than returning an unverified answer.
inline constexpr long kRecombinationBudget = 2'000'000;

}  // namespace metlie
