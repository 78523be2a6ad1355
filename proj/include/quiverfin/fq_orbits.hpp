#pragma once

#include <span>

#include "quiverfin/quiver.hpp"

namespace quiverfin {

inline constexpr i64 kDefaultOrbitBudget = 1'000'000;

/// Exact number of orbits of prod_x GL_{d(x)}(F_q) acting on the tuples of
/// matrices over F_q by (g . M)_a = g_{ta} M_a g_{sa}^{-1}, computed by
/// sweeping unvisited points and closing orbits under generators. Factors
/// of size <= 2 contribute every invertible matrix as a generator; larger
/// factors contribute elementary transvections plus one primitive diagonal.
/// Throws BudgetError when the point count or the group order exceeds the
/// budget.
i64 count_orbits(const QuiverSetting& s, i64 q_prime, i64 budget = kDefaultOrbitBudget);

enum class GrowthSignal { ConstantAcrossFields, StrictlyGrowing, Inconclusive };

/// Heuristic finiteness signal: orbit counts over several prime fields,
/// classified as constant, strictly growing, or neither.
GrowthSignal growth_signal(const QuiverSetting& s, std::span<const i64> primes,
                           i64 budget = kDefaultOrbitBudget);

}  // namespace quiverfin
