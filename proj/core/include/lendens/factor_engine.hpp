#pragma once

#include <cstdint>

#include "lendens/factorization.hpp"
#include "lendens/monoid.hpp"

namespace lendens {

/// Z(x) in lexicographic order. Throws TagMismatch or NotInMonoid; a
/// partial set with complete == false when the budget runs out.
FactorizationSet factorizations(const Monoid& m, const Element& x,
                                std::uint64_t budget = kDefaultBudget);

/// L(x) through the kind's fastest path.
LengthSet length_set(const Monoid& m, const Element& x);

/// L(x) read off a full enumeration of Z(x); BudgetExceeded if incomplete.
LengthSet length_set_by_enumeration(const Monoid& m, const Element& x,
                                    std::uint64_t budget = kDefaultBudget);

/// Componentwise minimum. Throws IndexSpaceMismatch.
Factorization factorization_gcd(const Factorization& z, const Factorization& y);

/// max(|z - g|, |y - g|) with g = gcd(z, y). Throws IndexSpaceMismatch.
std::int64_t distance(const Factorization& z, const Factorization& y);

/// Components of the graph joining factorizations with a common atom.
/// Throws IncompleteSet.
GraphPartition graph_components(const FactorizationSet& fs);

}  // namespace lendens
