#ifndef FINTOP_ENUMERATE_HPP
#define FINTOP_ENUMERATE_HPP

#include <vector>

#include "fintop/space.hpp"

namespace fintop {

// All topologies on n labeled points, ordered by open count and then by the
// canonical order of their open lists. n is capped at 4: the candidate
// families grow doubly exponentially.
std::vector<FiniteSpace> enumerate_topologies(int n);

// Counts for n = 1..4 are 1, 4, 29, 355.
bool space_canonical_less(const FiniteSpace& a, const FiniteSpace& b);

} // namespace fintop

#endif
