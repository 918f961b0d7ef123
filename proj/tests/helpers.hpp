#ifndef FINTOP_TEST_HELPERS_HPP
#define FINTOP_TEST_HELPERS_HPP

#include <initializer_list>
#include <vector>

#include "fintop/family.hpp"
#include "fintop/generate.hpp"
#include "fintop/space.hpp"

namespace fintop::testutil {

inline PointSet set(std::initializer_list<Point> points) {
    PointSet s;
    for (Point x : points) s = s.with(x);
    return s;
}

// Opens {}, {1}, {0,1}: point 1 open, point 0 closed.
inline FiniteSpace sierpinski() {
    GenSpec spec;
    spec.kind = GenKind::sierpinski;
    return generate(spec);
}

// Three points, opens {}, {0}, {2}, {0,2}, {0,1}, X. Regular opens are
// {}, {2}, {0,1}, X.
inline FiniteSpace x3() {
    return FiniteSpace::from_opens(3, {set({}), set({0}), set({2}), set({0, 2}),
                                       set({0, 1}), set({0, 1, 2})});
}

// Chain topology on three points: opens {}, {0}, {0,1}, X.
inline FiniteSpace chain3() {
    return FiniteSpace::from_opens(3, {set({}), set({0}), set({0, 1}),
                                       set({0, 1, 2})});
}

// Opens are exactly the unions of the given blocks.
inline FiniteSpace cluster(const std::vector<PointSet>& blocks) {
    GenSpec spec;
    spec.kind = GenKind::cluster;
    spec.blocks = blocks;
    return generate(spec);
}

inline SetFamily family(const FiniteSpace& space, std::vector<PointSet> members,
                        FamilyRole role = FamilyRole::plain) {
    return SetFamily(space, std::move(members), role);
}

} // namespace fintop::testutil

#endif
