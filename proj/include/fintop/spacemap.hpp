#ifndef FINTOP_SPACEMAP_HPP
#define FINTOP_SPACEMAP_HPP

#include <vector>

#include "fintop/family.hpp"
#include "fintop/space.hpp"

namespace fintop {

// A total point function between two finite spaces.
class SpaceMap {
public:
    SpaceMap(FiniteSpace source, FiniteSpace target, std::vector<Point> image);

    static SpaceMap identity(const FiniteSpace& space);

    const FiniteSpace& source() const { return source_; }
    const FiniteSpace& target() const { return target_; }
    const std::vector<Point>& image() const { return image_; }
    Point apply(Point x) const { return image_[x]; }

    PointSet image_of(PointSet s) const;
    PointSet preimage_of(PointSet s) const;
    PointSet fiber(Point y) const;

    bool operator==(const SpaceMap&) const = default;

private:
    FiniteSpace source_;
    FiniteSpace target_;
    std::vector<Point> image_;
};

struct MapReport {
    bool onto = false;
    bool continuous = false;
    bool closed_map = false;
    bool open_map = false;
    bool skeletal = false;   // int cl f(U) nonempty for every nonempty open U
    bool d_open = false;     // f(U) inside int cl f(U) for every open U
    bool irreducible = false; // closed continuous surjection, no proper closed
                              // subset of the source maps onto the target
};

// Every flag by direct definition over all opens/closed sets; irreducibility
// checks every proper closed subset exactly.
MapReport map_report(const SpaceMap& f);

// Y minus f(X minus U). Equals {y : fiber(y) inside U}; the pointwise form is
// cross-checked in tests.
PointSet small_image(const SpaceMap& f, PointSet u);

// Condition (2) of the d-openness criterion for P = {f^-1(V) : V in baseY}:
// for every subfamily S and point x outside cl(union S) some W in P contains
// x and misses union S. Subfamilies are pruned to distinct unions.
bool kpv_condition(const SpaceMap& f, const SetFamily& base_y);

} // namespace fintop

#endif
