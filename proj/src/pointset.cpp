#include "fintop/pointset.hpp"

namespace fintop {

PointSet PointSet::from_points(const std::vector<Point>& points) {
    std::uint64_t bits = 0;
    for (Point x : points) {
        if (x < 0 || x >= max_points)
            throw input_error("point index " + std::to_string(x) + " out of range");
        bits |= std::uint64_t{1} << x;
    }
    return PointSet(bits);
}

std::vector<Point> PointSet::points() const {
    std::vector<Point> out;
    for (int x = 0; x < max_points; ++x)
        if (contains(x)) out.push_back(x);
    return out;
}

std::string PointSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (Point x : points()) {
        if (!first) out += ",";
        out += std::to_string(x);
        first = false;
    }
    return out + "}";
}

} // namespace fintop
