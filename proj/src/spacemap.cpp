#include "fintop/spacemap.hpp"

#include <algorithm>

namespace fintop {

SpaceMap::SpaceMap(FiniteSpace source, FiniteSpace target, std::vector<Point> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
    if (static_cast<int>(image_.size()) != source_.point_count())
        throw input_error("map image length differs from source point count");
    for (Point y : image_)
        if (y < 0 || y >= target_.point_count())
            throw input_error("map value " + std::to_string(y) + " outside target");
}

SpaceMap SpaceMap::identity(const FiniteSpace& space) {
    std::vector<Point> image(space.point_count());
    for (Point x = 0; x < space.point_count(); ++x) image[x] = x;
    return SpaceMap(space, space, std::move(image));
}

PointSet SpaceMap::image_of(PointSet s) const {
    PointSet out;
    for (Point x = 0; x < source_.point_count(); ++x)
        if (s.contains(x)) out = out.with(image_[x]);
    return out;
}

PointSet SpaceMap::preimage_of(PointSet s) const {
    PointSet out;
    for (Point x = 0; x < source_.point_count(); ++x)
        if (s.contains(image_[x])) out = out.with(x);
    return out;
}

PointSet SpaceMap::fiber(Point y) const {
    return preimage_of(PointSet::singleton(y));
}

MapReport map_report(const SpaceMap& f) {
    const FiniteSpace& src = f.source();
    const FiniteSpace& tgt = f.target();
    MapReport r;
    r.onto = f.image_of(src.full()) == tgt.full();

    r.continuous = true;
    for (PointSet v : tgt.opens())
        if (!src.is_open(f.preimage_of(v))) { r.continuous = false; break; }

    r.open_map = true;
    for (PointSet u : src.opens())
        if (!tgt.is_open(f.image_of(u))) { r.open_map = false; break; }

    r.closed_map = true;
    for (PointSet u : src.opens()) {
        PointSet c = u.complement_in(src.point_count());
        if (!tgt.is_closed(f.image_of(c))) { r.closed_map = false; break; }
    }

    r.skeletal = true;
    r.d_open = true;
    for (PointSet u : src.opens()) {
        PointSet fu = f.image_of(u);
        PointSet reg = tgt.regular_part(fu);
        if (!u.empty() && reg.empty()) r.skeletal = false;
        if (!fu.subset_of(reg)) r.d_open = false;
    }

    r.irreducible = false;
    if (r.onto && r.continuous && r.closed_map) {
        r.irreducible = true;
        for (PointSet u : src.opens()) {
            PointSet c = u.complement_in(src.point_count());
            if (c == src.full()) continue;
            if (f.image_of(c) == tgt.full()) { r.irreducible = false; break; }
        }
    }
    return r;
}

PointSet small_image(const SpaceMap& f, PointSet u) {
    checked_subset(f.source(), u, "set");
    PointSet outside = f.image_of(u.complement_in(f.source().point_count()));
    return outside.complement_in(f.target().point_count());
}

bool kpv_condition(const SpaceMap& f, const SetFamily& base_y) {
    if (!(base_y.space() == f.target()))
        throw input_error("kpv base must live over the map's target");
    if (base_y.role() != FamilyRole::base)
        throw input_error("kpv requires a family with role base");

    std::vector<PointSet> p;
    for (PointSet v : base_y.members()) {
        PointSet w = f.preimage_of(v);
        if (std::find(p.begin(), p.end(), w) == p.end()) p.push_back(w);
    }

    // Distinct unions of subfamilies: the union-closure of P plus the empty
    // union. At most 2^n values regardless of |P|.
    std::vector<PointSet> unions{PointSet::empty_set()};
    for (std::size_t i = 0; i < unions.size(); ++i) {
        for (PointSet w : p) {
            PointSet u = unions[i] | w;
            if (std::find(unions.begin(), unions.end(), u) == unions.end())
                unions.push_back(u);
        }
    }

    const FiniteSpace& src = f.source();
    for (PointSet u : unions) {
        PointSet cl = src.closure(u);
        for (Point x = 0; x < src.point_count(); ++x) {
            if (cl.contains(x)) continue;
            bool found = false;
            for (PointSet w : p)
                if (w.contains(x) && !w.intersects(u)) { found = true; break; }
            if (!found) return false;
        }
    }
    return true;
}

} // namespace fintop
