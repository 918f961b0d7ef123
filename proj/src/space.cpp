#include "fintop/space.hpp"

#include <algorithm>

namespace fintop {

namespace {

void sort_canonical(std::vector<PointSet>& sets) {
    std::sort(sets.begin(), sets.end(),
              [](PointSet a, PointSet b) { return canonical_less(a, b); });
}

} // namespace

PointSet checked_subset(const FiniteSpace& space, PointSet s, const char* what) {
    if (!s.subset_of(space.full()))
        throw input_error(std::string(what) + " " + s.to_string() +
                          " has indices outside the space's points");
    return s;
}

FiniteSpace FiniteSpace::from_opens(int point_count, std::vector<PointSet> opens) {
    if (point_count < 0 || point_count > PointSet::max_points)
        throw input_error("point count out of range");
    PointSet full = PointSet::full_set(point_count);
    for (PointSet s : opens)
        if (!s.subset_of(full))
            throw input_error("open set " + s.to_string() +
                              " has indices outside the space's points");
    sort_canonical(opens);
    for (std::size_t i = 1; i < opens.size(); ++i)
        if (opens[i] == opens[i - 1])
            throw input_error("duplicate open set " + opens[i].to_string());
    auto member = [&](PointSet s) {
        return std::binary_search(opens.begin(), opens.end(), s,
                                  [](PointSet a, PointSet b) { return canonical_less(a, b); });
    };
    if (!member(PointSet::empty_set()))
        throw input_error("the empty set is missing from the topology");
    if (!member(full))
        throw input_error("the full set is missing from the topology");
    for (std::size_t i = 0; i < opens.size(); ++i) {
        for (std::size_t j = i + 1; j < opens.size(); ++j) {
            if (!member(opens[i] | opens[j]))
                throw input_error("family not closed under union: " +
                                  opens[i].to_string() + " and " + opens[j].to_string());
            if (!member(opens[i] & opens[j]))
                throw input_error("family not closed under intersection: " +
                                  opens[i].to_string() + " and " + opens[j].to_string());
        }
    }
    return FiniteSpace(point_count, std::move(opens));
}

FiniteSpace FiniteSpace::from_generators(int point_count,
                                         const std::vector<PointSet>& generators,
                                         bool* was_already_closed) {
    if (point_count < 0 || point_count > PointSet::max_points)
        throw input_error("point count out of range");
    PointSet full = PointSet::full_set(point_count);
    std::vector<PointSet> sets;
    auto add = [&](PointSet s) {
        if (std::find(sets.begin(), sets.end(), s) == sets.end()) {
            sets.push_back(s);
            return true;
        }
        return false;
    };
    for (PointSet g : generators) {
        if (!g.subset_of(full))
            throw input_error("generator " + g.to_string() +
                              " has indices outside the space's points");
        add(g);
    }
    add(PointSet::empty_set());
    add(full);
    bool grew = false;
    // Fixpoint closure; sets only ever grows.
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            grew |= add(sets[i] | sets[j]);
            grew |= add(sets[i] & sets[j]);
        }
    }
    if (was_already_closed) *was_already_closed = !grew;
    sort_canonical(sets);
    return FiniteSpace(point_count, std::move(sets));
}

FiniteSpace FiniteSpace::discrete(int point_count) {
    if (point_count < 0 || point_count > 20)
        throw input_error("discrete space limited to 20 points");
    std::vector<PointSet> opens;
    opens.reserve(std::size_t{1} << point_count);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << point_count); ++m)
        opens.push_back(PointSet(m));
    sort_canonical(opens);
    return FiniteSpace(point_count, std::move(opens));
}

FiniteSpace FiniteSpace::indiscrete(int point_count) {
    if (point_count < 0 || point_count > PointSet::max_points)
        throw input_error("point count out of range");
    std::vector<PointSet> opens{PointSet::empty_set()};
    if (point_count > 0) opens.push_back(PointSet::full_set(point_count));
    return FiniteSpace(point_count, std::move(opens));
}

bool FiniteSpace::is_open(PointSet s) const {
    return std::binary_search(opens_.begin(), opens_.end(), s,
                              [](PointSet a, PointSet b) { return canonical_less(a, b); });
}

std::optional<int> FiniteSpace::open_index(PointSet s) const {
    auto it = std::lower_bound(opens_.begin(), opens_.end(), s,
                               [](PointSet a, PointSet b) { return canonical_less(a, b); });
    if (it != opens_.end() && *it == s)
        return static_cast<int>(it - opens_.begin());
    return std::nullopt;
}

PointSet FiniteSpace::interior(PointSet s) const {
    checked_subset(*this, s, "set");
    PointSet out;
    for (PointSet o : opens_)
        if (o.subset_of(s)) out = out | o;
    return out;
}

PointSet FiniteSpace::closure(PointSet s) const {
    checked_subset(*this, s, "set");
    return interior(s.complement_in(point_count_)).complement_in(point_count_);
}

PointSet FiniteSpace::regular_part(PointSet s) const {
    return interior(closure(s));
}

} // namespace fintop
