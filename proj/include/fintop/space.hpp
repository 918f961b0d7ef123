#ifndef FINTOP_SPACE_HPP
#define FINTOP_SPACE_HPP

#include <optional>
#include <vector>

#include "fintop/pointset.hpp"

namespace fintop {

// A topology on {0..n-1}, stored extensionally as the full list of open
// sets in canonical order. Construction validates (or optionally performs)
// closure under pairwise union and intersection; empty and full set are
// always members. Immutable after construction.
class FiniteSpace {
public:
    // Validates: every set in range, no duplicates, empty/full present,
    // family closed under union and intersection. Throws input_error naming
    // the offending set or pair otherwise.
    static FiniteSpace from_opens(int point_count, std::vector<PointSet> opens);

    // Closes `generators` under union/intersection and adds empty/full.
    // `was_already_closed`, when given, reports whether the input needed
    // no completion (beyond supplying empty and full).
    static FiniteSpace from_generators(int point_count,
                                       const std::vector<PointSet>& generators,
                                       bool* was_already_closed = nullptr);

    static FiniteSpace discrete(int point_count);
    static FiniteSpace indiscrete(int point_count);

    int point_count() const { return point_count_; }
    PointSet full() const { return PointSet::full_set(point_count_); }
    const std::vector<PointSet>& opens() const { return opens_; }
    int open_count() const { return static_cast<int>(opens_.size()); }

    bool is_open(PointSet s) const;
    bool is_closed(PointSet s) const { return is_open(s.complement_in(point_count_)); }

    // Largest open subset of s.
    PointSet interior(PointSet s) const;
    // Smallest closed superset of s.
    PointSet closure(PointSet s) const;
    // interior(closure(s)).
    PointSet regular_part(PointSet s) const;
    bool is_regular_open(PointSet s) const { return is_open(s) && regular_part(s) == s; }

    // Index of s in the canonical open list, if open.
    std::optional<int> open_index(PointSet s) const;

    bool operator==(const FiniteSpace&) const = default;

private:
    FiniteSpace(int point_count, std::vector<PointSet> opens)
        : point_count_(point_count), opens_(std::move(opens)) {}

    int point_count_ = 0;
    std::vector<PointSet> opens_; // canonically ordered, distinct

    void check_range(PointSet s, const char* what) const;
    friend PointSet checked_subset(const FiniteSpace&, PointSet, const char*);
};

// Throws input_error if s contains indices >= point_count.
PointSet checked_subset(const FiniteSpace& space, PointSet s, const char* what);

} // namespace fintop

#endif
