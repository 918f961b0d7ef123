#ifndef FINTOP_POINTSET_HPP
#define FINTOP_POINTSET_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "fintop/errors.hpp"

namespace fintop {

using Point = int;

// Subset of {0..n-1} as a fixed-width bitmask. The owning space's point
// count caps valid indices at 64.
class PointSet {
public:
    static constexpr int max_points = 64;

    constexpr PointSet() = default;
    constexpr explicit PointSet(std::uint64_t bits) : bits_(bits) {}

    static PointSet empty_set() { return PointSet(0); }
    static PointSet full_set(int n) {
        return n >= 64 ? PointSet(~std::uint64_t{0})
                       : PointSet((std::uint64_t{1} << n) - 1);
    }
    static PointSet singleton(Point x) { return PointSet(std::uint64_t{1} << x); }
    static PointSet from_points(const std::vector<Point>& points);

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(Point x) const { return (bits_ >> x) & 1; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }

    constexpr PointSet operator|(PointSet o) const { return PointSet(bits_ | o.bits_); }
    constexpr PointSet operator&(PointSet o) const { return PointSet(bits_ & o.bits_); }
    constexpr PointSet minus(PointSet o) const { return PointSet(bits_ & ~o.bits_); }
    PointSet complement_in(int n) const { return full_set(n).minus(*this); }
    PointSet with(Point x) const { return PointSet(bits_ | (std::uint64_t{1} << x)); }

    constexpr bool subset_of(PointSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(PointSet o) const { return (bits_ & o.bits_) != 0; }

    constexpr bool operator==(const PointSet&) const = default;

    std::vector<Point> points() const;
    std::string to_string() const; // "{0,2,3}"

private:
    std::uint64_t bits_ = 0;
};

// Canonical order: cardinality first, then lexicographic on the sorted index
// lists. For equal cardinality the lexicographic comparison reduces to: the
// smallest element of the symmetric difference belongs to the smaller set.
inline bool canonical_less(PointSet a, PointSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    std::uint64_t d = a.bits() ^ b.bits();
    if (d == 0) return false;
    return (a.bits() >> std::countr_zero(d)) & 1;
}

inline int compare_canonical(PointSet a, PointSet b) {
    if (canonical_less(a, b)) return -1;
    if (canonical_less(b, a)) return 1;
    return 0;
}

} // namespace fintop

#endif
