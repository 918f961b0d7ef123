#include "fintop/enumerate.hpp"

#include <algorithm>

#include "fintop/errors.hpp"

namespace fintop {

bool space_canonical_less(const FiniteSpace& a, const FiniteSpace& b) {
    if (a.point_count() != b.point_count()) return a.point_count() < b.point_count();
    if (a.opens().size() != b.opens().size()) return a.opens().size() < b.opens().size();
    for (std::size_t i = 0; i < a.opens().size(); ++i) {
        if (a.opens()[i] != b.opens()[i])
            return canonical_less(a.opens()[i], b.opens()[i]);
    }
    return false;
}

std::vector<FiniteSpace> enumerate_topologies(int n) {
    if (n < 1) throw input_error("enumerate_topologies needs at least one point");
    if (n > 4) throw input_error("enumerate_topologies is capped at 4 points");

    const std::uint64_t subsets = std::uint64_t{1} << n; // point sets 0..2^n-1
    const std::uint64_t full = subsets - 1;
    std::vector<FiniteSpace> out;

    // Choose which of the 2^n - 2 proper nonempty subsets are open, then
    // keep the choices closed under union and intersection.
    std::vector<std::uint64_t> proper;
    for (std::uint64_t s = 1; s < full; ++s) proper.push_back(s);

    const std::uint64_t families = std::uint64_t{1} << proper.size();
    for (std::uint64_t pick = 0; pick < families; ++pick) {
        std::vector<std::uint64_t> opens{0, full};
        for (std::size_t i = 0; i < proper.size(); ++i)
            if ((pick >> i) & 1) opens.push_back(proper[i]);
        // proper[k] == k+1, so membership of a value s is bit s-1 of pick.
        auto open = [&](std::uint64_t s) {
            return s == 0 || s == full || ((pick >> (s - 1)) & 1);
        };
        bool closed = true;
        for (std::size_t i = 0; i < opens.size() && closed; ++i)
            for (std::size_t j = i + 1; j < opens.size() && closed; ++j)
                closed = open(opens[i] | opens[j]) && open(opens[i] & opens[j]);
        if (!closed) continue;
        std::vector<PointSet> sets;
        sets.reserve(opens.size());
        for (std::uint64_t s : opens) sets.emplace_back(s);
        out.push_back(FiniteSpace::from_opens(n, sets));
    }

    std::sort(out.begin(), out.end(), space_canonical_less);
    return out;
}

} // namespace fintop
