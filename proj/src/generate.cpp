#include "fintop/generate.hpp"

#include <algorithm>
#include <random>

#include "fintop/errors.hpp"

namespace fintop {

const char* gen_kind_name(GenKind kind) {
    switch (kind) {
        case GenKind::discrete: return "discrete";
        case GenKind::indiscrete: return "indiscrete";
        case GenKind::sierpinski: return "sierpinski";
        case GenKind::alexandrov: return "alexandrov";
        case GenKind::random_space: return "random";
        case GenKind::cluster: return "cluster";
    }
    return "?";
}

std::optional<GenKind> gen_kind_from_name(const std::string& name) {
    for (GenKind k : {GenKind::discrete, GenKind::indiscrete, GenKind::sierpinski,
                      GenKind::alexandrov, GenKind::random_space, GenKind::cluster})
        if (name == gen_kind_name(k)) return k;
    return std::nullopt;
}

namespace {

// Opens of a preorder's Alexandrov topology: the up-closed point sets.
// reach[x] is the up-set of x (including x).
FiniteSpace upset_topology(int n, const std::vector<std::uint64_t>& reach) {
    std::vector<PointSet> opens;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool up = true;
        for (int x = 0; x < n && up; ++x)
            if ((mask >> x) & 1) up = (reach[x] & ~mask) == 0;
        if (up) opens.emplace_back(mask);
    }
    return FiniteSpace::from_opens(n, opens);
}

FiniteSpace alexandrov(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1 || n > 16)
        throw input_error("alexandrov supports 1 to 16 points");
    std::vector<std::uint64_t> reach(n);
    for (int x = 0; x < n; ++x) reach[x] = std::uint64_t{1} << x;
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw input_error("poset edge endpoint out of range");
        if (a == b) throw input_error("poset edge from a point to itself");
        reach[a] |= std::uint64_t{1} << b;
    }
    for (bool grew = true; grew;) {
        grew = false;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if ((reach[x] >> y) & 1) {
                    std::uint64_t merged = reach[x] | reach[y];
                    if (merged != reach[x]) { reach[x] = merged; grew = true; }
                }
    }
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (((reach[x] >> y) & 1) && ((reach[y] >> x) & 1))
                throw input_error("poset has a cycle through points " +
                                  std::to_string(x) + " and " + std::to_string(y));
    return upset_topology(n, reach);
}

FiniteSpace random_space(int n, double density, std::uint64_t seed) {
    if (n < 1 || n > 16) throw input_error("random space supports 1 to 16 points");
    if (density < 0.0 || density > 1.0)
        throw input_error("density must lie in [0,1]");
    // A random preorder; its up-sets are the opens. More edges means fewer
    // opens, so the edge probability complements the requested density.
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution edge(1.0 - density);
    std::vector<std::uint64_t> reach(n);
    for (int x = 0; x < n; ++x) reach[x] = std::uint64_t{1} << x;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && edge(rng)) reach[x] |= std::uint64_t{1} << y;
    for (bool grew = true; grew;) {
        grew = false;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if ((reach[x] >> y) & 1) {
                    std::uint64_t merged = reach[x] | reach[y];
                    if (merged != reach[x]) { reach[x] = merged; grew = true; }
                }
    }
    return upset_topology(n, reach);
}

FiniteSpace cluster(const std::vector<PointSet>& blocks) {
    if (blocks.empty()) throw input_error("cluster needs at least one block");
    PointSet all;
    for (PointSet b : blocks) {
        if (b.empty()) throw input_error("cluster block is empty");
        if (b.intersects(all))
            throw input_error("cluster blocks overlap at " + (b & all).to_string());
        all = all | b;
    }
    int n = 0;
    for (Point x : all.points()) n = std::max(n, x + 1);
    if (all != PointSet::full_set(n))
        throw input_error("cluster blocks must cover 0.." + std::to_string(n - 1) +
                          " without gaps");
    if (blocks.size() > 20) throw input_error("cluster supports at most 20 blocks");
    std::vector<PointSet> opens;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << blocks.size()); ++mask) {
        PointSet u;
        for (std::size_t i = 0; i < blocks.size(); ++i)
            if ((mask >> i) & 1) u = u | blocks[i];
        opens.push_back(u);
    }
    std::sort(opens.begin(), opens.end(), canonical_less);
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
    return FiniteSpace::from_opens(n, opens);
}

} // namespace

FiniteSpace generate(const GenSpec& spec) {
    switch (spec.kind) {
        case GenKind::discrete: return FiniteSpace::discrete(spec.n);
        case GenKind::indiscrete: return FiniteSpace::indiscrete(spec.n);
        case GenKind::sierpinski:
            return FiniteSpace::from_opens(
                2, {PointSet(), PointSet::singleton(1), PointSet::full_set(2)});
        case GenKind::alexandrov: return alexandrov(spec.n, spec.poset_edges);
        case GenKind::random_space: return random_space(spec.n, spec.density, spec.seed);
        case GenKind::cluster: return cluster(spec.blocks);
    }
    throw input_error("unknown generator kind");
}

} // namespace fintop
