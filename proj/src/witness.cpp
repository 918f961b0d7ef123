#include "fintop/witness.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace fintop {

namespace {

std::vector<int> all_indices(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

void check_index_lists(const SetFamily& family,
                       const std::vector<std::vector<int>>& lists,
                       const char* what) {
    if (static_cast<int>(lists.size()) != family.size())
        throw input_error(std::string(what) + " has " + std::to_string(lists.size()) +
                          " entries for a family of " + std::to_string(family.size()));
    for (const auto& img : lists) {
        for (std::size_t k = 0; k < img.size(); ++k) {
            if (img[k] < 0 || img[k] >= family.size())
                throw input_error(std::string(what) + " image index " +
                                  std::to_string(img[k]) + " out of range");
            if (k > 0 && img[k] <= img[k - 1])
                throw input_error(std::string(what) +
                                  " image lists must be sorted and duplicate-free");
        }
    }
}

// Indices are kept sorted, so set intersection is a merge.
std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool sorted_insert(std::vector<int>& v, int x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it != v.end() && *it == x) return false;
    v.insert(it, x);
    return true;
}

// Indices of `family` ordered canonically by member set.
std::vector<int> canonical_rank(const SetFamily& family) {
    std::vector<int> order = all_indices(family.size());
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return canonical_less(family.member(a), family.member(b));
    });
    return order;
}

} // namespace

FnsWitness trivial_fns(const SetFamily& family) {
    std::vector<std::vector<int>> s(family.size(), all_indices(family.size()));
    return FnsWitness{family, std::move(s)};
}

WitnessVerdict verify_fns(const FnsWitness& w) {
    check_index_lists(w.family, w.s, "fns witness");
    const SetFamily& fam = w.family;
    for (int i = 0; i < fam.size(); ++i) {
        for (int j = i; j < fam.size(); ++j) {
            PointSet u = fam.member(i), v = fam.member(j);
            if (u.intersects(v)) continue;
            std::vector<int> pool = sorted_intersection(w.s[i], w.s[j]);
            bool separated = false;
            for (int a : pool) {
                if (!u.subset_of(fam.member(a))) continue;
                for (int b : pool) {
                    if (!v.subset_of(fam.member(b))) continue;
                    if (!fam.member(a).intersects(fam.member(b))) {
                        separated = true;
                        break;
                    }
                }
                if (separated) break;
            }
            if (!separated) return WitnessVerdict{false, std::make_pair(i, j)};
        }
    }
    return WitnessVerdict{true, std::nullopt};
}

namespace {

struct SeparatorChoice {
    int w_u, w_v; // member indices: W_U contains U, W_V contains V, disjoint
};

struct FnsPair {
    int u, v; // disjoint member pair, u <= v in canonical rank
    std::vector<SeparatorChoice> choices;
};

// Assigning a separator pair per disjoint pair is complete: any verifying
// witness restricts to one such assignment with no larger uniform bound.
bool assign_pairs(const std::vector<FnsPair>& pairs, std::size_t at, int k,
                  std::vector<std::vector<int>>& s) {
    if (at == pairs.size()) return true;
    const FnsPair& p = pairs[at];
    for (const SeparatorChoice& c : p.choices) {
        std::vector<std::pair<int, int>> added; // (member, image index) to undo
        bool fits = true;
        for (int target : {p.u, p.v}) {
            for (int img : {c.w_u, c.w_v}) {
                if (sorted_insert(s[target], img)) added.emplace_back(target, img);
                if (static_cast<int>(s[target].size()) > k) fits = false;
            }
        }
        if (fits && assign_pairs(pairs, at + 1, k, s)) return true;
        for (auto [target, img] : added) {
            auto& v = s[target];
            v.erase(std::lower_bound(v.begin(), v.end(), img));
        }
    }
    return false;
}

std::optional<std::vector<std::vector<int>>> solve_fns(const SetFamily& family,
                                                       const std::vector<FnsPair>& pairs,
                                                       int k) {
    std::vector<std::vector<int>> s(family.size());
    if (assign_pairs(pairs, 0, k, s)) return s;
    return std::nullopt;
}

} // namespace

std::optional<FnsSearchResult> search_fns(const SetFamily& family, int k_max) {
    if (k_max < 0) throw input_error("k_max must be nonnegative");
    const std::vector<int> rank = canonical_rank(family);

    std::vector<FnsPair> pairs;
    for (std::size_t a = 0; a < rank.size(); ++a) {
        for (std::size_t b = a; b < rank.size(); ++b) {
            int i = rank[a], j = rank[b];
            PointSet u = family.member(i), v = family.member(j);
            if (u.intersects(v)) continue;
            FnsPair p{i, j, {}};
            for (std::size_t ca = 0; ca < rank.size(); ++ca) {
                int wu = rank[ca];
                if (!u.subset_of(family.member(wu))) continue;
                for (std::size_t cb = 0; cb < rank.size(); ++cb) {
                    int wv = rank[cb];
                    if (!v.subset_of(family.member(wv))) continue;
                    if (family.member(wu).intersects(family.member(wv))) continue;
                    p.choices.push_back({wu, wv});
                }
            }
            if (p.choices.empty()) return std::nullopt; // no witness at any bound
            pairs.push_back(std::move(p));
        }
    }

    for (int k = 0; k <= k_max; ++k) {
        if (auto s = solve_fns(family, pairs, k)) {
            // Recertify minimality: the previous bound must fail outright.
            if (k > 0 && solve_fns(family, pairs, k - 1))
                throw std::logic_error("search_fns minimality recheck failed");
            return FnsSearchResult{k, FnsWitness{family, std::move(*s)}};
        }
    }
    return std::nullopt;
}

WitnessVerdict verify_fn(const FnWitness& w) {
    check_index_lists(w.base, w.u, "fn witness u");
    check_index_lists(w.base, w.l, "fn witness l");
    const SetFamily& base = w.base;
    for (int v = 0; v < base.size(); ++v) {
        for (int a : w.u[v])
            if (!base.member(v).subset_of(base.member(a)))
                throw input_error("u(" + base.member(v).to_string() + ") contains " +
                                  base.member(a).to_string() + ", not a superset");
        for (int a : w.l[v])
            if (!base.member(a).subset_of(base.member(v)))
                throw input_error("l(" + base.member(v).to_string() + ") contains " +
                                  base.member(a).to_string() + ", not a subset");
    }
    for (int v = 0; v < base.size(); ++v) {
        for (int wi = 0; wi < base.size(); ++wi) {
            if (!base.member(v).subset_of(base.member(wi))) continue;
            if (sorted_intersection(w.u[v], w.l[wi]).empty())
                return WitnessVerdict{false, std::make_pair(v, wi)};
        }
    }
    return WitnessVerdict{true, std::nullopt};
}

DevelopableFn developable_fn(const FiniteSpace& space, const CoverSequence& seq) {
    if (seq.size() == 0)
        throw input_error("developable_fn: empty cover sequence");
    for (int n = 0; n + 1 < seq.size(); ++n)
        if (!is_refinement(seq.covers()[n + 1], seq.covers()[n]))
            throw input_error("developable_fn: cover " + std::to_string(n + 1) +
                              " does not refine cover " + std::to_string(n));
    for (int n = 0; n < seq.size(); ++n)
        if (!is_point_finite(seq.covers()[n]))
            throw input_error("developable_fn: cover " + std::to_string(n) +
                              " is not point-finite");
    if (!is_development(space, seq))
        throw input_error("developable_fn: sequence is not a development");

    std::vector<SetFamily> maximal;
    maximal.reserve(seq.size());
    for (const SetFamily& w : seq.covers())
        maximal.push_back(maximal_subfamily(w));

    // The maximal subfamilies themselves form a development; checked, since
    // the witness formula depends on it.
    if (!is_development(space, CoverSequence(space, maximal)))
        throw std::logic_error("maximal subfamily sequence lost the development property");

    std::vector<PointSet> members;
    std::vector<int> min_level;
    for (int n = 0; n < static_cast<int>(maximal.size()); ++n) {
        for (PointSet m : maximal[n].members()) {
            if (std::find(members.begin(), members.end(), m) == members.end()) {
                members.push_back(m);
                min_level.push_back(n);
            }
        }
    }
    // Order by (first level, canonical) for reproducible output.
    std::vector<int> order = all_indices(static_cast<int>(members.size()));
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (min_level[a] != min_level[b]) return min_level[a] < min_level[b];
        return canonical_less(members[a], members[b]);
    });
    std::vector<PointSet> sorted_members;
    std::vector<int> sorted_level;
    for (int i : order) {
        sorted_members.push_back(members[i]);
        sorted_level.push_back(min_level[i]);
    }

    SetFamily base(space, sorted_members, FamilyRole::base);
    int m = base.size();
    std::vector<std::vector<int>> u(m), l(m);
    for (int i = 0; i < m; ++i) {
        l[i] = {i};
        for (int j = 0; j < m; ++j)
            if (sorted_level[j] <= sorted_level[i] &&
                base.member(i).subset_of(base.member(j)))
                u[i].push_back(j);
        std::sort(u[i].begin(), u[i].end());
    }

    DevelopableFn out{base, sorted_level, FnWitness{base, std::move(u), std::move(l)}};
    if (!verify_fn(out.witness).ok)
        throw std::logic_error("developable_fn produced a non-verifying witness");
    return out;
}

StoneLift stone_lift(const FiniteSpace& space, const FnsWitness& s_ro) {
    SetFamily ro = ro_family(space);
    if (!(s_ro.family == ro))
        throw input_error("stone_lift: witness family is not the regular-open family");

    std::vector<PointSet> atoms;
    for (PointSet a : ro.members()) {
        if (a.empty()) continue;
        bool minimal = true;
        for (PointSet b : ro.members())
            if (!b.empty() && b != a && b.subset_of(a)) { minimal = false; break; }
        if (minimal) atoms.push_back(a);
    }

    int k = static_cast<int>(atoms.size());
    FiniteSpace stone = FiniteSpace::discrete(k);
    std::vector<PointSet> bars;
    bars.reserve(ro.members().size());
    for (PointSet u : ro.members()) {
        PointSet bar;
        for (int a = 0; a < k; ++a)
            if (atoms[a].subset_of(u)) bar = bar.with(a);
        bars.push_back(bar);
    }
    // U -> set of atoms below U is injective on a finite Boolean algebra; a
    // collision would mean the atoms were wrong.
    for (std::size_t i = 0; i < bars.size(); ++i)
        for (std::size_t j = i + 1; j < bars.size(); ++j)
            if (bars[i] == bars[j])
                throw std::logic_error("stone_lift: atom representation collided");

    SetFamily stone_base(stone, std::move(bars), FamilyRole::base);
    return StoneLift{std::move(atoms), std::move(stone),
                     stone_base, FnsWitness{stone_base, s_ro.s}};
}

FnWitness project_fn_to_ro(const FiniteSpace& space, const FnWitness& w) {
    if (!(w.base == topology_as_base(space)))
        throw input_error("project_fn_to_ro: witness base must be the full topology");
    SetFamily ro = ro_family(space);
    const SetFamily& top = w.base;

    std::vector<std::vector<int>> u(ro.size()), l(ro.size());
    for (int r = 0; r < ro.size(); ++r) {
        PointSet v = ro.member(r);
        int t = *top.index_of(v); // regular opens are opens
        for (int a : w.u[t]) {
            PointSet reg = space.regular_part(top.member(a));
            if (!v.subset_of(reg)) continue; // clip to the side condition
            sorted_insert(u[r], *ro.index_of(reg));
        }
        for (int a : w.l[t]) {
            PointSet reg = space.regular_part(top.member(a));
            if (!reg.subset_of(v)) continue;
            sorted_insert(l[r], *ro.index_of(reg));
        }
    }
    return FnWitness{ro, std::move(u), std::move(l)};
}

} // namespace fintop
