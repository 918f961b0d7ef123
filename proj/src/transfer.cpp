#include "fintop/transfer.hpp"

#include <algorithm>
#include <random>

#include "fintop/enumerate.hpp"

namespace fintop {

namespace {

void require_irreducible(const SpaceMap& f, const char* name) {
    MapReport r = map_report(f);
    std::string prefix = std::string(name) + " is not ";
    if (!r.onto) throw input_error(prefix + "onto");
    if (!r.continuous) throw input_error(prefix + "continuous");
    if (!r.closed_map) throw input_error(prefix + "a closed map");
    if (!r.irreducible)
        throw input_error(prefix + "irreducible: a proper closed subset already "
                                   "maps onto the target");
}

} // namespace

AbsoluteTriple::AbsoluteTriple(FiniteSpace z_, SpaceMap f_, SpaceMap g_)
    : z(std::move(z_)), f(std::move(f_)), g(std::move(g_)) {
    if (!(f.source() == z) || !(g.source() == z))
        throw input_error("triple maps must share the source space");
    require_irreducible(f, "f");
    require_irreducible(g, "g");
}

SetFamily pullback_pi_base(const SpaceMap& f, const SetFamily& base_x) {
    require_irreducible(f, "map");
    if (base_x.role() != FamilyRole::pi_base)
        throw input_error("pullback needs a pi-base family");
    if (!(base_x.space() == f.target()))
        throw input_error("pi-base lives over a different space than the map's target");

    std::vector<PointSet> preimages;
    preimages.reserve(base_x.members().size());
    for (PointSet b : base_x.members()) preimages.push_back(f.preimage_of(b));
    SetFamily out(f.source(), std::move(preimages), FamilyRole::plain);
    if (!family_role_check(out, FamilyRole::pi_base))
        throw std::logic_error("pullback of a pi-base lost the pi-base property");
    return SetFamily(f.source(), out.members(), FamilyRole::pi_base);
}

TransferResult transfer_witness(const AbsoluteTriple& t, const SetFamily& base_x,
                                const FnsWitness& s) {
    if (base_x.role() != FamilyRole::pi_base)
        throw input_error("transfer needs a pi-base family over x");
    if (!(base_x.space() == t.g.target()))
        throw input_error("pi-base lives over a different space than g's target");
    if (!(s.family == base_x))
        throw input_error("witness is not over the given pi-base");
    if (!verify_fns(s).ok)
        throw input_error("witness fails verification");

    // V -> f#(g^{-1}(V)), deduplicated; the canonically first V wins a
    // collision and donates its s-images.
    std::vector<PointSet> images;
    images.reserve(base_x.members().size());
    for (PointSet v : base_x.members())
        images.push_back(small_image(t.f, t.g.preimage_of(v)));

    std::vector<int> order(base_x.size());
    for (int i = 0; i < base_x.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return canonical_less(base_x.member(a), base_x.member(b));
    });

    std::vector<PointSet> members_y;
    std::vector<int> representative; // family_y index -> base_x index
    std::vector<int> image_index(base_x.size(), -1);
    for (int i : order) {
        PointSet img = images[i];
        auto it = std::find(members_y.begin(), members_y.end(), img);
        if (it == members_y.end()) {
            members_y.push_back(img);
            representative.push_back(i);
            image_index[i] = static_cast<int>(members_y.size()) - 1;
        } else {
            image_index[i] = static_cast<int>(it - members_y.begin());
        }
    }

    SetFamily family_plain(t.f.target(), members_y, FamilyRole::plain);
    if (!family_role_check(family_plain, FamilyRole::pi_base))
        throw std::logic_error("transferred family is not a pi-base of y");
    SetFamily family_y(t.f.target(), std::move(members_y), FamilyRole::pi_base);

    std::vector<std::vector<int>> s_z(family_y.size());
    for (int j = 0; j < family_y.size(); ++j) {
        for (int w : s.s[representative[j]]) {
            int img = image_index[w];
            if (!std::binary_search(s_z[j].begin(), s_z[j].end(), img))
                s_z[j].insert(std::lower_bound(s_z[j].begin(), s_z[j].end(), img), img);
        }
    }

    FnsWitness witness{family_y, std::move(s_z)};
    if (!verify_fns(witness).ok)
        throw std::logic_error("transferred witness fails verification");
    return TransferResult{std::move(family_y), std::move(witness), std::move(image_index)};
}

namespace {

// Fiber form of the small image, kept independent of the complement form in
// spacemap.cpp on purpose.
PointSet small_image_by_fibers(const SpaceMap& f, PointSet u) {
    PointSet out;
    for (Point y = 0; y < f.target().point_count(); ++y)
        if (f.fiber(y).subset_of(u) && !f.fiber(y).empty()) out = out.with(y);
    return out;
}

void check_lemma_map(const SpaceMap& f, LemmaReport& report) {
    ++report.instances_checked;
    MapReport mr = map_report(f);
    const FiniteSpace& src = f.source();

    for (PointSet u : src.opens()) {
        if (small_image(f, u) != small_image_by_fibers(f, u))
            report.failures.push_back({"frd", f, u, u});
        if (!small_image(f, u).subset_of(f.image_of(u)))
            report.failures.push_back({"f2", f, u, u});
    }

    for (PointSet u : src.opens()) {
        for (PointSet v : src.opens()) {
            bool disjoint = !u.intersects(v);
            bool images_disjoint = !small_image(f, u).intersects(small_image(f, v));
            if (mr.irreducible && disjoint != images_disjoint)
                report.failures.push_back({"f1", f, u, v});
            if (!mr.irreducible && images_disjoint && !disjoint)
                report.expected_failures_found = true;
        }
    }
}

} // namespace

LemmaReport check_lemma_pair(const FiniteSpace& src, const FiniteSpace& tgt) {
    LemmaReport report;
    int ns = src.point_count(), nt = tgt.point_count();
    std::vector<int> img(ns, 0);
    while (true) {
        bool onto = true;
        for (Point y = 0; y < nt && onto; ++y)
            onto = std::find(img.begin(), img.end(), y) != img.end();
        if (onto) check_lemma_map(SpaceMap(src, tgt, img), report);
        int k = 0;
        while (k < ns && ++img[k] == nt) img[k++] = 0;
        if (k == ns) break;
    }
    return report;
}

LemmaReport lemma_harness(int max_points, long long sample_pairs, std::uint64_t seed) {
    if (max_points < 1 || max_points > 4)
        throw input_error("lemma harness supports 1 to 4 points");
    if (sample_pairs < 1) throw input_error("sample budget must be positive");

    std::vector<std::vector<FiniteSpace>> by_size(max_points + 1);
    for (int n = 1; n <= max_points; ++n) by_size[n] = enumerate_topologies(n);

    LemmaReport total;
    auto merge = [&](LemmaReport part) {
        total.instances_checked += part.instances_checked;
        for (LemmaFailure& f : part.failures) total.failures.push_back(std::move(f));
        total.expected_failures_found |= part.expected_failures_found;
    };

    std::vector<std::pair<const FiniteSpace*, const FiniteSpace*>> sampled;
    for (int ns = 1; ns <= max_points; ++ns) {
        for (int nt = 1; nt <= max_points; ++nt) {
            if (ns < 4 && nt < 4) {
                for (const FiniteSpace& src : by_size[ns])
                    for (const FiniteSpace& tgt : by_size[nt])
                        merge(check_lemma_pair(src, tgt));
            } else {
                for (const FiniteSpace& src : by_size[ns])
                    for (const FiniteSpace& tgt : by_size[nt])
                        sampled.emplace_back(&src, &tgt);
            }
        }
    }
    if (!sampled.empty()) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, sampled.size() - 1);
        long long n = std::min<long long>(sample_pairs,
                                          static_cast<long long>(sampled.size()));
        for (long long i = 0; i < n; ++i) {
            auto [src, tgt] = sampled[pick(rng)];
            merge(check_lemma_pair(*src, *tgt));
        }
    }
    return total;
}

} // namespace fintop
