#include "fintop/sweeps.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "fintop/enumerate.hpp"
#include "fintop/errors.hpp"
#include "fintop/game.hpp"
#include "fintop/quotient.hpp"
#include "fintop/transfer.hpp"

namespace fintop {

namespace {

struct ShardResult {
    long long checks = 0;
    long long extra = 0; // suite-specific counter
    int max_rounds = 0;
    std::vector<std::string> findings;
};

// Runs fn(i) for i in [0, count) across `workers` threads. Results land in
// index order, so the merged report never depends on the worker count.
template <typename Fn>
std::vector<ShardResult> run_indexed(int count, int workers, Fn&& fn) {
    if (workers < 1) throw input_error("worker count must be positive");
    std::vector<ShardResult> results(count);
    if (workers == 1 || count <= 1) {
        for (int i = 0; i < count; ++i) results[i] = fn(i);
        return results;
    }
    std::vector<std::exception_ptr> errors(count);
    std::atomic<int> next{0};
    auto body = [&] {
        for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            try {
                results[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    int spawn = std::min(workers, count);
    pool.reserve(spawn);
    for (int w = 0; w < spawn; ++w) pool.emplace_back(body);
    for (std::thread& t : pool) t.join();
    for (int i = 0; i < count; ++i)
        if (errors[i]) std::rethrow_exception(errors[i]);
    return results;
}

std::vector<FiniteSpace> all_topologies_up_to(int max_points) {
    if (max_points < 1 || max_points > 4)
        throw input_error("sweep scope is 1 to 4 points");
    std::vector<FiniteSpace> all;
    for (int n = 1; n <= max_points; ++n)
        for (FiniteSpace& s : enumerate_topologies(n)) all.push_back(std::move(s));
    return all;
}

std::string map_text(const SpaceMap& f) {
    std::string out;
    for (Point x = 0; x < f.source().point_count(); ++x) {
        if (x) out += ',';
        out += std::to_string(f.apply(x));
    }
    return out;
}

std::string index_text(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out.empty() ? "-" : out;
}

std::string topology_tag(int index, const FiniteSpace& space) {
    return "topology " + std::to_string(index) + " (" + space_hash(space) + ")";
}

// All set partitions of the point set as cover families, blocks canonical.
std::vector<SetFamily> partitions_of(const FiniteSpace& space) {
    int n = space.point_count();
    std::vector<SetFamily> out;
    std::vector<int> assign(n, 0);
    auto emit = [&] {
        int blocks = *std::max_element(assign.begin(), assign.end()) + 1;
        std::vector<PointSet> sets(blocks);
        for (int x = 0; x < n; ++x) sets[assign[x]] = sets[assign[x]].with(x);
        std::sort(sets.begin(), sets.end(), canonical_less);
        out.emplace_back(space, std::move(sets), FamilyRole::cover);
    };
    // Restricted growth strings: assign[i] <= 1 + max of the prefix.
    auto rec = [&](auto&& self, int i, int mx) -> void {
        if (i == n) { emit(); return; }
        for (int b = 0; b <= mx + 1; ++b) {
            assign[i] = b;
            self(self, i + 1, std::max(mx, b));
        }
    };
    if (n == 1) emit();
    else rec(rec, 1, 0);
    return out;
}

// All covers of the space by at most four distinct nonempty subsets.
std::vector<SetFamily> small_covers(const FiniteSpace& space) {
    int n = space.point_count();
    std::vector<PointSet> subsets;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) subsets.emplace_back(m);
    std::sort(subsets.begin(), subsets.end(), canonical_less);

    std::vector<SetFamily> out;
    int count = static_cast<int>(subsets.size());
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from) -> void {
        if (!pick.empty()) {
            PointSet u;
            for (int i : pick) u = u | subsets[i];
            if (u == space.full()) {
                std::vector<PointSet> sets;
                for (int i : pick) sets.push_back(subsets[i]);
                out.emplace_back(space, std::move(sets), FamilyRole::cover);
            }
        }
        if (static_cast<int>(pick.size()) == 4) return;
        for (int i = from; i < count; ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Index chains of length 1..3 from `covers`, each refining its predecessor,
// that form developments of the space.
std::vector<std::vector<int>> development_chains(const FiniteSpace& space,
                                                 const std::vector<SetFamily>& covers) {
    int m = static_cast<int>(covers.size());
    std::vector<std::vector<int>> refines(m); // refines[i]: all j refining covers[i]
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (is_refinement(covers[j], covers[i])) refines[i].push_back(j);

    std::vector<std::vector<int>> chains;
    auto try_chain = [&](std::vector<int> idx) {
        std::vector<SetFamily> seq;
        for (int i : idx) seq.push_back(covers[i]);
        if (is_development(space, CoverSequence(space, seq))) chains.push_back(std::move(idx));
    };
    for (int a = 0; a < m; ++a) {
        try_chain({a});
        for (int b : refines[a]) {
            try_chain({a, b});
            for (int c : refines[b]) try_chain({a, b, c});
        }
    }
    return chains;
}

} // namespace

ReportDoc sweep_witness(int max_points, int workers) {
    std::vector<FiniteSpace> all = all_topologies_up_to(max_points);
    int count = static_cast<int>(all.size());

    // Pi-bases and verifying witnesses per topology, read by transfer shards
    // through the x side of each triple. Built up front, single-threaded.
    struct Candidates {
        std::vector<std::pair<SetFamily, std::vector<FnsWitness>>> bases;
    };
    std::vector<Candidates> cands;
    cands.reserve(count);
    for (const FiniteSpace& t : all) {
        Candidates c;
        std::vector<SetFamily> bases{minimal_pi_base(t), nonempty_opens_pi_base(t)};
        if (bases[1].members() == bases[0].members()) bases.pop_back();
        for (SetFamily& b : bases) {
            std::vector<FnsWitness> ws{trivial_fns(b)};
            if (b.size() <= 10)
                if (auto found = search_fns(b, 3))
                    if (!(found->witness.s == ws[0].s)) ws.push_back(std::move(found->witness));
            c.bases.emplace_back(std::move(b), std::move(ws));
        }
        cands.push_back(std::move(c));
    }

    std::vector<ShardResult> parts = run_indexed(count, workers, [&](int i) {
        ShardResult r;
        const FiniteSpace& x = all[i];
        std::string tag = topology_tag(i, x);

        SetFamily base = topology_as_base(x);
        ++r.checks;
        if (!verify_fns(trivial_fns(base)).ok)
            r.findings.push_back("trivial operator fails on " + tag);

        ++r.checks;
        try {
            StoneLift lift = stone_lift(x, trivial_fns(ro_family(x)));
            if (!verify_fns(lift.lifted).ok)
                r.findings.push_back("stone lift witness fails on " + tag);
            if (static_cast<int>(lift.atoms.size()) != lift.stone_space.point_count())
                r.findings.push_back("stone point count differs from atom count on " + tag);
        } catch (const std::logic_error& e) {
            r.findings.push_back("stone lift aborts on " + tag + ": " + e.what());
        }

        ++r.checks;
        try {
            std::vector<std::vector<int>> u(base.size()), l(base.size());
            for (int a = 0; a < base.size(); ++a) {
                l[a] = {a};
                for (int b = 0; b < base.size(); ++b)
                    if (base.member(a).subset_of(base.member(b))) u[a].push_back(b);
            }
            FnWitness w{base, std::move(u), std::move(l)};
            if (!verify_fn(w).ok)
                r.findings.push_back("superset witness fails on " + tag);
            else if (!verify_fn(project_fn_to_ro(x, w)).ok)
                r.findings.push_back("regular-open projection fails on " + tag);
        } catch (const std::exception& e) {
            r.findings.push_back("projection aborts on " + tag + ": " + e.what());
        }

        // Witness transfer across every irreducible pair out of this source.
        struct Irr {
            SpaceMap map;
            int target;
        };
        std::vector<Irr> irr;
        int ns = x.point_count();
        for (int t = 0; t < count; ++t) {
            const FiniteSpace& tgt = all[t];
            int nt = tgt.point_count();
            if (nt > ns) continue;
            std::vector<int> img(ns, 0);
            while (true) {
                bool onto = true;
                for (Point y = 0; y < nt && onto; ++y)
                    onto = std::find(img.begin(), img.end(), y) != img.end();
                if (onto) {
                    SpaceMap f(x, tgt, img);
                    if (map_report(f).irreducible) irr.push_back({std::move(f), t});
                }
                int k = 0;
                while (k < ns && ++img[k] == nt) img[k++] = 0;
                if (k == ns) break;
            }
        }
        for (const Irr& fi : irr) {
            for (const Irr& gi : irr) {
                AbsoluteTriple triple(x, fi.map, gi.map);
                for (const auto& [bx, witnesses] : cands[gi.target].bases) {
                    for (const FnsWitness& w : witnesses) {
                        ++r.extra;
                        try {
                            transfer_witness(triple, bx, w);
                        } catch (const std::logic_error& e) {
                            r.findings.push_back(
                                "transfer fails on z=" + std::to_string(i) +
                                " f=" + map_text(fi.map) + "->t" + std::to_string(fi.target) +
                                " g=" + map_text(gi.map) + "->t" + std::to_string(gi.target) +
                                ": " + e.what());
                        }
                    }
                }
            }
        }
        return r;
    });

    // Developable construction over generated refining developments of
    // discrete spaces. Deterministic chain generators, single-threaded.
    long long dev_checks = 0;
    std::vector<std::string> dev_findings;
    for (int n = 1; n <= 5; ++n) {
        FiniteSpace d = FiniteSpace::discrete(n);
        std::vector<SetFamily> covers = partitions_of(d);
        if (n <= 3)
            for (SetFamily& f : small_covers(d)) covers.push_back(std::move(f));
        for (const std::vector<int>& chain : development_chains(d, covers)) {
            ++dev_checks;
            std::vector<SetFamily> seq;
            for (int i : chain) seq.push_back(covers[i]);
            std::string tag = "discrete n=" + std::to_string(n) + " chain " + index_text(chain);
            try {
                DevelopableFn out = developable_fn(d, CoverSequence(d, seq));
                if (!verify_fn(out.witness).ok)
                    dev_findings.push_back("developable witness fails on " + tag);
            } catch (const std::exception& e) {
                dev_findings.push_back("developable aborts on " + tag + ": " + e.what());
            }
        }
    }

    ReportDoc doc;
    doc.kind = "witness-sweep";
    long long checks = 0, transfers = 0;
    for (const ShardResult& r : parts) {
        checks += r.checks;
        transfers += r.extra;
        for (const std::string& f : r.findings) doc.findings.push_back(f);
    }
    for (const std::string& f : dev_findings) doc.findings.push_back(f);
    doc.fields = {
        {"max-points", std::to_string(max_points)},
        {"topologies", std::to_string(count)},
        {"checks", std::to_string(checks)},
        {"developable-instances", std::to_string(dev_checks)},
        {"transfer-instances", std::to_string(transfers)},
        {"failures", std::to_string(doc.findings.size())},
    };
    return doc;
}

ReportDoc sweep_quotient(int max_points, int workers) {
    std::vector<FiniteSpace> all = all_topologies_up_to(max_points);
    int count = static_cast<int>(all.size());

    std::vector<ShardResult> parts = run_indexed(count, workers, [&](int i) {
        ShardResult r;
        const FiniteSpace& x = all[i];
        int m = x.open_count();
        std::string tag = topology_tag(i, x);

        std::vector<std::vector<int>> picks{{}};
        for (int a = 0; a < m; ++a) {
            picks.push_back({a});
            for (int b = a + 1; b < m; ++b) {
                picks.push_back({a, b});
                for (int c = b + 1; c < m; ++c) picks.push_back({a, b, c});
            }
        }

        for (const std::vector<int>& pick : picks) {
            ++r.checks;
            std::vector<PointSet> members;
            for (int a : pick) members.push_back(x.opens()[a]);
            SetFamily p(x, members, FamilyRole::plain);
            std::optional<QuotientResult> q;
            try {
                q.emplace(build_quotient(x, p));
            } catch (const std::logic_error& e) {
                r.findings.push_back("quotient identity fails on " + tag + " P=" +
                                     index_text(pick) + ": " + e.what());
                continue;
            }
            if (pick.empty()) continue;

            // Strict empty policy: intersections must be met by the family,
            // which pins the union down and keeps the consequences provable.
            WcrResult w = is_wcr(x, p, static_cast<int>(pick.size()), true);
            if (!w.ok) continue;
            ++r.extra;
            if (!family_role_check(q->base_image, FamilyRole::base))
                r.findings.push_back("wcr image is not a base on " + tag + " P=" +
                                     index_text(pick));
            SeparationReport sep = separation_report(q->quotient);
            if (!sep.t2)
                r.findings.push_back("wcr quotient is not T2 on " + tag + " P=" +
                                     index_text(pick));
            if (!sep.regular)
                r.findings.push_back("wcr quotient is not regular on " + tag + " P=" +
                                     index_text(pick));
        }
        return r;
    });

    ReportDoc doc;
    doc.kind = "quotient-sweep";
    long long families = 0, wcr_true = 0;
    for (const ShardResult& r : parts) {
        families += r.checks;
        wcr_true += r.extra;
        for (const std::string& f : r.findings) doc.findings.push_back(f);
    }
    doc.fields = {
        {"max-points", std::to_string(max_points)},
        {"topologies", std::to_string(count)},
        {"families", std::to_string(families)},
        {"wcr-true", std::to_string(wcr_true)},
        {"failures", std::to_string(doc.findings.size())},
    };
    return doc;
}

ReportDoc sweep_game(int max_points, int workers) {
    if (max_points < 1 || max_points > 3)
        throw input_error("game sweep scope is 1 to 3 points");
    std::vector<FiniteSpace> all = all_topologies_up_to(max_points);
    int count = static_cast<int>(all.size());

    std::vector<ShardResult> parts = run_indexed(count, workers, [&](int i) {
        ShardResult r;
        const FiniteSpace& x = all[i];
        SetFamily base = topology_as_base(x);
        SigmaStrategy sigma(base, trivial_fns(base));
        ++r.checks;
        WinResult win = exhaustive_win(x, base, sigma, base.size());
        r.max_rounds = win.max_rounds;
        if (!win.wins_all)
            r.findings.push_back("strategy loses on " + topology_tag(i, x) + " within " +
                                 std::to_string(base.size()) + " rounds");
        return r;
    });

    ReportDoc doc;
    doc.kind = "game-sweep";
    long long instances = 0;
    int max_horizon = 0;
    for (const ShardResult& r : parts) {
        instances += r.checks;
        max_horizon = std::max(max_horizon, r.max_rounds);
        for (const std::string& f : r.findings) doc.findings.push_back(f);
    }
    doc.fields = {
        {"max-points", std::to_string(max_points)},
        {"instances", std::to_string(instances)},
        {"max-horizon-needed", std::to_string(max_horizon)},
        {"failures", std::to_string(doc.findings.size())},
    };
    return doc;
}

namespace {

// Base-role subfamilies of the topology, as lists of open indices.
std::vector<std::vector<int>> all_bases(const FiniteSpace& space) {
    int m = space.open_count();
    std::vector<std::vector<int>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<PointSet> members;
        std::vector<int> idx;
        for (int i = 0; i < m; ++i)
            if ((mask >> i) & 1) {
                members.push_back(space.opens()[i]);
                idx.push_back(i);
            }
        SetFamily f(space, std::move(members), FamilyRole::plain);
        if (family_role_check(f, FamilyRole::base)) out.push_back(std::move(idx));
    }
    return out;
}

} // namespace

ReportDoc sweep_lemmas(int max_points, int workers) {
    std::vector<FiniteSpace> all = all_topologies_up_to(max_points);
    int count = static_cast<int>(all.size());

    // Instance list fixed before sharding: exhaustive small pairs in index
    // order, then a seeded sample of pairs touching 4-point spaces.
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::pair<int, int>> large;
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j)
            (all[i].point_count() < 4 && all[j].point_count() < 4 ? pairs : large)
                .emplace_back(i, j);
    long long sampled = 0;
    if (!large.empty()) {
        std::mt19937_64 rng(1);
        std::uniform_int_distribution<std::size_t> pick(0, large.size() - 1);
        sampled = std::min<long long>(250, static_cast<long long>(large.size()));
        for (long long i = 0; i < sampled; ++i) pairs.push_back(large[pick(rng)]);
    }

    int pair_count = static_cast<int>(pairs.size());
    std::vector<long long> kpv_counts(pair_count, 0);
    std::vector<char> expected_flags(pair_count, 0);
    std::vector<ShardResult> parts = run_indexed(pair_count, workers, [&](int pi) {
        auto [i, j] = pairs[pi];
        const FiniteSpace& src = all[i];
        const FiniteSpace& tgt = all[j];
        ShardResult r;

        LemmaReport lr = check_lemma_pair(src, tgt);
        r.checks += lr.instances_checked;
        expected_flags[pi] = lr.expected_failures_found ? 1 : 0;
        for (const LemmaFailure& f : lr.failures)
            r.findings.push_back("lemma " + f.lemma + " fails src=" + std::to_string(i) +
                                 " tgt=" + std::to_string(j) + " map=" + map_text(f.map) +
                                 " u=" + f.u.to_string() + " v=" + f.v.to_string());

        if (src.point_count() <= 3 && tgt.point_count() <= 3) {
            std::vector<std::vector<int>> tgt_bases = all_bases(tgt);
            std::vector<std::vector<int>> src_bases = all_bases(src);
            bool src_regular = separation_report(src).regular;
            int ns = src.point_count(), nt = tgt.point_count();
            std::vector<int> img(ns, 0);
            while (true) {
                SpaceMap f(src, tgt, img);
                MapReport mr = map_report(f);
                for (const std::vector<int>& bidx : tgt_bases) {
                    ++kpv_counts[pi];
                    std::vector<PointSet> members;
                    for (int b : bidx) members.push_back(tgt.opens()[b]);
                    SetFamily base(tgt, std::move(members), FamilyRole::base);
                    bool kpv = kpv_condition(f, base);
                    // The preimage condition decides d-openness for onto maps;
                    // without onto it is merely necessary. A map into a strictly
                    // larger space can satisfy it on every base vacuously.
                    bool bad = mr.onto ? kpv != mr.d_open : mr.d_open && !kpv;
                    if (bad)
                        r.findings.push_back("kpv mismatch src=" + std::to_string(i) +
                                             " tgt=" + std::to_string(j) + " map=" +
                                             map_text(f) + " base=" + index_text(bidx));
                }
                if (mr.closed_map && src_regular && !mr.open_map) {
                    for (const std::vector<int>& bidx : src_bases) {
                        bool condition = true;
                        for (int b : bidx) {
                            PointSet fu = f.image_of(src.opens()[b]);
                            if (!fu.subset_of(tgt.regular_part(fu))) {
                                condition = false;
                                break;
                            }
                        }
                        if (condition)
                            r.findings.push_back("closed map meets the base condition but "
                                                 "is not open src=" +
                                                 std::to_string(i) + " tgt=" +
                                                 std::to_string(j) + " map=" + map_text(f) +
                                                 " base=" + index_text(bidx));
                    }
                }
                int k = 0;
                while (k < ns && ++img[k] == nt) img[k++] = 0;
                if (k == ns) break;
            }
        }
        return r;
    });

    ReportDoc doc;
    doc.kind = "lemma-sweep";
    long long map_checks = 0, kpv_checks = 0;
    bool expected = false;
    for (int pi = 0; pi < pair_count; ++pi) {
        map_checks += parts[pi].checks;
        kpv_checks += kpv_counts[pi];
        expected |= expected_flags[pi] != 0;
        for (const std::string& f : parts[pi].findings) doc.findings.push_back(f);
    }
    doc.fields = {
        {"max-points", std::to_string(max_points)},
        {"pairs", std::to_string(pair_count)},
        {"sampled-pairs", std::to_string(sampled)},
        {"onto-map-instances", std::to_string(map_checks)},
        {"kpv-base-instances", std::to_string(kpv_checks)},
        {"expected-failures-found", expected ? "true" : "false"},
        {"failures", std::to_string(doc.findings.size())},
    };
    return doc;
}

} // namespace fintop
