// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// argv[1] is the path to the command line binary.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "fintop/docio.hpp"
#include "fintop/enumerate.hpp"
#include "fintop/quotient.hpp"
#include "fintop/sweeps.hpp"
#include "fintop/transfer.hpp"
#include "fintop/witness.hpp"

namespace fs = std::filesystem;
using namespace fintop;

namespace {

std::string g_cli;
int g_failures = 0;

void run_criterion(int idx, const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = e.what();
    }
    std::printf("%s %2d %s\n", ok ? "PASS" : "FAIL", idx, name.c_str());
    if (!ok) {
        ++g_failures;
        if (!note.empty()) std::fprintf(stderr, "  criterion %d threw: %s\n", idx, note.c_str());
    }
    std::fflush(stdout);
}

int run_cli(const std::string& args) {
    std::string cmd = g_cli + " " + args + " >/dev/null";
    int rc = std::system(cmd.c_str());
    return rc;
}

std::string field(const ReportDoc& r, const std::string& key) {
    for (const auto& [k, v] : r.fields)
        if (k == key) return v;
    return "";
}

bool independently_closed(const FiniteSpace& sp) {
    std::vector<std::uint64_t> bits;
    for (PointSet o : sp.opens()) bits.push_back(o.bits());
    auto member = [&](std::uint64_t b) {
        return std::find(bits.begin(), bits.end(), b) != bits.end();
    };
    if (!member(0) || !member(sp.full().bits())) return false;
    for (std::uint64_t a : bits)
        for (std::uint64_t b : bits)
            if (!member(a | b) || !member(a & b)) return false;
    return true;
}

// 1. The enumerator behind `enumerate --points n` produces exactly the known
//    topology counts, each file independently recheckable, within a minute.
bool topology_counts_via_cli() {
    const int expected[] = {0, 1, 4, 29, 355};
    auto start = std::chrono::steady_clock::now();
    for (int n = 1; n <= 4; ++n) {
        fs::path dir = fs::temp_directory_path() / ("fintop-accept-enum-" + std::to_string(n));
        fs::remove_all(dir);
        fs::create_directories(dir);
        if (run_cli("enumerate --points " + std::to_string(n) + " -o " + dir.string()) != 0)
            return false;
        std::set<std::string> hashes;
        int count = 0;
        for (const auto& entry : fs::directory_iterator(dir)) {
            if (entry.path().extension() != ".doc") continue;
            ++count;
            SpaceDoc doc = load_space(read_file(entry.path().string()));
            if (doc.space.point_count() != n) return false;
            if (!independently_closed(doc.space)) return false;
            if (!hashes.insert(space_hash(doc.space)).second) return false;
        }
        if (count != expected[n]) return false;
    }
    auto elapsed = std::chrono::steady_clock::now() - start;
    return elapsed < std::chrono::seconds(60);
}

// 2. The full-image witness verifies over the whole topology of every
//    four point space.
bool trivial_witness_sound_everywhere() {
    std::vector<FiniteSpace> all = enumerate_topologies(4);
    if (all.size() != 355) return false;
    for (const FiniteSpace& sp : all)
        if (!verify_fns(trivial_fns(topology_as_base(sp))).ok) return false;
    return true;
}

// 3. The searcher finds the known minimal uniform bounds, and the bound
//    below each provably fails.
bool minimal_bounds_on_worked_bases() {
    FiniteSpace d2 = FiniteSpace::discrete(2);
    SetFamily b2(d2, {PointSet::singleton(0), PointSet::singleton(1), d2.full()},
                 FamilyRole::base);
    auto r2 = search_fns(b2, 3);
    if (!r2 || r2->k_min != 2 || !verify_fns(r2->witness).ok) return false;
    if (search_fns(b2, 1)) return false;

    FiniteSpace d3 = FiniteSpace::discrete(3);
    SetFamily b3(d3, {PointSet::singleton(0), PointSet::singleton(1),
                      PointSet::singleton(2), d3.full()},
                 FamilyRole::base);
    auto r3 = search_fns(b3, 4);
    if (!r3 || r3->k_min != 3 || !verify_fns(r3->witness).ok) return false;
    if (search_fns(b3, 2)) return false;
    return true;
}

// 4. Identity up/down operators verify on the singleton base of every
//    discrete space with at most six points.
bool identity_interleaving_on_singletons() {
    for (int n = 1; n <= 6; ++n) {
        FiniteSpace d = FiniteSpace::discrete(n);
        std::vector<PointSet> singles;
        std::vector<std::vector<int>> id(n);
        for (int i = 0; i < n; ++i) {
            singles.push_back(PointSet::singleton(i));
            id[i] = {i};
        }
        SetFamily base(d, singles, FamilyRole::base);
        if (!verify_fn(FnWitness{base, id, id}).ok) return false;
    }
    return true;
}

ReportDoc g_witness_report;

// 5. Every generated refining development on discrete spaces up to five
//    points yields a verified witness (part of the witness sweep).
bool developments_all_verified() {
    g_witness_report = sweep_witness(4);
    if (!g_witness_report.findings.empty()) return false;
    return std::stol(field(g_witness_report, "developable-instances")) > 0;
}

// 6. Quotient identities for every family of up to three opens at four
//    points, plus base/Hausdorff/regular consequences of weak complete
//    regularity; all inside ten minutes.
bool quotient_suite_clean() {
    auto start = std::chrono::steady_clock::now();
    ReportDoc r = sweep_quotient(4);
    auto elapsed = std::chrono::steady_clock::now() - start;
    if (!r.findings.empty()) return false;
    if (std::stol(field(r, "families")) <= 0) return false;
    if (std::stol(field(r, "wcr-true")) <= 0) return false;
    return elapsed < std::chrono::minutes(10);
}

// 7. Small image lemmas hold for every onto map at three points, and the
//    expected reducible counterexample to the disjointness equivalence shows up.
bool small_image_lemmas_exhaustive() {
    LemmaReport r = lemma_harness(3);
    return r.failures.empty() && r.expected_failures_found && r.instances_checked > 0;
}

// 8. Witness transfer postconditions hold on every constructible triple at
//    four points (checked in the witness sweep's transfer section).
bool transfer_postconditions_hold() {
    if (g_witness_report.fields.empty()) g_witness_report = sweep_witness(4);
    if (!g_witness_report.findings.empty()) return false;
    return std::stol(field(g_witness_report, "transfer-instances")) > 0;
}

// 9. The witness strategy wins the exhaustive oracle at horizon |base| on
//    every three point topology; the measured worst horizon is pinned.
bool game_sweep_with_frozen_horizon() {
    ReportDoc r = sweep_game(3);
    if (!r.findings.empty()) return false;
    return field(r, "max-horizon-needed") == "2";
}

// 10. Atom lifts verify on every four point topology, and the atom count
//     matches the lifted space's point count.
bool atom_lifts_verify() {
    for (int n = 1; n <= 4; ++n) {
        for (const FiniteSpace& sp : enumerate_topologies(n)) {
            StoneLift lift = stone_lift(sp, trivial_fns(ro_family(sp)));
            if (static_cast<int>(lift.atoms.size()) != lift.stone_space.point_count())
                return false;
            if (!verify_fns(lift.lifted).ok) return false;
        }
    }
    return true;
}

// 11. The preimage separation criterion decides d-openness for onto maps on
//     every target base at three points, stays necessary for all maps, and
//     closed maps meeting the base condition on regular sources are open.
bool preimage_and_closed_map_checks() {
    ReportDoc r = sweep_lemmas(3);
    if (!r.findings.empty()) return false;
    if (std::stol(field(r, "kpv-base-instances")) <= 0) return false;
    return field(r, "expected-failures-found") == "true";
}

// 12. Sweep reports never depend on the worker count and replay identically.
bool reports_byte_identical() {
    struct Suite {
        const char* name;
        std::function<ReportDoc(int, int)> run;
        int alt_workers;
    };
    std::vector<Suite> suites = {
        {"witness", [](int m, int w) { return sweep_witness(m, w); }, 7},
        {"quotient", [](int m, int w) { return sweep_quotient(m, w); }, 7},
        {"game", [](int m, int w) { return sweep_game(m, w); }, 5},
        {"lemmas", [](int m, int w) { return sweep_lemmas(m, w); }, 7},
    };
    for (const Suite& s : suites) {
        std::string one = save_report(s.run(3, 1));
        std::string many = save_report(s.run(3, s.alt_workers));
        std::string again = save_report(s.run(3, 1));
        if (one != many || one != again) {
            std::fprintf(stderr, "  %s sweep differs across runs\n", s.name);
            return false;
        }
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <path-to-cli>\n");
        return 2;
    }
    g_cli = argv[1];

    run_criterion(1, "topology enumeration counts from the command line",
                  topology_counts_via_cli);
    run_criterion(2, "trivial witnesses verify on every four point topology",
                  trivial_witness_sound_everywhere);
    run_criterion(3, "minimal witness bounds on the worked bases",
                  minimal_bounds_on_worked_bases);
    run_criterion(4, "identity interleaving verifies on singleton bases up to six points",
                  identity_interleaving_on_singletons);
    run_criterion(5, "generated developments all yield verified witnesses",
                  developments_all_verified);
    run_criterion(6, "quotient identities and regularity consequences at four points",
                  quotient_suite_clean);
    run_criterion(7, "small image lemmas exhaustively at three points",
                  small_image_lemmas_exhaustive);
    run_criterion(8, "witness transfer across every constructible triple at four points",
                  transfer_postconditions_hold);
    run_criterion(9, "game strategy wins everywhere at three points within the frozen horizon",
                  game_sweep_with_frozen_horizon);
    run_criterion(10, "atom lifts verify on every four point topology",
                  atom_lifts_verify);
    run_criterion(11, "preimage criterion and closed map openness checks at three points",
                  preimage_and_closed_map_checks);
    run_criterion(12, "sweep reports are byte identical across worker counts",
                  reports_byte_identical);

    return g_failures == 0 ? 0 : 1;
}
