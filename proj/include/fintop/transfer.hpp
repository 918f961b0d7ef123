#ifndef FINTOP_TRANSFER_HPP
#define FINTOP_TRANSFER_HPP

#include <string>
#include <vector>

#include "fintop/spacemap.hpp"
#include "fintop/witness.hpp"

namespace fintop {

// Two irreducible onto maps out of a common source. Both reports are
// recomputed here; a triple that fails them cannot be built.
struct AbsoluteTriple {
    AbsoluteTriple(FiniteSpace z, SpaceMap f, SpaceMap g);

    FiniteSpace z;
    SpaceMap f; // z -> y
    SpaceMap g; // z -> x
};

// Preimages of a pi-base along an irreducible map form a pi-base of the
// source. Rejects f with a message naming the first failing property.
SetFamily pullback_pi_base(const SpaceMap& f, const SetFamily& base_x);

struct TransferResult {
    SetFamily family_y;
    FnsWitness s_z;
    std::vector<int> image_index; // base_x member i maps to family_y member image_index[i]
};

// Pushes a separation witness on a pi-base of x through the triple onto a
// pi-base of y via V -> small_image(f, preimage(g, V)). Collisions resolve
// to the canonically first preimage. The pi-base role of the output and the
// verification of s_z are theorems at this scale; their failure aborts.
TransferResult transfer_witness(const AbsoluteTriple& t, const SetFamily& base_x,
                                const FnsWitness& s);

struct LemmaFailure {
    std::string lemma; // "frd", "f2" or "f1"
    SpaceMap map;
    PointSet u, v;
};

struct LemmaReport {
    long long instances_checked = 0; // (source, target, onto map) triples
    std::vector<LemmaFailure> failures;
    bool expected_failures_found = false; // a non-irreducible f1 back-direction break
};

// Checks all onto maps from src to tgt: the complement form of the small
// image agrees with the fiber form; small images sit inside images; and for
// irreducible maps disjointness of opens matches disjointness of their
// small images. Also notes any non-irreducible map breaking the latter
// equivalence.
LemmaReport check_lemma_pair(const FiniteSpace& src, const FiniteSpace& tgt);

// check_lemma_pair over all topology pairs up to max_points points. Pairs
// where either side has 4 points are sampled with the given budget and
// seed; smaller sizes run in full.
LemmaReport lemma_harness(int max_points, long long sample_pairs = 250,
                          std::uint64_t seed = 1);

} // namespace fintop

#endif
