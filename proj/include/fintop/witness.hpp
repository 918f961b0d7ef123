#ifndef FINTOP_WITNESS_HPP
#define FINTOP_WITNESS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "fintop/family.hpp"

namespace fintop {

// Operator s assigning each family member a finite subfamily, by index.
// Image lists are sorted and duplicate-free.
struct FnsWitness {
    SetFamily family;
    std::vector<std::vector<int>> s;
};

struct WitnessVerdict {
    bool ok = true;
    // The violating pair of member indices when ok is false.
    std::optional<std::pair<int, int>> counterexample;
};

// s(U) = the entire family for every U. Always verifies.
FnsWitness trivial_fns(const SetFamily& family);

// ok iff every disjoint pair U,V of members admits disjoint W_U, W_V in
// s(U) ∩ s(V) with U ⊆ W_U and V ⊆ W_V (containments read non-strict).
WitnessVerdict verify_fns(const FnsWitness& w);

struct FnsSearchResult {
    int k_min = 0;
    FnsWitness witness;
};

// Smallest uniform bound k <= k_max admitting a witness with |s(U)| <= k for
// all U, with one witness in normal form. Backtracking over canonical order;
// minimality is recertified by exhausting bound k_min - 1. Absence is a value.
std::optional<FnsSearchResult> search_fns(const SetFamily& family, int k_max);

// The pair (u, l) of finite index sets per base member, with the side
// conditions: members of u(V) contain V, members of l(V) are contained in V.
struct FnWitness {
    SetFamily base;
    std::vector<std::vector<int>> u;
    std::vector<std::vector<int>> l;
};

// ok iff every pair V ⊆ W of base members has u(V) ∩ l(W) nonempty.
// Side-condition violations are structural input errors, not verdicts.
WitnessVerdict verify_fn(const FnWitness& w);

struct DevelopableFn {
    SetFamily base;            // union of the maximal subfamilies, deduplicated
    std::vector<int> min_level; // per base member, the least cover index holding it
    FnWitness witness;          // l(U) = {U}; u(U) per the level formula
};

// The FN witness built from a refining point-finite development:
// B = union of maximal subfamilies, l(U) = {U},
// u(U) = supersets of U appearing in a maximal subfamily at or before U's
// first level. Rejects inputs that fail a hypothesis, naming it.
DevelopableFn developable_fn(const FiniteSpace& space, const CoverSequence& seq);

struct StoneLift {
    std::vector<PointSet> atoms; // minimal nonempty regular opens, canonical order
    FiniteSpace stone_space;     // discrete space on the atoms
    SetFamily stone_base;        // U |-> set of atoms below U, in ro_family order
    FnsWitness lifted;           // same index structure as the input witness
};

// Stone space of the finite regular-open algebra, with the witness carried
// across the atom representation. Point count equals the atom count.
StoneLift stone_lift(const FiniteSpace& space, const FnsWitness& s_ro);

// u_reg/l_reg projection of a witness over the full topology onto the
// regular-open family: images pass through regular_part and are clipped to
// the FN side conditions.
FnWitness project_fn_to_ro(const FiniteSpace& space, const FnWitness& w);

} // namespace fintop

#endif
