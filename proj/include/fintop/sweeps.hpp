#ifndef FINTOP_SWEEPS_HPP
#define FINTOP_SWEEPS_HPP

#include "fintop/docio.hpp"

namespace fintop {

// Exhaustive finite-scale suites behind the sweep CLI. Results are merged
// in a canonical order, so the report bytes never depend on the worker
// count. Findings are empty when everything holds.

// Trivial-witness soundness, Stone lifts, regular-open projections, the
// developable construction over generated developments, and witness
// transfer across every constructible irreducible pair. max_points 1..4.
ReportDoc sweep_witness(int max_points, int workers = 1);

// Quotient identities for every open family up to size 3 plus the
// base/T2/regular consequences of weak complete regularity. max_points 1..4.
ReportDoc sweep_quotient(int max_points, int workers = 1);

// The strategy from a trivial witness wins the oracle at horizon |base|
// on every topology; also reports the largest horizon any instance needed.
// max_points 1..3.
ReportDoc sweep_game(int max_points, int workers = 1);

// Small-image lemmas over all onto maps, the kpv/d-open equivalence over
// all maps and target bases, and the closed-map openness lemma. Pairs
// involving 4-point spaces are sampled. max_points 1..4.
ReportDoc sweep_lemmas(int max_points, int workers = 1);

} // namespace fintop

#endif
