#ifndef FINTOP_GENERATE_HPP
#define FINTOP_GENERATE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fintop/space.hpp"

namespace fintop {

enum class GenKind { discrete, indiscrete, sierpinski, alexandrov, random_space, cluster };

const char* gen_kind_name(GenKind kind);
std::optional<GenKind> gen_kind_from_name(const std::string& name);

struct GenSpec {
    GenKind kind = GenKind::discrete;
    int n = 1;
    double density = 0.5;                         // random_space: openness knob
    std::uint64_t seed = 0;                       // random_space
    std::vector<std::pair<int, int>> poset_edges; // alexandrov: a < b
    std::vector<PointSet> blocks;                 // cluster
};

// Deterministic for a given spec (and seed). alexandrov produces the up-set
// topology of the given strict order; random_space draws a random preorder
// whose edge probability is 1 - density, so density 1 is discrete and 0 is
// indiscrete; cluster makes exactly the unions of its blocks open.
FiniteSpace generate(const GenSpec& spec);

} // namespace fintop

#endif
