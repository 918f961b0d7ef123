#ifndef FINTOP_GAME_HPP
#define FINTOP_GAME_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fintop/family.hpp"
#include "fintop/witness.hpp"

namespace fintop {

// One round of the open-open game: player I's challenge family c, player
// II's reply d. Legal when every challenge member contains a reply member.
struct Round {
    SetFamily c;
    SetFamily d;
};

struct GameTranscript {
    FiniteSpace space;
    std::vector<Round> rounds;
    bool dense = false; // closure of the union of all reply members is everything
};

bool round_legal(const Round& r);
PointSet covered_points(const GameTranscript& t);

// Player I: an opening challenge plus a deterministic continuation from the
// history of completed rounds.
class PlayerOneStrategy {
public:
    virtual ~PlayerOneStrategy() = default;
    virtual const FiniteSpace& space() const = 0;
    virtual SetFamily opening() const = 0;
    virtual SetFamily next(const std::vector<Round>& history) const = 0;
    // True when next() depends on the history only through the set of
    // distinct reply members seen so far. Enables memoization in the oracle.
    virtual bool union_determined() const { return false; }
};

// The strategy induced by a verified separation witness over a pi-base (or
// base): after each round, collect A = union of s(W) over all reply members
// W seen so far; the next challenge is one canonically-first nonempty base
// member inside each distinct nonempty intersection of a subfamily of A
// (the empty subfamily contributes the whole space).
class SigmaStrategy : public PlayerOneStrategy {
public:
    SigmaStrategy(SetFamily base, FnsWitness witness);

    const FiniteSpace& space() const override { return base_.space(); }
    SetFamily opening() const override;
    SetFamily next(const std::vector<Round>& history) const override;
    bool union_determined() const override { return true; }

    const SetFamily& base() const { return base_; }

private:
    SetFamily challenge_for(PointSet seen_members) const;

    SetFamily base_;
    FnsWitness witness_;
};

// Plays the same challenge family every round.
class ConstantStrategy : public PlayerOneStrategy {
public:
    explicit ConstantStrategy(SetFamily challenge);

    const FiniteSpace& space() const override { return challenge_.space(); }
    SetFamily opening() const override { return challenge_; }
    SetFamily next(const std::vector<Round>&) const override { return challenge_; }
    bool union_determined() const override { return true; }

private:
    SetFamily challenge_;
};

class PlayerTwoStrategy {
public:
    virtual ~PlayerTwoStrategy() = default;
    virtual SetFamily reply(const std::vector<Round>& history, const SetFamily& c) const = 0;
};

enum class AdversaryKind { first_fit, max_avoider, repeater, scripted };

const char* adversary_kind_name(AdversaryKind kind);
std::optional<AdversaryKind> adversary_kind_from_name(const std::string& name);

// first_fit answers each challenge with the canonically first base member
// inside it; max_avoider picks the legal member adding the fewest new
// points; repeater repeats its previous reply when still legal, falling
// back to first_fit; scripted replays the given list and rejects illegal
// or exhausted scripts.
std::unique_ptr<PlayerTwoStrategy> make_adversary(AdversaryKind kind, SetFamily base,
                                                  std::vector<SetFamily> script = {});

// Alternates the strategies for at most `horizon` rounds, stopping early
// once the replies are dense. Validates every move.
GameTranscript play(const FiniteSpace& space, const SetFamily& base,
                    const PlayerOneStrategy& one, const PlayerTwoStrategy& two,
                    int horizon);

struct WinResult {
    bool wins_all = false;
    std::optional<GameTranscript> worst_line; // non-dense line, else a longest one
    int max_rounds = 0;       // most rounds any line needed to reach density
    long long nodes_visited = 0;
};

// Enumerates every legal reply sequence with replies drawn from base
// members (per challenge member, each base member inside it) to depth
// `horizon`. wins_all iff all lines reach density. Aborts with a resource
// error when the tree exceeds node_budget.
WinResult exhaustive_win(const FiniteSpace& space, const SetFamily& base,
                         const PlayerOneStrategy& one, int horizon,
                         long long node_budget = 2'000'000);

} // namespace fintop

#endif
