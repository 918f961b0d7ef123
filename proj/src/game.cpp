#include "fintop/game.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace fintop {

namespace {

PointSet family_union(const SetFamily& f) { return f.union_of_members(); }

void check_challenge(const FiniteSpace& space, const SetFamily& c, int round) {
    if (!(c.space() == space))
        throw game_error("round " + std::to_string(round) +
                         ": challenge family lives over a different space");
    if (c.size() == 0)
        throw game_error("round " + std::to_string(round) + ": empty challenge family");
    for (PointSet m : c.members())
        if (m.empty() || !space.is_open(m))
            throw game_error("round " + std::to_string(round) + ": challenge member " +
                             m.to_string() + " is not a nonempty open");
}

void check_reply(const FiniteSpace& space, const SetFamily& c, const SetFamily& d,
                 int round) {
    if (!(d.space() == space))
        throw game_error("round " + std::to_string(round) +
                         ": reply family lives over a different space");
    for (PointSet m : d.members())
        if (m.empty() || !space.is_open(m))
            throw game_error("round " + std::to_string(round) + ": reply member " +
                             m.to_string() + " is not a nonempty open");
    for (PointSet u : c.members()) {
        bool answered = false;
        for (PointSet v : d.members())
            if (v.subset_of(u)) { answered = true; break; }
        if (!answered)
            throw game_error("round " + std::to_string(round) + ": challenge " +
                             u.to_string() + " has no reply member inside it");
    }
}

bool dense_in(const FiniteSpace& space, PointSet s) {
    return space.closure(s) == space.full();
}

} // namespace

bool round_legal(const Round& r) {
    if (!(r.c.space() == r.d.space())) return false;
    const FiniteSpace& space = r.c.space();
    for (PointSet m : r.c.members())
        if (m.empty() || !space.is_open(m)) return false;
    for (PointSet m : r.d.members())
        if (m.empty() || !space.is_open(m)) return false;
    for (PointSet u : r.c.members()) {
        bool answered = false;
        for (PointSet v : r.d.members())
            if (v.subset_of(u)) { answered = true; break; }
        if (!answered) return false;
    }
    return true;
}

PointSet covered_points(const GameTranscript& t) {
    PointSet covered;
    for (const Round& r : t.rounds) covered = covered | family_union(r.d);
    return covered;
}

SigmaStrategy::SigmaStrategy(SetFamily base, FnsWitness witness)
    : base_(std::move(base)), witness_(std::move(witness)) {
    if (base_.role() != FamilyRole::base && base_.role() != FamilyRole::pi_base)
        throw input_error("sigma strategy needs a base or pi-base family");
    if (!(witness_.family == base_))
        throw input_error("sigma strategy witness is not over the given base");
    if (!verify_fns(witness_).ok)
        throw input_error("sigma strategy witness fails verification");
    if (!base_.canonical_first([](PointSet m) { return !m.empty(); }))
        throw input_error("sigma strategy base has no nonempty member");
}

SetFamily SigmaStrategy::challenge_for(PointSet seen_members) const {
    // Distinct intersections over subfamilies of A; the empty subfamily
    // contributes the full space.
    std::set<int> a;
    for (Point w : seen_members.points())
        for (int i : witness_.s[w]) a.insert(i);

    std::set<std::uint64_t> values;
    values.insert(base_.space().full().bits());
    std::vector<PointSet> frontier{base_.space().full()};
    while (!frontier.empty()) {
        std::vector<PointSet> next;
        for (PointSet v : frontier) {
            for (int i : a) {
                PointSet w = v & base_.member(i);
                if (values.insert(w.bits()).second) next.push_back(w);
            }
        }
        frontier = std::move(next);
    }

    std::vector<PointSet> picks;
    for (std::uint64_t bits : values) {
        PointSet target(bits);
        if (target.empty()) continue;
        auto idx = base_.canonical_first(
            [&](PointSet m) { return !m.empty() && m.subset_of(target); });
        if (!idx)
            throw std::logic_error("no base member inside nonempty open " +
                                   target.to_string());
        PointSet v = base_.member(*idx);
        if (std::find(picks.begin(), picks.end(), v) == picks.end()) picks.push_back(v);
    }
    std::sort(picks.begin(), picks.end(), canonical_less);
    return SetFamily(base_.space(), std::move(picks), FamilyRole::plain);
}

SetFamily SigmaStrategy::opening() const { return challenge_for(PointSet()); }

SetFamily SigmaStrategy::next(const std::vector<Round>& history) const {
    PointSet seen;
    for (const Round& r : history) {
        for (PointSet v : r.d.members()) {
            auto idx = base_.index_of(v);
            if (!idx)
                throw game_error("sigma strategy saw reply " + v.to_string() +
                                 " outside its base");
            seen = seen.with(*idx);
        }
    }
    return challenge_for(seen);
}

ConstantStrategy::ConstantStrategy(SetFamily challenge) : challenge_(std::move(challenge)) {
    if (challenge_.size() == 0)
        throw input_error("constant strategy needs a nonempty challenge family");
    for (PointSet m : challenge_.members())
        if (m.empty() || !challenge_.space().is_open(m))
            throw input_error("constant strategy challenge member " + m.to_string() +
                              " is not a nonempty open");
}

const char* adversary_kind_name(AdversaryKind kind) {
    switch (kind) {
        case AdversaryKind::first_fit: return "first_fit";
        case AdversaryKind::max_avoider: return "max_avoider";
        case AdversaryKind::repeater: return "repeater";
        case AdversaryKind::scripted: return "scripted";
    }
    return "?";
}

std::optional<AdversaryKind> adversary_kind_from_name(const std::string& name) {
    for (AdversaryKind k : {AdversaryKind::first_fit, AdversaryKind::max_avoider,
                            AdversaryKind::repeater, AdversaryKind::scripted})
        if (name == adversary_kind_name(k)) return k;
    return std::nullopt;
}

namespace {

class BaseAdversary : public PlayerTwoStrategy {
public:
    explicit BaseAdversary(SetFamily base) : base_(std::move(base)) {}

protected:
    // Canonically first nonempty base member inside u.
    PointSet first_fit_pick(PointSet u) const {
        auto idx = base_.canonical_first(
            [&](PointSet m) { return !m.empty() && m.subset_of(u); });
        if (!idx)
            throw game_error("no legal reply from the base for challenge " +
                             u.to_string());
        return base_.member(*idx);
    }

    SetFamily assemble(std::vector<PointSet> picks) const {
        std::sort(picks.begin(), picks.end(), canonical_less);
        picks.erase(std::unique(picks.begin(), picks.end()), picks.end());
        return SetFamily(base_.space(), std::move(picks), FamilyRole::plain);
    }

    SetFamily base_;
};

class FirstFit : public BaseAdversary {
public:
    using BaseAdversary::BaseAdversary;
    SetFamily reply(const std::vector<Round>&, const SetFamily& c) const override {
        std::vector<PointSet> picks;
        for (PointSet u : c.members()) picks.push_back(first_fit_pick(u));
        return assemble(std::move(picks));
    }
};

class MaxAvoider : public BaseAdversary {
public:
    using BaseAdversary::BaseAdversary;
    SetFamily reply(const std::vector<Round>& history, const SetFamily& c) const override {
        PointSet covered;
        for (const Round& r : history) covered = covered | family_union(r.d);
        std::vector<PointSet> picks;
        for (PointSet u : c.members()) {
            std::optional<PointSet> best;
            for (PointSet m : base_.members()) {
                if (m.empty() || !m.subset_of(u)) continue;
                if (!best) { best = m; continue; }
                int novel_m = m.minus(covered).size();
                int novel_b = best->minus(covered).size();
                if (novel_m < novel_b ||
                    (novel_m == novel_b && canonical_less(m, *best)))
                    best = m;
            }
            if (!best)
                throw game_error("no legal reply from the base for challenge " +
                                 u.to_string());
            picks.push_back(*best);
            covered = covered | *best;
        }
        return assemble(std::move(picks));
    }
};

class Repeater : public BaseAdversary {
public:
    using BaseAdversary::BaseAdversary;
    SetFamily reply(const std::vector<Round>& history, const SetFamily& c) const override {
        if (!history.empty()) {
            const SetFamily& prev = history.back().d;
            bool legal = true;
            for (PointSet u : c.members()) {
                bool answered = false;
                for (PointSet v : prev.members())
                    if (v.subset_of(u)) { answered = true; break; }
                if (!answered) { legal = false; break; }
            }
            if (legal) return prev;
        }
        std::vector<PointSet> picks;
        for (PointSet u : c.members()) picks.push_back(first_fit_pick(u));
        return assemble(std::move(picks));
    }
};

class Scripted : public PlayerTwoStrategy {
public:
    explicit Scripted(std::vector<SetFamily> script) : script_(std::move(script)) {}
    SetFamily reply(const std::vector<Round>& history, const SetFamily&) const override {
        std::size_t n = history.size();
        if (n >= script_.size())
            throw game_error("script exhausted at round " + std::to_string(n));
        return script_[n];
    }

private:
    std::vector<SetFamily> script_;
};

} // namespace

std::unique_ptr<PlayerTwoStrategy> make_adversary(AdversaryKind kind, SetFamily base,
                                                  std::vector<SetFamily> script) {
    switch (kind) {
        case AdversaryKind::first_fit: return std::make_unique<FirstFit>(std::move(base));
        case AdversaryKind::max_avoider:
            return std::make_unique<MaxAvoider>(std::move(base));
        case AdversaryKind::repeater: return std::make_unique<Repeater>(std::move(base));
        case AdversaryKind::scripted: {
            for (const SetFamily& f : script)
                if (!(f.space() == base.space()))
                    throw input_error("scripted reply lives over a different space");
            return std::make_unique<Scripted>(std::move(script));
        }
    }
    throw input_error("unknown adversary kind");
}

GameTranscript play(const FiniteSpace& space, const SetFamily& base,
                    const PlayerOneStrategy& one, const PlayerTwoStrategy& two,
                    int horizon) {
    if (horizon < 1) throw input_error("horizon must be at least 1");
    if (!(base.space() == space) || !(one.space() == space))
        throw input_error("play: space mismatch");

    GameTranscript t{space, {}, false};
    PointSet covered;
    for (int n = 0; n < horizon; ++n) {
        SetFamily c = (n == 0) ? one.opening() : one.next(t.rounds);
        check_challenge(space, c, n);
        SetFamily d = two.reply(t.rounds, c);
        check_reply(space, c, d, n);
        covered = covered | family_union(d);
        t.rounds.push_back(Round{std::move(c), std::move(d)});
        if (dense_in(space, covered)) { t.dense = true; break; }
    }
    return t;
}

namespace {

struct OracleState {
    const FiniteSpace& space;
    const SetFamily& base;
    const PlayerOneStrategy& one;
    int horizon;
    long long budget;
    long long nodes = 0;
    bool wins_all = true;
    int max_rounds = 0;
    std::optional<GameTranscript> worst_line;
    std::map<std::pair<int, std::uint64_t>, bool> memo; // (depth, seen) -> explored

    void spend() {
        if (++nodes > budget)
            throw resource_limit_error("game oracle exceeded its node budget of " +
                                       std::to_string(budget));
    }
};

// Distinct reply sets: one base member per challenge member, deduplicated.
std::vector<std::vector<int>> reply_choices(OracleState& st, const SetFamily& c) {
    std::vector<std::vector<int>> per_challenge;
    for (PointSet u : c.members()) {
        std::vector<int> options;
        std::vector<int> order(st.base.size());
        for (int i = 0; i < st.base.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            return canonical_less(st.base.member(x), st.base.member(y));
        });
        for (int i : order) {
            PointSet m = st.base.member(i);
            if (!m.empty() && m.subset_of(u)) options.push_back(i);
        }
        if (options.empty())
            throw game_error("challenge " + u.to_string() +
                             " has no reply member in the base");
        per_challenge.push_back(std::move(options));
    }

    std::vector<std::vector<int>> out;
    std::set<std::uint64_t> seen_sets;
    std::vector<std::size_t> cursor(per_challenge.size(), 0);
    while (true) {
        st.spend();
        std::uint64_t bits = 0;
        for (std::size_t i = 0; i < cursor.size(); ++i)
            bits |= std::uint64_t{1} << per_challenge[i][cursor[i]];
        if (seen_sets.insert(bits).second) {
            std::vector<int> members;
            for (int i = 0; i < st.base.size(); ++i)
                if ((bits >> i) & 1) members.push_back(i);
            out.push_back(std::move(members));
        }
        std::size_t k = 0;
        while (k < cursor.size() && ++cursor[k] == per_challenge[k].size()) {
            cursor[k] = 0;
            ++k;
        }
        if (k == cursor.size()) break;
    }
    return out;
}

// Returns false as soon as one non-dense line exists; st.worst_line then
// holds it. Tracks the longest dense line otherwise.
bool explore(OracleState& st, std::vector<Round>& line, PointSet covered,
             std::uint64_t seen_bits, int depth) {
    st.spend();
    if (dense_in(st.space, covered)) {
        if (depth > st.max_rounds || !st.worst_line) {
            st.max_rounds = depth;
            st.worst_line = GameTranscript{st.space, line, true};
        }
        return true;
    }
    if (depth == st.horizon) {
        st.wins_all = false;
        st.worst_line = GameTranscript{st.space, line, false};
        return false;
    }

    bool memoizable = st.one.union_determined();
    std::pair<int, std::uint64_t> key{depth, seen_bits};
    if (memoizable) {
        auto it = st.memo.find(key);
        if (it != st.memo.end()) return true; // only winning states are cached
    }

    SetFamily c = (depth == 0) ? st.one.opening() : st.one.next(line);
    check_challenge(st.space, c, depth);
    for (const std::vector<int>& members : reply_choices(st, c)) {
        std::vector<PointSet> sets;
        std::uint64_t next_seen = seen_bits;
        PointSet next_covered = covered;
        for (int i : members) {
            sets.push_back(st.base.member(i));
            next_seen |= std::uint64_t{1} << i;
            next_covered = next_covered | st.base.member(i);
        }
        SetFamily d(st.space, std::move(sets), FamilyRole::plain);
        line.push_back(Round{c, std::move(d)});
        bool ok = explore(st, line, next_covered, next_seen, depth + 1);
        line.pop_back();
        if (!ok) return false;
    }
    if (memoizable) st.memo.emplace(key, true);
    return true;
}

} // namespace

WinResult exhaustive_win(const FiniteSpace& space, const SetFamily& base,
                         const PlayerOneStrategy& one, int horizon,
                         long long node_budget) {
    if (horizon < 1) throw input_error("horizon must be at least 1");
    if (node_budget < 1) throw input_error("node budget must be positive");
    if (!(base.space() == space) || !(one.space() == space))
        throw input_error("oracle: space mismatch");
    if (base.size() > 64)
        throw resource_limit_error("oracle supports at most 64 base members");

    OracleState st{space, base, one, horizon, node_budget, 0, true, 0, {}, {}};
    std::vector<Round> line;
    explore(st, line, PointSet(), 0, 0);
    return WinResult{st.wins_all, std::move(st.worst_line), st.max_rounds, st.nodes};
}

} // namespace fintop
