#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "fintop/enumerate.hpp"
#include "fintop/witness.hpp"

#include "helpers.hpp"

using namespace fintop;
using namespace fintop::testutil;

namespace {

SetFamily d2_three_member_base() {
    return SetFamily(FiniteSpace::discrete(2), {set({0}), set({1}), set({0, 1})},
                     FamilyRole::base);
}

// u(V) = all supersets of V among the members, l(V) = {V}.
FnWitness fn_with_all_supersets(const SetFamily& base) {
    std::vector<std::vector<int>> u(base.size()), l(base.size());
    for (int i = 0; i < base.size(); ++i) {
        l[i] = {i};
        for (int j = 0; j < base.size(); ++j)
            if (base.member(i).subset_of(base.member(j))) u[i].push_back(j);
    }
    return FnWitness{base, std::move(u), std::move(l)};
}

} // namespace

TEST_CASE("the full-image witness always verifies") {
    SetFamily base = d2_three_member_base();
    FnsWitness w = trivial_fns(base);
    for (const auto& img : w.s) CHECK(img == std::vector<int>{0, 1, 2});
    CHECK(verify_fns(w).ok);

    SetFamily none(FiniteSpace::discrete(2), {}, FamilyRole::plain);
    FnsWitness empty = trivial_fns(none);
    CHECK(empty.s.empty());
    CHECK(verify_fns(empty).ok);

    // no disjoint pair: the all-empty operator verifies too, while the
    // full-image construction still hands back everything
    SetFamily sp = nonempty_opens_pi_base(sierpinski());
    FnsWitness bare{sp, std::vector<std::vector<int>>(sp.size())};
    CHECK(verify_fns(bare).ok);
    CHECK(trivial_fns(sp).s[0] == std::vector<int>{0, 1});

    for (int n = 1; n <= 3; ++n)
        for (const FiniteSpace& space : enumerate_topologies(n))
            CHECK(verify_fns(trivial_fns(topology_as_base(space))).ok);
}

TEST_CASE("separation verification reports the violating pair") {
    SetFamily base = d2_three_member_base();

    FnsWitness bad{base, {{0}, {1}, {}}};
    WitnessVerdict v = verify_fns(bad);
    CHECK(!v.ok);
    REQUIRE(v.counterexample.has_value());
    CHECK(*v.counterexample == std::make_pair(0, 1));
    // the reported pair really is disjoint
    CHECK(!base.member(0).intersects(base.member(1)));

    FnsWitness good{base, {{0, 1}, {0, 1}, {}}};
    CHECK(verify_fns(good).ok);

    // malformed witnesses are input errors, not verdicts
    CHECK_THROWS_AS(verify_fns(FnsWitness{base, {{9}, {}, {}}}), input_error);
    CHECK_THROWS_AS(verify_fns(FnsWitness{base, {{0}, {}}}), input_error);
    CHECK_THROWS_AS(verify_fns(FnsWitness{base, {{1, 0}, {}, {}}}), input_error);
}

TEST_CASE("enlarging images never breaks a verifying witness") {
    for (int n = 1; n <= 3; ++n) {
        for (const FiniteSpace& space : enumerate_topologies(n)) {
            SetFamily base = topology_as_base(space);
            auto found = search_fns(base, base.size());
            REQUIRE(found.has_value());
            CHECK(verify_fns(found->witness).ok);

            FnsWitness grown = found->witness;
            for (auto& img : grown.s)
                if (img.empty() || img.front() != 0) img.insert(img.begin(), 0);
            CHECK(verify_fns(grown).ok);

            FnsWitness full = found->witness;
            for (int i = 0; i < base.size(); ++i) {
                full.s[i].clear();
                for (int j = 0; j < base.size(); ++j) full.s[i].push_back(j);
            }
            CHECK(verify_fns(full).ok);
        }
    }
}

TEST_CASE("witness search finds the minimal uniform bound") {
    // no disjoint pairs: bound zero suffices
    SetFamily sp = nonempty_opens_pi_base(sierpinski());
    auto zero = search_fns(sp, 0);
    REQUIRE(zero.has_value());
    CHECK(zero->k_min == 0);
    for (const auto& img : zero->witness.s) CHECK(img.empty());

    SetFamily base = d2_three_member_base();
    auto two = search_fns(base, 3);
    REQUIRE(two.has_value());
    CHECK(two->k_min == 2);
    CHECK(verify_fns(two->witness).ok);
    for (const auto& img : two->witness.s)
        CHECK(static_cast<int>(img.size()) <= 2);
    CHECK(!search_fns(base, 1).has_value());

    // three pairwise disjoint singletons force bound three
    FiniteSpace d3 = FiniteSpace::discrete(3);
    SetFamily sing_x(d3, {set({0}), set({1}), set({2}), d3.full()},
                     FamilyRole::base);
    auto three = search_fns(sing_x, 4);
    REQUIRE(three.has_value());
    CHECK(three->k_min == 3);
    CHECK(verify_fns(three->witness).ok);
    CHECK(!search_fns(sing_x, 2).has_value());

    CHECK_THROWS_AS(search_fns(base, -1), input_error);
}

TEST_CASE("interleaving verification walks every nested pair") {
    FiniteSpace d3 = FiniteSpace::discrete(3);
    SetFamily singles(d3, {set({0}), set({1}), set({2})}, FamilyRole::base);
    FnWitness identity{singles, {{0}, {1}, {2}}, {{0}, {1}, {2}}};
    CHECK(verify_fn(identity).ok);

    FiniteSpace chain = FiniteSpace::from_opens(2, {set({}), set({0}), set({0, 1})});
    SetFamily nested(chain, {set({0}), set({0, 1})}, FamilyRole::base);
    FnWitness gap{nested, {{0}, {1}}, {{0}, {1}}};
    WitnessVerdict v = verify_fn(gap);
    CHECK(!v.ok);
    REQUIRE(v.counterexample.has_value());
    CHECK(*v.counterexample == std::make_pair(0, 1));
    CHECK(nested.member(0).subset_of(nested.member(1)));

    for (int n = 1; n <= 3; ++n)
        for (const FiniteSpace& space : enumerate_topologies(n))
            CHECK(verify_fn(fn_with_all_supersets(topology_as_base(space))).ok);
}

TEST_CASE("interleaving side conditions are structural errors") {
    FiniteSpace chain = FiniteSpace::from_opens(2, {set({}), set({0}), set({0, 1})});
    SetFamily nested(chain, {set({0}), set({0, 1})}, FamilyRole::base);
    // u may only contain supersets
    CHECK_THROWS_WITH_AS(verify_fn(FnWitness{nested, {{0}, {0}}, {{0}, {1}}}),
                         doctest::Contains("u("), input_error);
    // l may only contain subsets
    CHECK_THROWS_WITH_AS(verify_fn(FnWitness{nested, {{0}, {1}}, {{1}, {1}}}),
                         doctest::Contains("l("), input_error);
}

TEST_CASE("refining covers yield a verified interleaving witness") {
    FiniteSpace d3 = FiniteSpace::discrete(3);
    SetFamily w0 = family(d3, {set({0}), set({0, 1}), set({2})}, FamilyRole::cover);
    SetFamily w1 = family(d3, {set({0}), set({1}), set({2})}, FamilyRole::cover);
    DevelopableFn dev = developable_fn(d3, CoverSequence(d3, {w0, w1}));

    CHECK(dev.base.members() ==
          std::vector<PointSet>{set({2}), set({0, 1}), set({0}), set({1})});
    CHECK(dev.min_level == std::vector<int>{0, 0, 1, 1});

    // member {0} sits first in cover 1; its upward images are {0,1} and {0}
    CHECK(dev.witness.u[2] == std::vector<int>{1, 2});
    CHECK(dev.witness.l[2] == std::vector<int>{2});
    CHECK(dev.witness.u[0] == std::vector<int>{0});
    CHECK(dev.witness.u[3] == std::vector<int>{1, 3});
    CHECK(verify_fn(dev.witness).ok);

    // the maximal subfamilies stay a development
    CoverSequence maximal(d3, {maximal_subfamily(w0), maximal_subfamily(w1)});
    CHECK(is_development(d3, maximal));
}

TEST_CASE("antichain covers give the identity interleaving") {
    FiniteSpace d2 = FiniteSpace::discrete(2);
    SetFamily parts = family(d2, {set({0}), set({1})}, FamilyRole::cover);
    DevelopableFn dev = developable_fn(d2, CoverSequence(d2, {parts}));
    CHECK(dev.base.members() == std::vector<PointSet>{set({0}), set({1})});
    CHECK(dev.witness.u == std::vector<std::vector<int>>{{0}, {1}});
    CHECK(dev.witness.l == std::vector<std::vector<int>>{{0}, {1}});
    CHECK(verify_fn(dev.witness).ok);
}

TEST_CASE("cover sequences that break a hypothesis are rejected by name") {
    FiniteSpace s = sierpinski();
    SetFamily whole = family(s, {s.full()}, FamilyRole::cover);
    CHECK_THROWS_WITH_AS(developable_fn(s, CoverSequence(s, {whole})),
                         doctest::Contains("development"), input_error);

    FiniteSpace d3 = FiniteSpace::discrete(3);
    SetFamily fine = family(d3, {set({0}), set({1}), set({2})}, FamilyRole::cover);
    SetFamily coarse = family(d3, {set({0, 1}), set({2})}, FamilyRole::cover);
    CHECK_THROWS_WITH_AS(developable_fn(d3, CoverSequence(d3, {fine, coarse})),
                         doctest::Contains("refine"), input_error);

    CHECK_THROWS_AS(developable_fn(d3, CoverSequence(d3, {})), input_error);
}

TEST_CASE("atom lift keeps verification and counts points by atoms") {
    FiniteSpace x = x3();
    StoneLift lift = stone_lift(x, trivial_fns(ro_family(x)));
    CHECK(lift.atoms == std::vector<PointSet>{set({2}), set({0, 1})});
    CHECK(lift.stone_space == FiniteSpace::discrete(2));
    CHECK(lift.stone_base.members() ==
          std::vector<PointSet>{set({}), set({0}), set({1}), set({0, 1})});
    CHECK(verify_fns(lift.lifted).ok);

    FiniteSpace d3 = FiniteSpace::discrete(3);
    StoneLift same = stone_lift(d3, trivial_fns(ro_family(d3)));
    CHECK(same.stone_space.point_count() == 3);
    CHECK(same.stone_base.size() == 8);
    CHECK(verify_fns(same.lifted).ok);

    FiniteSpace ind = FiniteSpace::indiscrete(2);
    StoneLift tiny = stone_lift(ind, trivial_fns(ro_family(ind)));
    CHECK(tiny.stone_space.point_count() == 1);
    CHECK(tiny.atoms == std::vector<PointSet>{set({0, 1})});

    FiniteSpace s = sierpinski();
    CHECK_THROWS_AS(stone_lift(s, trivial_fns(topology_as_base(s))), input_error);

    for (int n = 1; n <= 3; ++n) {
        for (const FiniteSpace& space : enumerate_topologies(n)) {
            StoneLift l = stone_lift(space, trivial_fns(ro_family(space)));
            CHECK(static_cast<int>(l.atoms.size()) == l.stone_space.point_count());
            CHECK(verify_fns(l.lifted).ok);
        }
    }
}

TEST_CASE("projection to regular opens keeps verification") {
    FiniteSpace d2 = FiniteSpace::discrete(2);
    FnWitness w = fn_with_all_supersets(topology_as_base(d2));
    FnWitness p = project_fn_to_ro(d2, w);
    // every set is regular open, so nothing moves
    CHECK(p.base.members() == w.base.members());
    CHECK(p.u == w.u);
    CHECK(p.l == w.l);
    CHECK(verify_fn(p).ok);

    FiniteSpace x = x3();
    FnWitness px = project_fn_to_ro(x, fn_with_all_supersets(topology_as_base(x)));
    CHECK(px.base.members() == ro_family(x).members());
    CHECK(verify_fn(px).ok);

    FiniteSpace ind = FiniteSpace::indiscrete(2);
    FnWitness pi = project_fn_to_ro(ind, fn_with_all_supersets(topology_as_base(ind)));
    CHECK(pi.base.size() == 2);
    CHECK(verify_fn(pi).ok);

    CHECK_THROWS_AS(project_fn_to_ro(x, fn_with_all_supersets(ro_family(x))),
                    input_error);

    for (int n = 1; n <= 3; ++n)
        for (const FiniteSpace& space : enumerate_topologies(n)) {
            FnWitness proj =
                project_fn_to_ro(space, fn_with_all_supersets(topology_as_base(space)));
            CHECK(verify_fn(proj).ok);
        }
}
