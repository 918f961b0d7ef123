#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <vector>

#include "fintop/enumerate.hpp"
#include "fintop/quotient.hpp"

#include "helpers.hpp"

using namespace fintop;
using namespace fintop::testutil;

namespace {

// All subfamilies of the opens with at most max_size members.
std::vector<std::vector<PointSet>> open_subfamilies(const FiniteSpace& sp,
                                                    int max_size) {
    std::vector<std::vector<PointSet>> out;
    int m = sp.open_count();
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
        if (std::popcount(pick) > max_size) continue;
        std::vector<PointSet> members;
        for (int i = 0; i < m; ++i)
            if ((pick >> i) & 1) members.push_back(sp.opens()[i]);
        out.push_back(std::move(members));
    }
    return out;
}

std::vector<PointSet> close_under_union_intersection(std::vector<PointSet> sets) {
    auto add = [&](PointSet s) {
        if (std::find(sets.begin(), sets.end(), s) == sets.end()) sets.push_back(s);
    };
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            add(sets[i] | sets[j]);
            add(sets[i] & sets[j]);
        }
    return sets;
}

} // namespace

TEST_CASE("membership patterns partition the space") {
    FiniteSpace x = x3();

    Partition one = partition(x, family(x, {}));
    CHECK(one.classes == std::vector<PointSet>{x.full()});
    CHECK(one.class_of == std::vector<int>{0, 0, 0});

    Partition two = partition(x, family(x, {set({0, 1}), set({2})}));
    CHECK(two.classes == std::vector<PointSet>{set({0, 1}), set({2})});
    CHECK(two.class_of == std::vector<int>{0, 0, 1});

    // a separating family of a t0 space cuts everything down to singletons
    Partition fine = partition(x, topology_as_base(x));
    CHECK(fine.classes.size() == 3);
    for (PointSet c : fine.classes) CHECK(c.size() == 1);

    CHECK_THROWS_AS(partition(x, family(x, {set({1})})), input_error);
}

TEST_CASE("quotients of the worked examples") {
    FiniteSpace x = x3();
    QuotientResult two = build_quotient(x, family(x, {set({0, 1}), set({2})}));
    CHECK(two.quotient == FiniteSpace::discrete(2));
    CHECK(two.base_image.members() == std::vector<PointSet>{set({0}), set({1})});
    CHECK(two.q.image() == std::vector<Point>{0, 0, 1});

    QuotientResult one = build_quotient(x, family(x, {}));
    CHECK(one.quotient.point_count() == 1);
    CHECK(one.base_image.size() == 0);

    FiniteSpace s = sierpinski();
    QuotientResult same = build_quotient(s, family(s, {set({1})}));
    CHECK(same.quotient == s);
    CHECK(same.base_image.members() == std::vector<PointSet>{set({1})});
}

TEST_CASE("quotient identities hold for every small open family") {
    for (int n = 1; n <= 3; ++n) {
        for (const FiniteSpace& sp : enumerate_topologies(n)) {
            for (const auto& members : open_subfamilies(sp, 2)) {
                SetFamily p = family(sp, members);
                QuotientResult r = build_quotient(sp, p);
                CHECK(r.q.image_of(sp.full()) == r.quotient.full());
                for (int i = 0; i < p.size(); ++i) {
                    PointSet v = p.member(i);
                    CHECK(r.q.preimage_of(r.base_image.member(i)) == v);
                    for (int j = 0; j < p.size(); ++j) {
                        PointSet w = p.member(j);
                        CHECK((r.q.image_of(v) & r.q.image_of(w)) ==
                              r.q.image_of(v & w));
                    }
                }
            }
        }
    }
}

TEST_CASE("weak complete regularity on the worked examples") {
    FiniteSpace d2 = FiniteSpace::discrete(2);
    SetFamily p = family(d2, {set({0}), set({1})});
    WcrResult r = is_wcr(d2, p, 2);
    CHECK(r.ok);
    REQUIRE(r.certificate.has_value());
    bool saw = false;
    for (const WcrTupleCert& tc : r.certificate->tuples) {
        if (tc.intersection != set({0})) continue;
        saw = true;
        REQUIRE(tc.points.size() == 1);
        CHECK(tc.points[0].x == 0);
        CHECK(tc.points[0].a == std::vector<int>{0});
        CHECK(tc.points[0].b == std::vector<int>{1});
    }
    CHECK(saw);
    CHECK(wcr_certificate_valid(d2, p, *r.certificate));

    FiniteSpace s = sierpinski();
    WcrResult bad = is_wcr(s, family(s, {set({1})}), 1);
    CHECK(!bad.ok);
    REQUIRE(bad.failure.has_value());
    CHECK(bad.failure->intersection == set({1}));
    CHECK(bad.failure->at_point == 1);

    WcrResult whole = is_wcr(s, family(s, {s.full()}), 1);
    CHECK(whole.ok);

    CHECK_THROWS_AS(is_wcr(d2, p, 0), input_error);
}

TEST_CASE("empty intersections pass by default and need a covering family in strict mode") {
    FiniteSpace d2 = FiniteSpace::discrete(2);
    SetFamily just_empty = family(d2, {set({})});
    CHECK(is_wcr(d2, just_empty, 1).ok);
    WcrResult strict = is_wcr(d2, just_empty, 1, true);
    CHECK(!strict.ok);
    REQUIRE(strict.failure.has_value());
    CHECK(strict.failure->intersection == set({}));
    CHECK(!strict.failure->at_point.has_value());

    // with a covering family the strict reading goes through
    SetFamily disjoint = family(d2, {set({0}), set({1})});
    CHECK(is_wcr(d2, disjoint, 2, true).ok);
}

TEST_CASE("tampered certificates fail the literal recheck") {
    FiniteSpace d2 = FiniteSpace::discrete(2);
    SetFamily p = family(d2, {set({0}), set({1})});
    WcrResult r = is_wcr(d2, p, 2);
    REQUIRE(r.certificate.has_value());
    WcrCertificate broken = *r.certificate;
    for (WcrTupleCert& tc : broken.tuples)
        for (WcrPointCert& pc : tc.points) std::swap(pc.a, pc.b);
    CHECK(!wcr_certificate_valid(d2, p, broken));
}

TEST_CASE("the pointwise interlocking condition on the worked examples") {
    FiniteSpace d3 = FiniteSpace::discrete(3);
    SetFamily sing_and_co(d3, {set({0}), set({1}), set({2}), set({0, 1}),
                               set({0, 2}), set({1, 2})},
                          FamilyRole::plain);
    CHECK(is_cr_family(d3, sing_and_co));

    FiniteSpace s = sierpinski();
    CHECK(!is_cr_family(s, family(s, {set({}), set({1}), set({0, 1})})));

    CHECK(is_cr_family(s, family(s, {s.full(), set({})})));
}

TEST_CASE("interlocking families closed under union and intersection interlock weakly") {
    for (int n = 1; n <= 3; ++n) {
        for (const FiniteSpace& sp : enumerate_topologies(n)) {
            for (const auto& members : open_subfamilies(sp, 2)) {
                if (members.empty()) continue;
                SetFamily closed =
                    family(sp, close_under_union_intersection(members));
                if (!is_cr_family(sp, closed)) continue;
                WcrResult r = is_wcr(sp, closed, closed.size());
                CHECK(r.ok);
                REQUIRE(r.certificate.has_value());
                CHECK(wcr_certificate_valid(sp, closed, *r.certificate));
            }
        }
    }
}

TEST_CASE("separation reports on the worked examples") {
    SeparationReport d = separation_report(FiniteSpace::discrete(3));
    CHECK(d.t0);
    CHECK(d.t1);
    CHECK(d.t2);
    CHECK(d.regular);

    SeparationReport s = separation_report(sierpinski());
    CHECK(s.t0);
    CHECK(!s.t1);
    CHECK(!s.t2);
    CHECK(!s.regular);

    SeparationReport i = separation_report(FiniteSpace::indiscrete(2));
    CHECK(!i.t0);
    CHECK(!i.t1);
    CHECK(!i.t2);
    CHECK(i.regular);
}

TEST_CASE("weakly interlocking families yield based hausdorff regular quotients") {
    for (int n = 1; n <= 3; ++n) {
        for (const FiniteSpace& sp : enumerate_topologies(n)) {
            for (const auto& members : open_subfamilies(sp, 2)) {
                if (members.empty()) continue;
                SetFamily p = family(sp, members);
                if (!is_wcr(sp, p, p.size(), true).ok) continue;
                QuotientResult r = build_quotient(sp, p);
                CHECK(family_role_check(r.base_image, FamilyRole::base));
                SeparationReport rep = separation_report(r.quotient);
                CHECK(rep.t2);
                CHECK(rep.regular);
            }
        }
    }
}
