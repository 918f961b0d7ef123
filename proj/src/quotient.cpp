#include "fintop/quotient.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace fintop {

namespace {

void require_open_members(const FiniteSpace& space, const SetFamily& p) {
    if (!(p.space() == space))
        throw input_error("family lives over a different space");
    for (PointSet m : p.members())
        if (!space.is_open(m))
            throw input_error("family member " + m.to_string() + " is not open");
}

} // namespace

Partition partition(const FiniteSpace& space, const SetFamily& p) {
    require_open_members(space, p);
    int n = space.point_count();
    std::vector<int> class_of(n, -1);
    std::vector<PointSet> classes;
    for (Point x = 0; x < n; ++x) {
        if (class_of[x] >= 0) continue;
        PointSet cls = PointSet::singleton(x);
        for (Point y = x + 1; y < n; ++y) {
            if (class_of[y] >= 0) continue;
            bool same = true;
            for (PointSet m : p.members())
                if (m.contains(x) != m.contains(y)) { same = false; break; }
            if (same) cls = cls.with(y);
        }
        int idx = static_cast<int>(classes.size());
        for (Point y : cls.points()) class_of[y] = idx;
        classes.push_back(cls);
    }
    return Partition{space, std::move(class_of), std::move(classes)};
}

QuotientResult build_quotient(const FiniteSpace& space, const SetFamily& p) {
    Partition part = partition(space, p);
    int k = static_cast<int>(part.classes.size());

    // Finest topology making q continuous: T is open iff q^{-1}(T) is.
    std::vector<PointSet> opens;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        PointSet t(mask);
        PointSet pre;
        for (int c = 0; c < k; ++c)
            if (t.contains(c)) pre = pre | part.classes[c];
        if (space.is_open(pre)) opens.push_back(t);
    }
    FiniteSpace quotient = FiniteSpace::from_opens(k, opens);
    SpaceMap q(space, quotient, part.class_of);

    std::vector<PointSet> images;
    images.reserve(p.members().size());
    for (PointSet v : p.members()) images.push_back(q.image_of(v));
    SetFamily base_image(quotient, std::move(images), FamilyRole::plain);

    // These identities hold for every family of opens; a failure means the
    // pattern-equivalence classes were computed wrong.
    for (int i = 0; i < p.size(); ++i) {
        PointSet v = p.member(i);
        if (q.preimage_of(base_image.member(i)) != v)
            throw std::logic_error("quotient: q^{-1}(q[V]) != V for V = " + v.to_string());
        for (int j = 0; j < p.size(); ++j) {
            PointSet w = p.member(j);
            if (q.image_of(v & w) != (base_image.member(i) & q.image_of(w)))
                throw std::logic_error("quotient: q[V∩W] != q[V]∩q[W] for V = " +
                                       v.to_string() + ", W = " + w.to_string());
        }
    }
    return QuotientResult{std::move(quotient), std::move(q), std::move(base_image)};
}

namespace {

struct TupleValue {
    PointSet value;
    std::vector<int> tuple; // shortest realizing member tuple, in index order
};

// Distinct intersections of 1..k members. Layered closure keeps the tuples
// short; at most 2^n distinct values exist regardless of |P|.
std::vector<TupleValue> distinct_intersections(const SetFamily& p, int k) {
    std::map<std::uint64_t, std::vector<int>> best;
    std::vector<TupleValue> frontier;
    for (int i = 0; i < p.size(); ++i) {
        PointSet v = p.member(i);
        if (best.emplace(v.bits(), std::vector<int>{i}).second)
            frontier.push_back({v, {i}});
    }
    for (int depth = 2; depth <= k && !frontier.empty(); ++depth) {
        std::vector<TupleValue> next;
        for (const TupleValue& tv : frontier) {
            for (int i = 0; i < p.size(); ++i) {
                PointSet v = tv.value & p.member(i);
                if (v == tv.value) continue;
                std::vector<int> tuple = tv.tuple;
                tuple.insert(std::lower_bound(tuple.begin(), tuple.end(), i), i);
                if (best.emplace(v.bits(), tuple).second)
                    next.push_back({v, std::move(tuple)});
            }
        }
        frontier = std::move(next);
    }
    std::vector<TupleValue> out;
    out.reserve(best.size());
    for (auto& [bits, tuple] : best) out.push_back({PointSet(bits), std::move(tuple)});
    return out;
}

} // namespace

WcrResult is_wcr(const FiniteSpace& space, const SetFamily& p, int k_cap,
                 bool strict_empty) {
    if (k_cap < 1) throw input_error("k_cap must be at least 1");
    require_open_members(space, p);
    int k = std::min(k_cap, p.size());

    WcrCertificate cert;
    for (const TupleValue& tv : distinct_intersections(p, k)) {
        WcrTupleCert tc{tv.value, tv.tuple, {}};
        if (tv.value.empty()) {
            if (!strict_empty) { cert.tuples.push_back(std::move(tc)); continue; }
            // Strict reading: the empty target needs complement(UB) = empty,
            // so some subfamily of P must cover the space.
            PointSet all = p.union_of_members();
            if (all != space.full())
                return WcrResult{false, std::nullopt,
                                 WcrFailure{tv.value, tv.tuple, std::nullopt}};
            WcrPointCert pc{0, {}, {}};
            for (int i = 0; i < p.size(); ++i) pc.b.push_back(i);
            tc.points.push_back(std::move(pc));
            cert.tuples.push_back(std::move(tc));
            continue;
        }
        for (Point x : tv.value.points()) {
            // One member A0 containing x suffices for the A side; the best B
            // is then everything disjoint from A0.
            std::optional<WcrPointCert> found;
            for (int a = 0; a < p.size(); ++a) {
                PointSet a0 = p.member(a);
                if (!a0.contains(x)) continue;
                std::vector<int> b;
                PointSet b_union;
                for (int i = 0; i < p.size(); ++i)
                    if (!p.member(i).intersects(a0)) {
                        b.push_back(i);
                        b_union = b_union | p.member(i);
                    }
                if (b_union.complement_in(space.point_count()).subset_of(tv.value)) {
                    found = WcrPointCert{x, {a}, std::move(b)};
                    break;
                }
            }
            if (!found)
                return WcrResult{false, std::nullopt, WcrFailure{tv.value, tv.tuple, x}};
            tc.points.push_back(std::move(*found));
        }
        cert.tuples.push_back(std::move(tc));
    }
    if (!wcr_certificate_valid(space, p, cert))
        throw std::logic_error("is_wcr produced a certificate that fails its own chain");
    return WcrResult{true, std::move(cert), std::nullopt};
}

bool wcr_certificate_valid(const FiniteSpace& space, const SetFamily& p,
                           const WcrCertificate& cert) {
    for (const WcrTupleCert& tc : cert.tuples) {
        PointSet target;
        bool first = true;
        for (int i : tc.tuple) {
            if (i < 0 || i >= p.size()) return false;
            target = first ? p.member(i) : (target & p.member(i));
            first = false;
        }
        if (first) return false; // tuples are nonempty by construction
        if (target != tc.intersection) return false;
        PointSet covered;
        for (const WcrPointCert& pc : tc.points) {
            PointSet a_union, b_union;
            for (int i : pc.a) {
                if (i < 0 || i >= p.size()) return false;
                a_union = a_union | p.member(i);
            }
            for (int i : pc.b) {
                if (i < 0 || i >= p.size()) return false;
                b_union = b_union | p.member(i);
            }
            PointSet b_complement = b_union.complement_in(space.point_count());
            if (!tc.intersection.empty()) {
                if (!a_union.contains(pc.x)) return false;
                if (!a_union.subset_of(b_complement)) return false;
            }
            if (!b_complement.subset_of(tc.intersection)) return false;
            covered = covered | (a_union & tc.intersection);
            if (!tc.intersection.empty()) covered = covered.with(pc.x);
        }
        if (!tc.intersection.empty() && !tc.intersection.subset_of(covered)) return false;
    }
    return true;
}

bool is_cr_family(const FiniteSpace& space, const SetFamily& p) {
    require_open_members(space, p);
    int n = space.point_count();
    for (PointSet u : p.members()) {
        for (Point x : u.points()) {
            bool served = false;
            for (PointSet up : p.members()) {
                if (!up.contains(x)) continue;
                for (PointSet vp : p.members()) {
                    if (up.intersects(vp)) continue;
                    if (vp.complement_in(n).subset_of(u)) { served = true; break; }
                }
                if (served) break;
            }
            if (!served) return false;
        }
    }
    return true;
}

SeparationReport separation_report(const FiniteSpace& space) {
    int n = space.point_count();
    SeparationReport rep;
    rep.t0 = rep.t1 = rep.t2 = rep.regular = true;

    for (Point x = 0; x < n; ++x) {
        for (Point y = 0; y < n; ++y) {
            if (x == y) continue;
            bool sep_x = false; // some open has x without y
            for (PointSet o : space.opens())
                if (o.contains(x) && !o.contains(y)) { sep_x = true; break; }
            if (!sep_x) {
                rep.t1 = false;
                if (x < y) {
                    bool sep_y = false;
                    for (PointSet o : space.opens())
                        if (o.contains(y) && !o.contains(x)) { sep_y = true; break; }
                    if (!sep_y) rep.t0 = false;
                }
            }
            if (x < y) {
                bool disjoint = false;
                for (PointSet a : space.opens()) {
                    if (!a.contains(x)) continue;
                    for (PointSet b : space.opens()) {
                        if (!b.contains(y) || a.intersects(b)) continue;
                        disjoint = true;
                        break;
                    }
                    if (disjoint) break;
                }
                if (!disjoint) rep.t2 = false;
            }
        }
    }

    for (Point x = 0; x < n && rep.regular; ++x) {
        for (PointSet o : space.opens()) {
            PointSet closed = o.complement_in(n);
            if (closed.contains(x)) continue;
            bool separated = false;
            for (PointSet a : space.opens()) {
                if (!a.contains(x)) continue;
                for (PointSet b : space.opens()) {
                    if (!closed.subset_of(b) || a.intersects(b)) continue;
                    separated = true;
                    break;
                }
                if (separated) break;
            }
            if (!separated) { rep.regular = false; break; }
        }
    }
    return rep;
}

} // namespace fintop
