#ifndef FINTOP_QUOTIENT_HPP
#define FINTOP_QUOTIENT_HPP

#include <optional>
#include <vector>

#include "fintop/family.hpp"
#include "fintop/spacemap.hpp"

namespace fintop {

// Equivalence classes of "same membership pattern across P". Classes are
// numbered by first occurrence, scanning points in increasing order.
struct Partition {
    FiniteSpace space;
    std::vector<int> class_of;      // point -> class index
    std::vector<PointSet> classes;  // disjoint, nonempty, cover the space
};

Partition partition(const FiniteSpace& space, const SetFamily& p);

// Quotient of the space by the membership-pattern equivalence of P. The
// quotient carries the finest topology making q continuous; base_image is
// {q[V] : V in P} in P's order.
struct QuotientResult {
    FiniteSpace quotient;
    SpaceMap q;
    SetFamily base_image;
};

QuotientResult build_quotient(const FiniteSpace& space, const SetFamily& p);

// Certificate for the weak complete-regularity of P: for each distinct
// intersection of up to k members, one (A, B) pair of subfamilies per point
// x of the intersection satisfying x in UA, UA disjoint from UB, and
// complement(UB) inside the intersection.
struct WcrPointCert {
    Point x;
    std::vector<int> a; // member indices into P
    std::vector<int> b;
};

struct WcrTupleCert {
    PointSet intersection;
    std::vector<int> tuple; // a member tuple realizing the intersection
    std::vector<WcrPointCert> points;
};

struct WcrCertificate {
    std::vector<WcrTupleCert> tuples;
};

struct WcrFailure {
    PointSet intersection;
    std::vector<int> tuple;
    std::optional<Point> at_point; // absent when an empty tuple fails in strict mode
};

struct WcrResult {
    bool ok = false;
    std::optional<WcrCertificate> certificate;
    std::optional<WcrFailure> failure;
};

// Decides weak complete regularity for all member tuples of size 1 to
// min(k_cap, |P|). Empty intersections pass vacuously by default;
// strict_empty instead demands a subfamily of P covering the space.
WcrResult is_wcr(const FiniteSpace& space, const SetFamily& p, int k_cap,
                 bool strict_empty = false);

// Literal recheck of a certificate's inclusion chains.
bool wcr_certificate_valid(const FiniteSpace& space, const SetFamily& p,
                           const WcrCertificate& cert);

// Kerstan complete regularity: for each U in P and each x in U there are
// U', V' in P with x in U', U' disjoint from V', complement(V') inside U.
bool is_cr_family(const FiniteSpace& space, const SetFamily& p);

// regular means points and disjoint closed sets separate by disjoint opens;
// it does not include t1.
struct SeparationReport {
    bool t0 = false;
    bool t1 = false;
    bool t2 = false;
    bool regular = false;
};

SeparationReport separation_report(const FiniteSpace& space);

} // namespace fintop

#endif
