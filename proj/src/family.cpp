#include "fintop/family.hpp"

#include <algorithm>

namespace fintop {

const char* role_name(FamilyRole role) {
    switch (role) {
    case FamilyRole::plain: return "plain";
    case FamilyRole::base: return "base";
    case FamilyRole::pi_base: return "pi_base";
    case FamilyRole::cover: return "cover";
    }
    return "?";
}

std::optional<FamilyRole> role_from_name(const std::string& name) {
    if (name == "plain") return FamilyRole::plain;
    if (name == "base") return FamilyRole::base;
    if (name == "pi_base") return FamilyRole::pi_base;
    if (name == "cover") return FamilyRole::cover;
    return std::nullopt;
}

namespace {

bool role_holds(const FiniteSpace& space, const std::vector<PointSet>& members,
                FamilyRole role) {
    switch (role) {
    case FamilyRole::plain:
        return true;
    case FamilyRole::base: {
        for (PointSet m : members)
            if (!space.is_open(m)) return false;
        // Every open is the union of the members below it (the empty set is
        // the empty union).
        for (PointSet o : space.opens()) {
            PointSet u;
            for (PointSet m : members)
                if (m.subset_of(o)) u = u | m;
            if (u != o) return false;
        }
        return true;
    }
    case FamilyRole::pi_base: {
        for (PointSet m : members)
            if (m.empty() || !space.is_open(m)) return false;
        for (PointSet o : space.opens()) {
            if (o.empty()) continue;
            bool hit = false;
            for (PointSet m : members)
                if (m.subset_of(o)) { hit = true; break; }
            if (!hit) return false;
        }
        return true;
    }
    case FamilyRole::cover: {
        PointSet u;
        for (PointSet m : members) u = u | m;
        return u == space.full();
    }
    }
    return false;
}

} // namespace

SetFamily::SetFamily(FiniteSpace space, std::vector<PointSet> members, FamilyRole role)
    : space_(std::move(space)), members_(std::move(members)), role_(role) {
    for (PointSet m : members_)
        checked_subset(space_, m, "family member");
    for (std::size_t i = 0; i < members_.size(); ++i)
        for (std::size_t j = i + 1; j < members_.size(); ++j)
            if (members_[i] == members_[j])
                throw input_error("duplicate family member " + members_[i].to_string());
    if (!role_holds(space_, members_, role_))
        throw input_error(std::string("family does not satisfy role ") + role_name(role_));
}

PointSet SetFamily::member(int i) const {
    if (i < 0 || i >= size())
        throw input_error("family member index " + std::to_string(i) + " out of range");
    return members_[i];
}

std::optional<int> SetFamily::index_of(PointSet s) const {
    for (int i = 0; i < size(); ++i)
        if (members_[i] == s) return i;
    return std::nullopt;
}

PointSet SetFamily::union_of_members() const {
    PointSet u;
    for (PointSet m : members_) u = u | m;
    return u;
}

bool family_role_check(const SetFamily& family, FamilyRole role) {
    return role_holds(family.space(), family.members(), role);
}

PointSet star(const FiniteSpace& space, Point x, const SetFamily& cover) {
    if (x < 0 || x >= space.point_count())
        throw input_error("point " + std::to_string(x) + " out of range");
    if (cover.role() != FamilyRole::cover)
        throw input_error("star requires a family with role cover");
    if (!(cover.space() == space))
        throw input_error("cover lives over a different space");
    PointSet out;
    for (PointSet m : cover.members())
        if (m.contains(x)) out = out | m;
    return out;
}

SetFamily maximal_subfamily(const SetFamily& family) {
    std::vector<PointSet> kept;
    for (PointSet m : family.members()) {
        bool dominated = false;
        for (PointSet o : family.members())
            if (m != o && m.subset_of(o)) { dominated = true; break; }
        if (!dominated) kept.push_back(m);
    }
    FamilyRole role =
        family.role() == FamilyRole::cover ? FamilyRole::cover : FamilyRole::plain;
    return SetFamily(family.space(), std::move(kept), role);
}

bool is_point_finite(const SetFamily&) {
    return true; // finite families cannot fail this
}

MultiplicityReport max_multiplicity(const SetFamily& family) {
    MultiplicityReport report;
    for (Point x = 0; x < family.space().point_count(); ++x) {
        int count = 0;
        for (PointSet m : family.members())
            if (m.contains(x)) ++count;
        if (count > report.max_multiplicity) {
            report.max_multiplicity = count;
            report.at_point = x;
        }
    }
    return report;
}

bool is_refinement(const SetFamily& fine, const SetFamily& coarse) {
    if (!(fine.space() == coarse.space()))
        throw input_error("refinement check requires families over the same space");
    for (PointSet m : fine.members()) {
        bool inside = false;
        for (PointSet c : coarse.members())
            if (m.subset_of(c)) { inside = true; break; }
        if (!inside) return false;
    }
    return true;
}

SetFamily ro_family(const FiniteSpace& space) {
    std::vector<PointSet> members;
    for (PointSet o : space.opens())
        if (space.regular_part(o) == o) members.push_back(o);
    return SetFamily(space, std::move(members), FamilyRole::plain);
}

SetFamily minimal_pi_base(const FiniteSpace& space) {
    std::vector<PointSet> members;
    for (PointSet o : space.opens()) {
        if (o.empty()) continue;
        bool minimal = true;
        for (PointSet p : space.opens())
            if (!p.empty() && p != o && p.subset_of(o)) { minimal = false; break; }
        if (minimal) members.push_back(o);
    }
    return SetFamily(space, std::move(members), FamilyRole::pi_base);
}

SetFamily topology_as_base(const FiniteSpace& space) {
    return SetFamily(space, space.opens(), FamilyRole::base);
}

SetFamily nonempty_opens_pi_base(const FiniteSpace& space) {
    std::vector<PointSet> members;
    for (PointSet o : space.opens())
        if (!o.empty()) members.push_back(o);
    return SetFamily(space, std::move(members), FamilyRole::pi_base);
}

CoverSequence::CoverSequence(FiniteSpace space, std::vector<SetFamily> covers)
    : space_(std::move(space)), covers_(std::move(covers)) {
    for (const SetFamily& c : covers_) {
        if (!(c.space() == space_))
            throw input_error("cover sequence member lives over a different space");
        if (c.role() != FamilyRole::cover)
            throw input_error("cover sequence member lacks role cover");
        for (PointSet m : c.members())
            if (!space_.is_open(m))
                throw input_error("cover member " + m.to_string() + " is not open");
    }
}

bool is_development(const FiniteSpace& space, const CoverSequence& seq) {
    if (!(seq.space() == space))
        throw input_error("cover sequence lives over a different space");
    if (seq.size() == 0)
        throw input_error("development check requires a nonempty cover sequence");
    for (Point x = 0; x < space.point_count(); ++x) {
        for (PointSet u : space.opens()) {
            if (!u.contains(x)) continue;
            bool shrunk = false;
            for (const SetFamily& w : seq.covers()) {
                if (star(space, x, w).subset_of(u)) { shrunk = true; break; }
            }
            if (!shrunk) return false;
        }
    }
    return true;
}

} // namespace fintop
