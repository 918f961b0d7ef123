#ifndef FINTOP_FAMILY_HPP
#define FINTOP_FAMILY_HPP

#include <optional>
#include <string>
#include <vector>

#include "fintop/space.hpp"

namespace fintop {

enum class FamilyRole { plain, base, pi_base, cover };

const char* role_name(FamilyRole role);
std::optional<FamilyRole> role_from_name(const std::string& name);

// An ordered family of distinct point-sets over one space, tagged with a
// role whose invariant is validated at construction:
//   base:    members open; every open set is a union of members
//   pi_base: members open and nonempty; every nonempty open contains a member
//   cover:   the union of the members is the whole space
//   plain:   no constraint
class SetFamily {
public:
    SetFamily(FiniteSpace space, std::vector<PointSet> members, FamilyRole role);

    const FiniteSpace& space() const { return space_; }
    FamilyRole role() const { return role_; }
    const std::vector<PointSet>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    PointSet member(int i) const;
    std::optional<int> index_of(PointSet s) const;
    PointSet union_of_members() const;

    // Canonically first member satisfying pred, if any.
    template <typename Pred>
    std::optional<int> canonical_first(Pred pred) const {
        std::optional<int> best;
        for (int i = 0; i < size(); ++i) {
            if (!pred(members_[i])) continue;
            if (!best || canonical_less(members_[i], members_[*best])) best = i;
        }
        return best;
    }

    bool operator==(const SetFamily&) const = default;

private:
    FiniteSpace space_;
    std::vector<PointSet> members_;
    FamilyRole role_;
};

// Decides whether the family's members satisfy `role`'s invariant
// (independently of the family's stored tag).
bool family_role_check(const SetFamily& family, FamilyRole role);

// Union of all cover members containing x. Requires role == cover.
PointSet star(const FiniteSpace& space, Point x, const SetFamily& cover);

// Members not strictly contained in another member. An antichain; still a
// cover when the input is a cover (and tagged so).
SetFamily maximal_subfamily(const SetFamily& family);

// Every point lies in finitely many members; trivially true here. The
// multiplicity report carries the honest content at finite scale.
bool is_point_finite(const SetFamily& family);

struct MultiplicityReport {
    int max_multiplicity = 0;
    std::optional<Point> at_point; // a point achieving the maximum
};
MultiplicityReport max_multiplicity(const SetFamily& family);

// True iff every member of `fine` is contained in some member of `coarse`.
// Both families must live over the same space.
bool is_refinement(const SetFamily& fine, const SetFamily& coarse);

// All regular open sets (fixed points of regular_part), canonically ordered.
// A Boolean algebra under U∧V = U∩V, U∨V = regular_part(U∪V),
// ¬U = interior(complement).
SetFamily ro_family(const FiniteSpace& space);

// The canonical minimal pi-base: all minimal nonempty opens. Every nonempty
// open contains a minimal one, so this always satisfies the pi_base role.
SetFamily minimal_pi_base(const FiniteSpace& space);

// The full topology as a base-role family (canonical order).
SetFamily topology_as_base(const FiniteSpace& space);

// All nonempty opens as a pi_base-role family. Empty for the empty space.
SetFamily nonempty_opens_pi_base(const FiniteSpace& space);

// A finite sequence of open covers, conceptually extended by repeating its
// last element forever.
class CoverSequence {
public:
    CoverSequence(FiniteSpace space, std::vector<SetFamily> covers);

    const FiniteSpace& space() const { return space_; }
    const std::vector<SetFamily>& covers() const { return covers_; }
    int size() const { return static_cast<int>(covers_.size()); }

private:
    FiniteSpace space_;
    std::vector<SetFamily> covers_;
};

// True iff for every point x and every open U containing x some cover in the
// sequence has star(x, W_i) inside U. The repeat-last extension makes indices
// beyond the stored sequence redundant. Throws on an empty sequence.
bool is_development(const FiniteSpace& space, const CoverSequence& seq);

} // namespace fintop

#endif
