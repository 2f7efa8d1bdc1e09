#pragma once

// Candidate sets S with a reproducible enumeration order and a membership test.

#include "wlp/group.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace wlp {

class SubsetSpec {
public:
    enum class Kind { Naturals, WholeGroup, Powers, Explicit, Semigroup };

    /// 1, 2, 3, ... in Z.
    static SubsetSpec naturals(const Group& group);
    /// Every element, shell by shell. Lattice shells are swept in descending
    /// lexicographic order, so (n, m) precedes (-n, -m).
    static SubsetSpec whole_group(const Group& group);
    /// g, g^2, g^3, ...
    static SubsetSpec powers(const Group& group, GroupElement g);
    static SubsetSpec explicit_list(const Group& group, std::vector<GroupElement> elements);
    /// Products of at most max_depth generators, shortest first, including
    /// the empty product e. Generator order decides ties.
    static SubsetSpec semigroup(const Group& group, std::vector<GroupElement> generators, unsigned max_depth);

    Kind kind() const noexcept { return kind_; }
    const Group& group() const noexcept { return group_; }

    /// Visits candidates in order until `visit` returns false or `horizon`
    /// candidates were produced. Returns the number visited.
    std::size_t enumerate(std::size_t horizon, const std::function<bool(const GroupElement&)>& visit) const;
    std::vector<GroupElement> take(std::size_t count) const;

    bool contains(const GroupElement& g) const;
    /// False only for naturals, whole groups and powers.
    bool finite() const noexcept;
    std::string describe() const;

private:
    SubsetSpec(Kind kind, Group group) : kind_(kind), group_(std::move(group)) {}

    Kind kind_;
    Group group_;
    GroupElement base_;                       // powers
    std::vector<GroupElement> generators_;    // semigroup
    unsigned max_depth_ = 0;                  // semigroup
    std::shared_ptr<const FiniteSet> listed_; // explicit list or enumerated semigroup
};

}  // namespace wlp
