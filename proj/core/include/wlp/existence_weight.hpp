#pragma once

// Weight with G-dense vectors on any group generated by a finite symmetric
// neighbourhood U of e. Nested sets U_n with U_j U_k in U_(j+k), chosen
// points s_n whose two-sided neighbourhoods are pairwise disjoint, and
// w = 2^(k-n) on the shell V_(n,k) \ V_(n,k-1) around {s_n, s_n^-1}.

#include "wlp/weight.hpp"

#include <memory>
#include <unordered_map>
#include <vector>

namespace wlp {

class ExistenceWeight final : public Weight {
public:
    struct Level {
        unsigned n;
        unsigned k;
        friend bool operator==(const Level&, const Level&) = default;
    };

    /// U = ball(generating_radius). Throws ConstructionError naming the
    /// colliding pair when the sets E_n = U_(n+1) s_n U_(n+1) u U_(n+1) s_n^-1 U_(n+1)
    /// (or the two halves of one E_n) intersect.
    static std::shared_ptr<ExistenceWeight> build(const Group& group, unsigned generating_radius,
                                                  std::vector<GroupElement> points);

    std::string id() const override { return "existence"; }
    std::string describe() const override;
    DyadicValue eval(const GroupElement& g) const override;

    /// 2^j for g in U_j.
    std::optional<DeclaredBound> left_bound(const GroupElement& g) const override;
    std::optional<DeclaredBound> right_bound(const GroupElement& g) const override;

    /// (n, k) with g in V_(n,k) \ V_(n,k-1), k <= n.
    std::optional<Level> level_of(const GroupElement& g) const;

    unsigned generating_radius() const noexcept { return radius_; }
    const std::vector<GroupElement>& points() const noexcept { return points_; }
    /// U_n for 1 <= n <= points().size() + 1.
    const FiniteSet& level_set(unsigned n) const;
    /// Smallest j with g in U_j.
    unsigned level_index(const GroupElement& g) const;

private:
    ExistenceWeight(Group group, unsigned radius, std::vector<GroupElement> points);

    unsigned radius_;
    std::vector<GroupElement> points_;
    std::vector<FiniteSet> nested_;  // nested_[n-1] = U_n
    std::unordered_map<GroupElement, Level, GroupElementHash> levels_;
};

}  // namespace wlp
