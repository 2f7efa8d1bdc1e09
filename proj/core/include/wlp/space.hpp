#pragma once

// Finitely supported vectors of l^p(G, w), the translation operators
// (T_s f)(t) = f(s^-1 t), and truncated estimates of ||T_s||.

#include "wlp/subset.hpp"
#include "wlp/weight.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wlp {

/// Finitely supported rational-valued function on a group. Zero values are
/// never stored, so the zero function is the empty map.
class FinSupFun {
public:
    FinSupFun() = default;

    static FinSupFun delta(const GroupElement& g, const Rational& value = 1);
    static FinSupFun indicator(const FiniteSet& a, const Rational& value = 1);

    void set(const GroupElement& g, const Rational& value);
    Rational at(const GroupElement& g) const;

    const std::map<GroupElement, Rational>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    FiniteSet support() const;

    /// max |f|
    Rational sup_abs() const;
    FinSupFun scaled(const Rational& c) const;
    FinSupFun restricted(const FiniteSet& a) const;

    friend FinSupFun operator+(const FinSupFun& a, const FinSupFun& b);
    friend FinSupFun operator-(const FinSupFun& a, const FinSupFun& b);
    friend bool operator==(const FinSupFun&, const FinSupFun&) = default;

private:
    std::map<GroupElement, Rational> values_;
};

struct SpaceParams {
    WeightPtr weight;
    double p = 1.0;

    SpaceParams(WeightPtr w, double p_value);

    const Group& group() const { return weight->group(); }
    /// p when it is a positive integer.
    std::optional<unsigned> integer_p() const;
    /// Integer p and an exact weight: every p-th power below is a rational.
    bool exact() const;
};

/// Comparison tolerance on the floating-point track.
inline constexpr double kFloatTolerance = 1e-12;

/// A p-th power sum and its p-th root. `exact` holds the p-th power
/// whenever SpaceParams::exact() is true.
struct NormValue {
    std::optional<Rational> exact;
    double pth_power = 0.0;
    double norm = 0.0;
};

/// (T_s f)(t) = f(s^-1 t): the support moves to s * supp f.
FinSupFun translate(const Group& group, const GroupElement& s, const FinSupFun& f);

/// (sum |f(t)|^p w(t)^p)^(1/p)
NormValue weighted_norm(const FinSupFun& f, const SpaceParams& params);

/// sum over A of w(t)^p, i.e. ||w||^p on A.
NormValue weight_pnorm_on_set(const FiniteSet& a, const SpaceParams& params);

/// a <= b, exactly when both are exact, otherwise within kFloatTolerance.
bool leq_tolerant(const DyadicValue& a, const DyadicValue& b);

struct NormEstimate {
    /// max of the ratio over the search region; a certified lower bound.
    DyadicValue lower_bound;
    GroupElement attained_at;
    std::optional<DeclaredBound> analytic;
    std::string region;

    bool consistent() const { return !analytic || leq_tolerant(lower_bound, analytic->value); }
};

/// ||T_s|| = sup_t w(st)/w(t), truncated to t in ball(search_radius).
/// Throws InvariantViolation when the sampled ratio exceeds the declared bound.
NormEstimate translation_norm(const GroupElement& s, const SpaceParams& params, unsigned search_radius);

/// (L(g), R(g)) with L(g) = sup w(gt)/w(t) and R(g) = sup w(tg)/w(t).
std::pair<NormEstimate, NormEstimate> left_right_functionals(const GroupElement& g, const SpaceParams& params,
                                                             unsigned search_radius);

struct AdmissibilityEntry {
    GroupElement element;
    NormEstimate estimate;
    /// No declared bound and the sampled ratio still grows between radius/2 and radius.
    bool unproven = false;
};

std::vector<AdmissibilityEntry> admissibility_report(const SubsetSpec& s, const SpaceParams& params, std::size_t count,
                                                     unsigned search_radius);

}  // namespace wlp
