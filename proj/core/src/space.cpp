#include "wlp/space.hpp"

#include "wlp/errors.hpp"

#include <cmath>

namespace wlp {

// ---------------------------------------------------------------- FinSupFun

FinSupFun FinSupFun::delta(const GroupElement& g, const Rational& value) {
    FinSupFun f;
    f.set(g, value);
    return f;
}

FinSupFun FinSupFun::indicator(const FiniteSet& a, const Rational& value) {
    FinSupFun f;
    for (const auto& g : a) f.set(g, value);
    return f;
}

void FinSupFun::set(const GroupElement& g, const Rational& value) {
    if (value == 0) {
        values_.erase(g);
    } else {
        values_[g] = value;
    }
}

Rational FinSupFun::at(const GroupElement& g) const {
    auto it = values_.find(g);
    return it == values_.end() ? Rational(0) : it->second;
}

FiniteSet FinSupFun::support() const {
    FiniteSet out;
    for (const auto& [g, v] : values_) out.insert(g);
    return out;
}

Rational FinSupFun::sup_abs() const {
    Rational m = 0;
    for (const auto& [g, v] : values_) m = std::max(m, wlp::abs(v));
    return m;
}

FinSupFun FinSupFun::scaled(const Rational& c) const {
    FinSupFun out;
    if (c == 0) return out;
    for (const auto& [g, v] : values_) out.values_.emplace(g, v * c);
    return out;
}

FinSupFun FinSupFun::restricted(const FiniteSet& a) const {
    FinSupFun out;
    for (const auto& [g, v] : values_) {
        if (a.contains(g)) out.values_.emplace(g, v);
    }
    return out;
}

FinSupFun operator+(const FinSupFun& a, const FinSupFun& b) {
    FinSupFun out = a;
    for (const auto& [g, v] : b.values_) out.set(g, out.at(g) + v);
    return out;
}

FinSupFun operator-(const FinSupFun& a, const FinSupFun& b) {
    FinSupFun out = a;
    for (const auto& [g, v] : b.values_) out.set(g, out.at(g) - v);
    return out;
}

// ---------------------------------------------------------------- SpaceParams

SpaceParams::SpaceParams(WeightPtr w, double p_value) : weight(std::move(w)), p(p_value) {
    if (!weight) throw UsageError("SpaceParams needs a weight");
    if (!(p >= 1.0) || !std::isfinite(p)) throw ValidationError("p must be a finite real >= 1");
}

std::optional<unsigned> SpaceParams::integer_p() const {
    if (p == std::floor(p) && p <= 64.0) return static_cast<unsigned>(p);
    return std::nullopt;
}

bool SpaceParams::exact() const { return integer_p().has_value() && weight->exact(); }

// ---------------------------------------------------------------- norms

FinSupFun translate(const Group& group, const GroupElement& s, const FinSupFun& f) {
    group.require(s);
    FinSupFun out;
    for (const auto& [t, v] : f.values()) out.set(group.multiply(s, t), v);
    return out;
}

namespace {

// Accumulates sum |c|^p w^p on both tracks.
class PowerSum {
public:
    explicit PowerSum(const SpaceParams& params) : params_(params), exact_(params.exact()) {}

    void add(const Rational& coefficient, const DyadicValue& w) {
        if (exact_ && w.is_exact()) {
            unsigned p = *params_.integer_p();
            exact_sum_ += ipow(wlp::abs(coefficient), p) * w.pow(p).to_rational();
        } else {
            exact_ = false;
        }
        float_sum_ += std::pow(std::fabs(to_double(coefficient)), params_.p) * std::pow(w.to_double(), params_.p);
    }

    NormValue result() const {
        NormValue v;
        if (exact_) {
            v.exact = exact_sum_;
            v.pth_power = to_double(exact_sum_);
        } else {
            v.pth_power = float_sum_;
        }
        v.norm = std::pow(v.pth_power, 1.0 / params_.p);
        return v;
    }

private:
    const SpaceParams& params_;
    bool exact_;
    Rational exact_sum_ = 0;
    double float_sum_ = 0.0;
};

}  // namespace

NormValue weighted_norm(const FinSupFun& f, const SpaceParams& params) {
    PowerSum sum(params);
    for (const auto& [t, v] : f.values()) sum.add(v, params.weight->eval(t));
    return sum.result();
}

NormValue weight_pnorm_on_set(const FiniteSet& a, const SpaceParams& params) {
    PowerSum sum(params);
    for (const auto& t : a) sum.add(1, params.weight->eval(t));
    return sum.result();
}

bool leq_tolerant(const DyadicValue& a, const DyadicValue& b) {
    if (a.is_exact() && b.is_exact()) return a <= b;
    return a.to_double() <= b.to_double() * (1.0 + kFloatTolerance);
}

// ---------------------------------------------------------------- functionals

namespace {

enum class Side { Left, Right };

NormEstimate ratio_scan(const GroupElement& g, const SpaceParams& params, unsigned radius, Side side) {
    const Group& group = params.group();
    const Weight& w = *params.weight;
    group.require(g);
    NormEstimate est{DyadicValue{}, group.identity(), std::nullopt,
                     "t in ball(" + std::to_string(radius) + ") of " + group.name()};
    bool first = true;
    group.for_each_in_ball(radius, [&](const GroupElement& t) {
        GroupElement moved = side == Side::Left ? group.multiply(g, t) : group.multiply(t, g);
        DyadicValue ratio = w.eval(moved) / w.eval(t);
        if (first || est.lower_bound < ratio) {
            est.lower_bound = ratio;
            est.attained_at = t;
            first = false;
        }
    });
    est.analytic = side == Side::Left ? w.left_bound(g) : w.right_bound(g);
    if (!est.consistent()) {
        throw InvariantViolation("sampled ratio " + est.lower_bound.str() + " at t = " + to_string(est.attained_at) +
                                 " exceeds the declared bound " + est.analytic->value.str() + " on ||T_" + to_string(g) +
                                 "|| for weight " + w.describe());
    }
    return est;
}

}  // namespace

NormEstimate translation_norm(const GroupElement& s, const SpaceParams& params, unsigned search_radius) {
    return ratio_scan(s, params, search_radius, Side::Left);
}

std::pair<NormEstimate, NormEstimate> left_right_functionals(const GroupElement& g, const SpaceParams& params,
                                                             unsigned search_radius) {
    return {ratio_scan(g, params, search_radius, Side::Left), ratio_scan(g, params, search_radius, Side::Right)};
}

std::vector<AdmissibilityEntry> admissibility_report(const SubsetSpec& s, const SpaceParams& params, std::size_t count,
                                                     unsigned search_radius) {
    std::vector<AdmissibilityEntry> out;
    for (const auto& g : s.take(count)) {
        NormEstimate full = translation_norm(g, params, search_radius);
        bool unproven = false;
        if (!full.analytic) {
            NormEstimate half = translation_norm(g, params, search_radius / 2);
            unproven = half.lower_bound < full.lower_bound;
        }
        out.push_back(AdmissibilityEntry{g, std::move(full), unproven});
    }
    return out;
}

}  // namespace wlp
