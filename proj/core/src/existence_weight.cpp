#include "wlp/existence_weight.hpp"

#include "wlp/errors.hpp"

namespace wlp {

namespace {

FiniteSet unite(FiniteSet a, const FiniteSet& b) {
    for (const auto& g : b) a.insert(g);
    return a;
}

// U_k s U_k
FiniteSet two_sided(const Group& group, const FiniteSet& u, const GroupElement& s) {
    return group.set_product(group.right_translate_set(u, s), u);
}

}  // namespace

ExistenceWeight::ExistenceWeight(Group group, unsigned radius, std::vector<GroupElement> points)
    : Weight(std::move(group)), radius_(radius), points_(std::move(points)) {}

std::shared_ptr<ExistenceWeight> ExistenceWeight::build(const Group& group, unsigned generating_radius,
                                                        std::vector<GroupElement> points) {
    if (generating_radius < 1) throw ValidationError("existence weight needs generating_radius >= 1");
    if (points.empty()) throw ValidationError("existence weight needs at least one point s_n");
    for (const auto& s : points) group.require(s);

    std::shared_ptr<ExistenceWeight> w(new ExistenceWeight(group, generating_radius, std::move(points)));
    const auto n_points = static_cast<unsigned>(w->points_.size());

    // U_1 = U; U'_n = {g_n} u U_1 U_(n-1) u ... u U_(n-1) U_1; U_n = U'_n u U'_n^-1.
    // U generates G here, so every coset representative g_n is e.
    w->nested_.push_back(group.ball(generating_radius));
    for (unsigned n = 2; n <= n_points + 1; ++n) {
        FiniteSet next;
        next.insert(group.identity());
        for (unsigned k = 1; k < n; ++k) {
            next = unite(std::move(next), group.set_product(w->nested_[k - 1], w->nested_[n - k - 1]));
        }
        next = unite(next, group.inverse_set(next));
        w->nested_.push_back(std::move(next));
    }

    std::vector<FiniteSet> regions;
    for (unsigned n = 1; n <= n_points; ++n) {
        const GroupElement& s = w->points_[n - 1];
        const FiniteSet& u = w->nested_[n];  // U_(n+1)
        FiniteSet plus = two_sided(group, u, s);
        FiniteSet minus = two_sided(group, u, group.invert(s));
        if (!disjoint(plus, minus)) {
            throw ConstructionError("U_" + std::to_string(n + 1) + " s_" + std::to_string(n) + " U_" + std::to_string(n + 1) +
                                    " meets its mirror image for s_" + std::to_string(n) + " = " + to_string(s));
        }
        FiniteSet region = unite(std::move(plus), minus);
        for (unsigned m = 1; m < n; ++m) {
            if (!disjoint(regions[m - 1], region)) {
                throw ConstructionError("E_" + std::to_string(m) + " and E_" + std::to_string(n) + " intersect (s_" +
                                        std::to_string(m) + " = " + to_string(w->points_[m - 1]) + ", s_" + std::to_string(n) +
                                        " = " + to_string(s) + ")");
            }
        }
        regions.push_back(std::move(region));
    }

    // Shell classification, smallest k first.
    for (unsigned n = 1; n <= n_points; ++n) {
        const GroupElement& s = w->points_[n - 1];
        const GroupElement s_inv = group.invert(s);
        w->levels_.emplace(s, Level{n, 0});
        w->levels_.emplace(s_inv, Level{n, 0});
        for (unsigned k = 1; k <= n; ++k) {
            const FiniteSet& u = w->nested_[k - 1];
            for (const auto& g : two_sided(group, u, s)) w->levels_.emplace(g, Level{n, k});
            for (const auto& g : two_sided(group, u, s_inv)) w->levels_.emplace(g, Level{n, k});
        }
    }
    return w;
}

std::string ExistenceWeight::describe() const {
    std::string out = "existence{radius=" + std::to_string(radius_) + ",points=[";
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (i) out += ",";
        out += to_string(points_[i]);
    }
    return out + "]}";
}

std::optional<ExistenceWeight::Level> ExistenceWeight::level_of(const GroupElement& g) const {
    auto it = levels_.find(g);
    if (it == levels_.end()) return std::nullopt;
    return it->second;
}

DyadicValue ExistenceWeight::eval(const GroupElement& g) const {
    group().require(g);
    if (auto level = level_of(g)) return DyadicValue::pow2(BigInt(level->k) - BigInt(level->n));
    return {};
}

const FiniteSet& ExistenceWeight::level_set(unsigned n) const {
    if (n < 1 || n > nested_.size()) throw UsageError("U_" + std::to_string(n) + " was not constructed");
    return nested_[n - 1];
}

unsigned ExistenceWeight::level_index(const GroupElement& g) const {
    group().require(g);
    if (g == group().identity()) return 0;
    for (unsigned j = 1; j <= nested_.size(); ++j) {
        if (nested_[j - 1].contains(g)) return j;
    }
    // Beyond the stored levels U_n = ball(n * radius).
    BigInt len = word_length(g);
    BigInt j = (len + radius_ - 1) / radius_;
    return static_cast<unsigned>(to_int64(j));
}

std::optional<DeclaredBound> ExistenceWeight::left_bound(const GroupElement& g) const {
    unsigned j = level_index(g);
    return DeclaredBound{DyadicValue::pow2(BigInt(j)), "2^-j <= w(gt)/w(t) <= 2^j for g in U_" + std::to_string(j)};
}

std::optional<DeclaredBound> ExistenceWeight::right_bound(const GroupElement& g) const {
    unsigned j = level_index(g);
    return DeclaredBound{DyadicValue::pow2(BigInt(j)), "2^-j <= w(tg)/w(t) <= 2^j for g in U_" + std::to_string(j)};
}

}  // namespace wlp
