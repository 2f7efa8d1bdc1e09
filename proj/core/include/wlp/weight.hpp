#pragma once

#include "wlp/dyadic.hpp"
#include "wlp/group.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>

namespace wlp {

/// A proven upper bound on a translation functional, with where it comes from.
struct DeclaredBound {
    DyadicValue value;
    std::string provenance;
};

/// A weight on a discrete group: a strictly positive function, total on
/// its group. Implementations are immutable after construction, so
/// eval() may be called concurrently.
class Weight {
public:
    explicit Weight(Group group) : group_(std::move(group)) {}
    virtual ~Weight() = default;

    Weight(const Weight&) = delete;
    Weight& operator=(const Weight&) = delete;

    const Group& group() const noexcept { return group_; }

    virtual std::string id() const = 0;
    /// Human-readable parameter summary, e.g. "alpha=1".
    virtual std::string describe() const { return id(); }

    virtual DyadicValue eval(const GroupElement& g) const = 0;
    DyadicValue operator()(const GroupElement& g) const { return eval(g); }

    /// False when some values live on the floating-point track.
    virtual bool exact() const { return true; }

    /// Bound on L(g) = ||T_g|| = sup_t w(gt)/w(t), when the construction proves one.
    virtual std::optional<DeclaredBound> left_bound(const GroupElement& /*g*/) const { return std::nullopt; }
    /// Bound on R(g) = sup_t w(tg)/w(t).
    virtual std::optional<DeclaredBound> right_bound(const GroupElement& /*g*/) const { return std::nullopt; }

private:
    Group group_;
};

using WeightPtr = std::shared_ptr<const Weight>;

/// w == 1. Every translation is an isometry.
class UnitWeight final : public Weight {
public:
    explicit UnitWeight(Group group) : Weight(std::move(group)) {}
    std::string id() const override { return "unit"; }
    DyadicValue eval(const GroupElement& g) const override;
    std::optional<DeclaredBound> left_bound(const GroupElement& g) const override;
    std::optional<DeclaredBound> right_bound(const GroupElement& g) const override;
};

/// w(n) = 2^(-alpha |n|) on Z.
DyadicValue eval_salas_z(const Rational& alpha, const BigInt& n);

class SalasWeight final : public Weight {
public:
    explicit SalasWeight(Rational alpha);
    std::string id() const override { return "salas"; }
    std::string describe() const override;
    const Rational& alpha() const noexcept { return alpha_; }
    DyadicValue eval(const GroupElement& g) const override;
    bool exact() const override;
    std::optional<DeclaredBound> left_bound(const GroupElement& g) const override;
    std::optional<DeclaredBound> right_bound(const GroupElement& g) const override;

private:
    Rational alpha_;
};

/// The Z^2 weight: 2^(k-n) on the l-infinity shell of radius k <= n around
/// (n, 2^n) or (-n, -2^n), n >= 1; 1 elsewhere. Where shells of different n
/// overlap the smallest value wins.
DyadicValue eval_z2(const LatticePoint& pt);

class Z2Weight final : public Weight {
public:
    Z2Weight();
    std::string id() const override { return "z2"; }
    DyadicValue eval(const GroupElement& g) const override;
    /// log2 w is 1-Lipschitz for the l-infinity metric, so both functionals
    /// are at most 2^|g|_inf.
    std::optional<DeclaredBound> left_bound(const GroupElement& g) const override;
    std::optional<DeclaredBound> right_bound(const GroupElement& g) const override;
};

/// Weight given by an explicit table; elements not listed take `fallback`.
class TableWeight final : public Weight {
public:
    TableWeight(Group group, std::map<GroupElement, DyadicValue> table, DyadicValue fallback = {});

    /// CSV with header "element,exponent" (value 2^exponent) or
    /// "element,value" (positive rational). Elements are written as
    /// space-separated coordinates or as word text ("a^4 b").
    static std::shared_ptr<TableWeight> load_csv(const Group& group, const std::string& path, DyadicValue fallback = {});
    static std::shared_ptr<TableWeight> parse_csv(const Group& group, std::string_view text, DyadicValue fallback = {});

    std::string id() const override { return "table"; }
    std::string describe() const override;
    DyadicValue eval(const GroupElement& g) const override;
    bool exact() const override;
    std::size_t size() const noexcept { return table_.size(); }

private:
    std::map<GroupElement, DyadicValue> table_;
    DyadicValue fallback_;
};

/// Parses a textual element for the given group: "3 -5" for lattices,
/// "a^4 b" for free groups.
GroupElement parse_element(const Group& group, std::string_view text);

}  // namespace wlp
