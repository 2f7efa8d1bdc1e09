#pragma once

// Builds a finitely supported X whose translates T_(t_n) X approximate a
// repeating schedule of targets P_n, and checks the approximation bound
// ||T_(t_n) X - P_n||^p <= eps_n + 2^-n exactly.

#include "wlp/criteria.hpp"
#include "wlp/space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wlp {

struct TargetSchedule {
    std::vector<FinSupFun> base;        // Q_1 .. Q_m
    std::vector<std::size_t> order;     // P_n = base[order[n - 1]]
    std::vector<Rational> sup_powers;   // p_n = ||P_n||_inf^p, n = 1 .. N

    std::size_t size() const noexcept { return order.size(); }
    /// P_n, n >= 1.
    const FinSupFun& target(std::size_t n) const { return base.at(order.at(n - 1)); }
    const Rational& sup_power(std::size_t n) const { return sup_powers.at(n - 1); }
};

/// Round-robin arrangement of n_stages targets. Needs integer p.
TargetSchedule schedule_targets(const std::vector<FinSupFun>& targets, std::size_t n_stages, const SpaceParams& params);

struct Assembly {
    TargetSchedule schedule;
    std::vector<GroupElement> witnesses;  // t_0 = e, t_1 .. t_N
    std::vector<FiniteSet> sets;          // E_0 = {}, E_n = supp P_n
    FinSupFun x;
    /// eps[n] = sum over k != n, k >= 1 of p_k ||w||^p on t_n t_k^-1 E_k; eps[0] = 0.
    std::vector<Rational> eps;
    /// Double sum with coefficients p_k, including the row of t_0 = e.
    Rational total = 0;
    std::vector<StageRecord> stages;
};

struct AssembleResult {
    std::optional<Assembly> assembly;
    std::optional<SeriesFailure> failure;

    bool ok() const noexcept { return assembly.has_value(); }
};

/// Searches t_1 .. t_N in S with the series budgets weighted by p_k.
AssembleResult assemble(const TargetSchedule& schedule, const SubsetSpec& s, const SpaceParams& params,
                        SeriesOptions options = {});

/// Uses the given t_1 .. t_N. Throws ConstructionError when two of the
/// t_k^-1 E_k meet.
Assembly assemble_with_witnesses(const TargetSchedule& schedule, const std::vector<GroupElement>& witnesses,
                                 const SpaceParams& params);

struct VerifyRow {
    std::size_t n = 0;
    Rational lhs = 0;         // ||T_(t_n) X - P_n||^p
    Rational eps = 0;
    Rational bound = 0;       // eps_n + 2^-n
    Rational mass_loss = 0;   // ||P_n||^p off E_n; zero in the discrete case
    Rational pieces_sum = 0;  // sum over k != n of ||T_(t_n t_k^-1)(P_k 1_(E_k))||^p
    bool bound_ok = false;
    bool identity_ok = false; // the difference splits exactly into the pieces
    bool equals_eps = false;  // lhs == eps_n (targets of constant modulus)
};

struct VerifyReport {
    std::vector<VerifyRow> rows;
    bool x_matches = false;  // X == sum of T_(t_k^-1)(P_k 1_(E_k))
    bool disjoint = false;
    /// sum of eps_n plus the row of t_0 equals the stored total.
    bool eps_sum_matches = false;
    std::string first_problem;

    bool ok() const noexcept;
};

VerifyReport verify(const Assembly& assembly, const SpaceParams& params);

}  // namespace wlp
