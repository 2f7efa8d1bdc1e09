#include "wlp/constructor.hpp"

#include "wlp/errors.hpp"

namespace wlp {

namespace {

unsigned require_integer_p(const SpaceParams& params) {
    if (!params.exact()) {
        throw UsageError("the constructor runs on the exact pipeline only: integer p and an exact weight");
    }
    return *params.integer_p();
}

FinSupFun assemble_x(const Group& group, const TargetSchedule& schedule, const std::vector<GroupElement>& witnesses,
                     const std::vector<FiniteSet>& sets) {
    FinSupFun x;
    for (std::size_t k = 1; k < witnesses.size(); ++k) {
        x = x + translate(group, group.invert(witnesses[k]), schedule.target(k).restricted(sets[k]));
    }
    return x;
}

Assembly build(const TargetSchedule& schedule, std::vector<GroupElement> witnesses, const SpaceParams& params) {
    const Group& group = params.group();
    Assembly a;
    a.schedule = schedule;
    a.witnesses = std::move(witnesses);
    a.sets.push_back(FiniteSet{});
    std::vector<Rational> coefficients{0};
    for (std::size_t n = 1; n < a.witnesses.size(); ++n) {
        a.sets.push_back(schedule.target(n).support());
        coefficients.push_back(schedule.sup_power(n));
    }

    SeriesCertificate cert{a.witnesses, a.sets, coefficients, 0, {}};
    SeriesTerms terms = series_terms(params, a.witnesses, a.sets, coefficients);
    cert.total = terms.total;
    CertificateCheck check = recheck_certificate(cert, params);
    if (!check.disjoint) {
        auto [k, n] = *check.collision;
        throw ConstructionError("t_" + std::to_string(k) + "^-1 E_" + std::to_string(k) + " and t_" + std::to_string(n) +
                                "^-1 E_" + std::to_string(n) + " intersect (t_" + std::to_string(k) + " = " +
                                to_string(a.witnesses[k]) + ", t_" + std::to_string(n) + " = " + to_string(a.witnesses[n]) + ")");
    }

    a.total = terms.total;
    a.eps.push_back(0);
    for (std::size_t n = 1; n < a.witnesses.size(); ++n) a.eps.push_back(terms.row_sum(n));
    a.x = assemble_x(group, schedule, a.witnesses, a.sets);
    return a;
}

}  // namespace

TargetSchedule schedule_targets(const std::vector<FinSupFun>& targets, std::size_t n_stages, const SpaceParams& params) {
    const unsigned p = require_integer_p(params);
    if (targets.empty()) throw ValidationError("the target list is empty");
    if (n_stages < targets.size()) {
        throw ValidationError("N = " + std::to_string(n_stages) + " stages cannot schedule " + std::to_string(targets.size()) +
                              " targets");
    }
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i].empty()) throw ValidationError("target " + std::to_string(i + 1) + " is the zero function");
        for (const auto& [g, v] : targets[i].values()) params.group().require(g);
    }
    TargetSchedule s;
    s.base = targets;
    for (std::size_t n = 0; n < n_stages; ++n) {
        s.order.push_back(n % targets.size());
        s.sup_powers.push_back(ipow(targets[n % targets.size()].sup_abs(), p));
    }
    return s;
}

AssembleResult assemble(const TargetSchedule& schedule, const SubsetSpec& s, const SpaceParams& params,
                        SeriesOptions options) {
    require_integer_p(params);
    std::vector<FiniteSet> sets;
    for (std::size_t n = 1; n <= schedule.size(); ++n) sets.push_back(schedule.target(n).support());
    options.coefficients = schedule.sup_powers;
    options.require_increasing = false;

    SeriesResult found = series_criterion_search(s, params, sets, options);
    if (!found.ok()) return AssembleResult{std::nullopt, std::move(found.failure)};

    Assembly a = build(schedule, found.certificate->witnesses, params);
    a.stages = found.certificate->stages;
    return AssembleResult{std::move(a), std::nullopt};
}

Assembly assemble_with_witnesses(const TargetSchedule& schedule, const std::vector<GroupElement>& witnesses,
                                 const SpaceParams& params) {
    require_integer_p(params);
    if (witnesses.size() != schedule.size()) {
        throw UsageError("need one witness per scheduled target (" + std::to_string(schedule.size()) + ")");
    }
    std::vector<GroupElement> all{params.group().identity()};
    for (const auto& t : witnesses) {
        params.group().require(t);
        all.push_back(t);
    }
    return build(schedule, std::move(all), params);
}

bool VerifyReport::ok() const noexcept {
    if (!x_matches || !disjoint || !eps_sum_matches) return false;
    for (const auto& r : rows) {
        if (!r.bound_ok || !r.identity_ok) return false;
    }
    return true;
}

VerifyReport verify(const Assembly& a, const SpaceParams& params) {
    require_integer_p(params);
    const Group& group = params.group();
    VerifyReport report;
    auto note = [&](const std::string& problem) {
        if (report.first_problem.empty()) report.first_problem = problem;
    };

    report.x_matches = assemble_x(group, a.schedule, a.witnesses, a.sets) == a.x;
    if (!report.x_matches) note("X differs from the sum of its translated pieces");

    std::vector<Rational> coefficients{0};
    for (std::size_t n = 1; n < a.witnesses.size(); ++n) coefficients.push_back(a.schedule.sup_power(n));
    SeriesCertificate cert{a.witnesses, a.sets, coefficients, a.total, {}};
    CertificateCheck check = recheck_certificate(cert, params);
    report.disjoint = check.disjoint;
    if (!check.disjoint) note("translated supports intersect");

    SeriesTerms terms = series_terms(params, a.witnesses, a.sets, coefficients);
    Rational eps_sum = terms.row_sum(0);
    for (std::size_t n = 1; n < a.eps.size(); ++n) eps_sum += a.eps[n];
    report.eps_sum_matches = eps_sum == a.total && check.total_matches;
    if (!report.eps_sum_matches) note("sum of eps_n and the origin row differs from the stored total");

    for (std::size_t n = 1; n < a.witnesses.size(); ++n) {
        VerifyRow row;
        row.n = n;
        const FinSupFun& target = a.schedule.target(n);
        FinSupFun diff = translate(group, a.witnesses[n], a.x) - target;
        row.lhs = *weighted_norm(diff, params).exact;
        row.eps = a.eps.at(n);
        row.bound = row.eps + pow2(-static_cast<std::int64_t>(n));
        row.mass_loss = *weighted_norm(target - target.restricted(a.sets[n]), params).exact;

        bool pieces_match = true;
        std::size_t covered = 0;
        for (std::size_t k = 1; k < a.witnesses.size(); ++k) {
            if (k == n) continue;
            GroupElement shift = group.multiply(a.witnesses[n], group.invert(a.witnesses[k]));
            FinSupFun piece = translate(group, shift, a.schedule.target(k).restricted(a.sets[k]));
            row.pieces_sum += *weighted_norm(piece, params).exact;
            covered += piece.size();
            if (!(diff.restricted(piece.support()) == piece)) pieces_match = false;
        }
        // Mass loss lives on E_n's complement; in the discrete case it is empty.
        row.identity_ok = pieces_match && covered == diff.size() && row.lhs == row.pieces_sum + row.mass_loss;
        row.bound_ok = row.lhs <= row.bound;
        row.equals_eps = row.lhs == row.eps;
        if (!row.identity_ok) note("n = " + std::to_string(n) + ": the difference does not split into its pieces");
        if (!row.bound_ok) {
            note("n = " + std::to_string(n) + ": " + to_string(row.lhs) + " exceeds eps_n + 2^-n = " + to_string(row.bound));
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace wlp
