#include "wlp/criteria.hpp"

#include "wlp/errors.hpp"

#include <algorithm>

namespace wlp {

DyadicValue symmetric_value(const Weight& weight, const GroupElement& s) {
    DyadicValue a = weight.eval(s);
    DyadicValue b = weight.eval(weight.group().invert(s));
    return a < b ? b : a;
}

std::vector<ThresholdResult> abelian_inf_search(const SubsetSpec& s, const Weight& weight,
                                                const std::vector<DyadicValue>& thresholds, std::size_t horizon) {
    std::vector<ThresholdResult> out;
    for (const auto& t : thresholds) out.push_back(ThresholdResult{t, std::nullopt, 0});
    std::size_t open = out.size();
    std::size_t index = 0;
    s.enumerate(horizon, [&](const GroupElement& g) {
        DyadicValue v = symmetric_value(weight, g);
        for (auto& r : out) {
            if (r.found()) continue;
            r.scanned = index + 1;
            if (v < r.threshold) {
                r.witness = InfWitness{g, v, r.threshold, index};
                --open;
            }
        }
        ++index;
        return open > 0;
    });
    return out;
}

DyadicValue sup_over_translates(const Weight& weight, const GroupElement& s, const FiniteSet& k) {
    const Group& group = weight.group();
    const GroupElement s_inv = group.invert(s);
    std::optional<DyadicValue> best;
    for (const auto& x : k) {
        for (const auto& shift : {s, s_inv}) {
            DyadicValue v = weight.eval(group.multiply(shift, x));
            if (!best || *best < v) best = v;
        }
    }
    if (!best) throw UsageError("the set K must be nonempty");
    return *best;
}

ThresholdResult esssup_sufficient_check(const SubsetSpec& s, const Weight& weight, const FiniteSet& k,
                                        const DyadicValue& epsilon, std::size_t horizon) {
    ThresholdResult result{epsilon, std::nullopt, 0};
    std::size_t index = 0;
    s.enumerate(horizon, [&](const GroupElement& g) {
        DyadicValue v = sup_over_translates(weight, g, k);
        result.scanned = ++index;
        if (v < epsilon) {
            result.witness = InfWitness{g, v, epsilon, index - 1};
            return false;
        }
        return true;
    });
    return result;
}

// ---------------------------------------------------------------- series criterion

namespace {

void require_exact(const SpaceParams& params) {
    if (!params.exact()) {
        throw UsageError("series sums are certified only for integer p and an exact weight (got p = " +
                         std::to_string(params.p) + ", weight " + params.weight->describe() + ")");
    }
}

// sum over f in F of w(x f)^p; left translation is injective, so no set is built.
Rational translated_mass(const SpaceParams& params, const GroupElement& x, const FiniteSet& f) {
    const Group& group = params.group();
    const unsigned p = *params.integer_p();
    Rational sum = 0;
    for (const auto& t : f) sum += params.weight->eval(group.multiply(x, t)).pow(p).to_rational();
    return sum;
}

// Like translated_mass, giving up once the sum passes `limit`.
std::optional<Rational> translated_mass_below(const SpaceParams& params, const GroupElement& x, const FiniteSet& f,
                                              const Rational& limit) {
    const Group& group = params.group();
    const unsigned p = *params.integer_p();
    Rational sum = 0;
    for (const auto& t : f) {
        sum += params.weight->eval(group.multiply(x, t)).pow(p).to_rational();
        if (sum > limit) return std::nullopt;
    }
    return sum;
}

struct Choice {
    Rational increment;
    std::size_t index;
    GroupElement element;
};

struct StageScan {
    std::vector<Choice> best;  // sorted by (increment, index), at most keep entries
    std::size_t scanned = 0;
    std::size_t admissible = 0;
    std::size_t forbidden_size = 0;
    bool enumeration_ended = false;
};

class SeriesSearch {
public:
    SeriesSearch(const SubsetSpec& s, const SpaceParams& params, const std::vector<FiniteSet>& sets, const SeriesOptions& o)
        : subset_(s), params_(params), group_(params.group()), options_(o) {
        sets_.push_back(FiniteSet{});
        for (const auto& f : sets) sets_.push_back(f);
        coefficients_.push_back(0);
        for (std::size_t n = 1; n < sets_.size(); ++n) {
            coefficients_.push_back(options_.coefficients.empty() ? Rational(1) : options_.coefficients.at(n - 1));
        }
    }

    SeriesResult run() {
        const unsigned depth = static_cast<unsigned>(sets_.size()) - 1;
        std::vector<GroupElement> chosen{group_.identity()};
        std::vector<StageRecord> records;
        std::vector<std::vector<Choice>> alternatives(depth + 1);
        std::vector<unsigned> backtracks(depth + 1, 0);

        unsigned n = 1;
        while (n <= depth) {
            const Rational budget = options_.budget0 * pow2(-static_cast<std::int64_t>(n));
            StageScan scan;
            try {
                scan = scan_stage(n, chosen);
            } catch (const ResourceError& e) {
                return fail(SeriesFailureReason::Cap, n, std::nullopt, budget, e.what(), chosen, records);
            }
            if (!scan.best.empty() && scan.best.front().increment <= budget) {
                Choice pick = scan.best.front();
                alternatives[n].clear();
                for (auto it = scan.best.begin() + 1; it != scan.best.end(); ++it) {
                    if (it->increment <= budget) alternatives[n].push_back(*it);
                }
                chosen.push_back(pick.element);
                records.push_back(StageRecord{n, pick.index, scan.scanned, scan.forbidden_size, pick.increment, budget,
                                              backtracks[n]});
                ++n;
                continue;
            }
            const unsigned prev = n - 1;
            if (prev >= 1 && backtracks[prev] < options_.backtrack_limit && !alternatives[prev].empty()) {
                Choice alt = alternatives[prev].front();
                alternatives[prev].erase(alternatives[prev].begin());
                ++backtracks[prev];
                chosen.back() = alt.element;
                StageRecord& rec = records.back();
                rec.candidate_index = alt.index;
                rec.increment = alt.increment;
                rec.backtracks = backtracks[prev];
                continue;
            }
            if (scan.admissible == 0) {
                std::string why = scan.enumeration_ended
                                      ? "S has no admissible element outside the forbidden region"
                                      : "no admissible candidate among the first " + std::to_string(scan.scanned);
                return fail(SeriesFailureReason::EnumeratorExhausted, n, std::nullopt, budget, why, chosen, records);
            }
            const Rational best = scan.best.front().increment;
            return fail(SeriesFailureReason::Budget, n, best, budget,
                        "best increment " + to_string(best) + " exceeds the stage budget " + to_string(budget), chosen,
                        records);
        }

        SeriesCertificate cert = make_certificate(chosen, records);
        return SeriesResult{std::move(cert), std::nullopt};
    }

private:
    StageScan scan_stage(unsigned n, const std::vector<GroupElement>& chosen) const {
        const FiniteSet& fn = sets_[n];
        FiniteSet forbidden;
        for (unsigned k = 1; k < n; ++k) {
            FiniteSet region = group_.right_translate_set(group_.set_product(fn, group_.inverse_set(sets_[k])), chosen[k]);
            for (const auto& g : region) forbidden.insert(g);
            if (forbidden.size() > group_.cap()) throw ResourceError("forbidden region exceeds the enumeration cap");
        }

        StageScan scan;
        scan.forbidden_size = forbidden.size();
        const std::size_t keep = options_.backtrack_limit + 1;
        std::size_t index = 0;
        std::size_t visited = subset_.enumerate(options_.horizon, [&](const GroupElement& s) {
            const std::size_t my_index = index++;
            if (forbidden.contains(s)) return true;
            ++scan.admissible;
            // Abandon once the candidate cannot enter the kept list.
            std::optional<Rational> limit;
            if (scan.best.size() >= keep) limit = scan.best.back().increment;
            auto inc = increment(n, s, chosen, limit);
            if (!inc) return true;
            Choice c{*inc, my_index, s};
            auto pos = std::upper_bound(scan.best.begin(), scan.best.end(), c, [](const Choice& a, const Choice& b) {
                return a.increment < b.increment || (a.increment == b.increment && a.index < b.index);
            });
            scan.best.insert(pos, std::move(c));
            if (scan.best.size() > keep) scan.best.pop_back();
            return true;
        });
        scan.scanned = visited;
        scan.enumeration_ended = visited < options_.horizon;
        return scan;
    }

    // Row terms c_k W(s s_k^-1 F_k) for 1 <= k < n and column terms
    // c_n W(s_m s^-1 F_n) for 0 <= m < n.
    std::optional<Rational> increment(unsigned n, const GroupElement& s, const std::vector<GroupElement>& chosen,
                                      const std::optional<Rational>& limit) const {
        Rational total = 0;
        auto add = [&](const GroupElement& x, const FiniteSet& f, const Rational& c) {
            if (f.empty() || c == 0) return true;
            if (!limit) {
                total += c * translated_mass(params_, x, f);
                return true;
            }
            auto m = translated_mass_below(params_, x, f, (*limit - total) / c);
            if (!m) return false;
            total += c * *m;
            return !(total > *limit);
        };
        const GroupElement s_inv = group_.invert(s);
        for (unsigned k = 1; k < n; ++k) {
            if (!add(group_.multiply(s, group_.invert(chosen[k])), sets_[k], coefficients_[k])) return std::nullopt;
        }
        for (unsigned m = 0; m < n; ++m) {
            if (!add(group_.multiply(chosen[m], s_inv), sets_[n], coefficients_[n])) return std::nullopt;
        }
        return total;
    }

    SeriesCertificate make_certificate(const std::vector<GroupElement>& chosen, const std::vector<StageRecord>& records) const {
        SeriesCertificate cert;
        cert.witnesses = chosen;
        cert.sets.assign(sets_.begin(), sets_.begin() + static_cast<std::ptrdiff_t>(chosen.size()));
        cert.coefficients.assign(coefficients_.begin(), coefficients_.begin() + static_cast<std::ptrdiff_t>(chosen.size()));
        cert.stages = records;
        cert.total = series_terms(params_, cert.witnesses, cert.sets, cert.coefficients).total;
        return cert;
    }

    SeriesResult fail(SeriesFailureReason reason, unsigned stage, std::optional<Rational> best, const Rational& budget,
                      std::string message, const std::vector<GroupElement>& chosen,
                      const std::vector<StageRecord>& records) const {
        SeriesFailure f{reason, stage, std::move(best), budget, std::move(message), make_certificate(chosen, records)};
        return SeriesResult{std::nullopt, std::move(f)};
    }

    const SubsetSpec& subset_;
    const SpaceParams& params_;
    const Group& group_;
    const SeriesOptions& options_;
    std::vector<FiniteSet> sets_;
    std::vector<Rational> coefficients_;
};

}  // namespace

Rational SeriesTerms::row_sum(std::size_t n) const {
    Rational sum = 0;
    for (const auto& t : term.at(n)) sum += t;
    return sum;
}

SeriesTerms series_terms(const SpaceParams& params, const std::vector<GroupElement>& witnesses,
                         const std::vector<FiniteSet>& sets, const std::vector<Rational>& coefficients) {
    require_exact(params);
    if (sets.size() != witnesses.size() || coefficients.size() != witnesses.size()) {
        throw UsageError("series_terms needs one set and one coefficient per witness");
    }
    const Group& group = params.group();
    const std::size_t count = witnesses.size();
    SeriesTerms out;
    out.term.assign(count, std::vector<Rational>(count, Rational(0)));
    for (std::size_t k = 0; k < count; ++k) {
        if (sets[k].empty() || coefficients[k] == 0) continue;
        const GroupElement sk_inv = group.invert(witnesses[k]);
        for (std::size_t n = 0; n < count; ++n) {
            if (n == k) continue;
            out.term[n][k] = coefficients[k] * translated_mass(params, group.multiply(witnesses[n], sk_inv), sets[k]);
            out.total += out.term[n][k];
        }
    }
    return out;
}

std::string to_string(SeriesFailureReason r) {
    switch (r) {
        case SeriesFailureReason::Budget: return "budget";
        case SeriesFailureReason::Cap: return "cap";
        case SeriesFailureReason::EnumeratorExhausted: return "enumerator-exhausted";
    }
    return "?";
}

SeriesResult series_criterion_search(const SubsetSpec& s, const SpaceParams& params, const std::vector<FiniteSet>& sets,
                                     const SeriesOptions& options) {
    require_exact(params);
    if (!(s.group() == params.group())) throw UsageError("S and the weight live on different groups");
    if (sets.empty()) throw UsageError("series search needs at least one set F_1");
    if (!options.coefficients.empty() && options.coefficients.size() != sets.size()) {
        throw UsageError("series search needs one coefficient per stage");
    }
    if (options.budget0 <= 0) throw ValidationError("budget0 must be positive");
    for (std::size_t i = 1; options.require_increasing && i < sets.size(); ++i) {
        for (const auto& g : sets[i - 1]) {
            if (!sets[i].contains(g)) throw ValidationError("the sets F_n must be increasing (F_" + std::to_string(i) +
                                                            " is not contained in F_" + std::to_string(i + 1) + ")");
        }
    }
    return SeriesSearch(s, params, sets, options).run();
}

CertificateCheck recheck_certificate(const SeriesCertificate& cert, const SpaceParams& params) {
    const Group& group = params.group();
    CertificateCheck check;
    std::vector<FiniteSet> pulled;
    for (std::size_t n = 0; n < cert.witnesses.size(); ++n) {
        pulled.push_back(group.translate_set(group.invert(cert.witnesses[n]), cert.sets[n]));
    }
    for (std::size_t n = 0; n < pulled.size() && check.disjoint; ++n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (!disjoint(pulled[n], pulled[k])) {
                check.disjoint = false;
                check.collision = std::make_pair(static_cast<unsigned>(k), static_cast<unsigned>(n));
                break;
            }
        }
    }
    check.recomputed_total = series_terms(params, cert.witnesses, cert.sets, cert.coefficients).total;
    check.total_matches = check.recomputed_total == cert.total;
    return check;
}

// ---------------------------------------------------------------- single operators

SingleTranslationReport single_translation_check(const GroupElement& g, const Weight& weight,
                                                 const std::vector<DyadicValue>& thresholds, std::size_t horizon) {
    const Group& group = weight.group();
    group.require(g);
    SingleTranslationReport report{g, {}, {}, DyadicValue{}};
    for (const auto& t : thresholds) report.thresholds.push_back(ThresholdResult{t, std::nullopt, 0});

    const DyadicValue one{};
    bool first = true;
    GroupElement power = g;
    for (std::size_t n = 1; n <= horizon; ++n) {
        DyadicValue forward = weight.eval(power);
        DyadicValue backward = weight.eval(group.invert(power));
        if (!(forward == one) || !(backward == one)) report.non_unit_powers.push_back(n);
        DyadicValue v = forward < backward ? backward : forward;
        if (first || v < report.min_value) {
            report.min_value = v;
            first = false;
        }
        for (auto& r : report.thresholds) {
            if (r.found()) continue;
            r.scanned = n;
            if (v < r.threshold) r.witness = InfWitness{power, v, r.threshold, n - 1};
        }
        power = group.multiply(power, g);
    }
    return report;
}

}  // namespace wlp
