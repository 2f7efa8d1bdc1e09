#include "wlp/scenario.hpp"

#include "wlp/criteria.hpp"
#include "wlp/errors.hpp"
#include "wlp/existence_weight.hpp"
#include "wlp/plane_strip.hpp"
#include "wlp/weights_f2.hpp"

#include <chrono>
#include <sstream>

namespace wlp {

namespace {

struct Check {
    std::string name;
    std::string statement;
    bool holds = false;
    Json details;
};

class Run {
public:
    explicit Run(std::string id) : id_(std::move(id)), start_(std::chrono::steady_clock::now()) {}

    void add(Check c) { checks_.push_back(std::move(c)); }
    std::ostringstream& csv() { return csv_; }

    Report finish() {
        Report r;
        bool all = true;
        Json checks = Json::array();
        for (const auto& c : checks_) {
            all = all && c.holds;
            checks.push_back(Json{{"name", c.name}, {"statement", c.statement}, {"holds", c.holds}, {"details", c.details}});
            r.summary += std::string(c.holds ? "[holds] " : "[FAILS] ") + c.statement + "\n";
        }
        r.summary = id_ + ": " + (all ? "all checks hold" : "some checks fail") + "\n" + r.summary;
        r.json["tool"] = "wlp";
        r.json["version"] = version();
        r.json["example"] = id_;
        r.json["all_hold"] = all;
        r.json["checks"] = std::move(checks);
        r.json["seed"] = nullptr;
        r.json["advisory"] =
            Json{{"wall_time_seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count()}};
        r.csv = csv_.str();
        return r;
    }

private:
    std::string id_;
    std::chrono::steady_clock::time_point start_;
    std::vector<Check> checks_;
    std::ostringstream csv_;
};

GroupElement z(long long n) { return LatticePoint{n}; }
GroupElement z2(long long a, long long b) { return LatticePoint{a, b}; }

// ---------------------------------------------------------------- existence weight

Report existence_weight(const ScenarioOverrides& o) {
    Run run("existence-weight");
    const Group group = Group::lattice(1, o.cap.value_or(default_enumeration_cap()));
    std::vector<GroupElement> points;
    BigInt ten = 1;
    for (int n = 1; n <= 6; ++n) {
        ten *= 10;
        points.push_back(LatticePoint(std::vector<BigInt>{ten}));
    }
    auto w = ExistenceWeight::build(group, 1, points);
    SpaceParams params(w, 1);

    Json values = Json::array();
    bool centres = true;
    for (unsigned n = 1; n <= points.size(); ++n) {
        DyadicValue expected = DyadicValue::pow2(-BigInt(n));
        bool ok = w->eval(points[n - 1]) == expected && w->eval(group.invert(points[n - 1])) == expected;
        centres = centres && ok;
        values.push_back(Json{{"n", n}, {"s_n", element_to_json(points[n - 1])}, {"value", dyadic_to_json(w->eval(points[n - 1]))}});
    }
    run.add({"centres", "w(s_n) = w(s_n^-1) = 2^-n for s_n = 10^n, n <= 6", centres, values});

    DyadicValue shell = w->eval(z(101));
    run.add({"shell", "w(10^2 + 1) = 2^-1 (first shell around s_2)", shell == DyadicValue::pow2(-1),
             Json{{"value", dyadic_to_json(shell)}}});

    bool nested = true;
    for (unsigned j = 1; j <= points.size(); ++j) {
        for (unsigned k = 1; j + k <= points.size() + 1; ++k) {
            for (const auto& g : group.set_product(w->level_set(j), w->level_set(k))) {
                nested = nested && w->level_set(j + k).contains(g);
            }
        }
    }
    run.add({"nesting", "U_j U_k is contained in U_(j+k) for all stored levels", nested, Json{}});

    const unsigned radius = static_cast<unsigned>(o.horizon.value_or(1000));
    bool bounded = true;
    Json scans = Json::array();
    for (const auto& g : group.ball(4)) {
        const BigInt j = group.word_length(g);
        auto [l, r] = left_right_functionals(g, params, radius);
        const DyadicValue bound = DyadicValue::pow2(j);
        bool ok = l.lower_bound <= bound && r.lower_bound <= bound;
        bounded = bounded && ok;
        scans.push_back(Json{{"g", element_to_json(g)}, {"L", estimate_to_json(l)}, {"R", estimate_to_json(r)}});
        run.csv() << to_string(g) << "," << l.lower_bound.log2() << "," << r.lower_bound.log2() << "\n";
    }
    run.add({"functionals",
             "L(g) and R(g) are at most 2^j for g in ball(j), j <= 4, scanned over ball(" + std::to_string(radius) + ")",
             bounded, scans});
    return run.finish();
}

// ---------------------------------------------------------------- F_2, non-dense weight

Report f2_admissible_nondense(const ScenarioOverrides& o) {
    Run run("f2-admissible-nondense");
    const Group group = Group::free(2, o.cap.value_or(default_enumeration_cap()));
    auto w = std::make_shared<F2NondenseWeight>(4);
    const unsigned radius = static_cast<unsigned>(o.horizon.value_or(12));

    std::size_t words = 0, suffix_bad = 0, growth_bad = 0;
    std::vector<GroupElement> letters = group.generators();
    for (const auto& g : group.generators()) letters.push_back(group.invert(g));
    group.for_each_in_ball(radius, [&](const GroupElement& g) {
        ++words;
        const FreeWord& word = std::get<FreeWord>(g);
        const DyadicValue v = w->eval(g);
        SuffixClass c = suffix_class(word);
        if ((c == SuffixClass::B || c == SuffixClass::BInverse) && !(v == DyadicValue{})) ++suffix_bad;
        const DyadicValue twice = v * DyadicValue::pow2(1);
        for (const auto& u : letters) {
            if (twice < w->eval(group.multiply(u, g))) ++growth_bad;
        }
    });
    run.add({"suffix-law", "w = 1 on every word of ball(" + std::to_string(radius) + ") ending in b or b^-1", suffix_bad == 0,
             Json{{"words", words}, {"violations", suffix_bad}}});
    run.add({"moderate-growth", "w(ug) <= 2 w(g) for every letter u and every g in ball(" + std::to_string(radius) + ")",
             growth_bad == 0, Json{{"words", words}, {"violations", growth_bad}}});

    bool centres = true;
    Json values = Json::array();
    for (unsigned k = 1; k <= 3; ++k) {
        for (int sign : {1, -1}) {
            GroupElement g = FreeWord::generator(1, sign * tower(k));
            DyadicValue v = w->eval(g);
            centres = centres && v == DyadicValue::pow2(-BigInt(k));
            values.push_back(Json{{"k", k}, {"sign", sign}, {"value", dyadic_to_json(v)}});
        }
    }
    run.add({"centres", "w(a^(+-n_k)) = 2^-k for k <= 3", centres, values});

    SpaceParams params(w, 1);
    Json norms = Json::array();
    bool admissible = true;
    for (const auto& u : letters) {
        NormEstimate e = translation_norm(u, params, 6);
        admissible = admissible && e.analytic && e.lower_bound <= e.analytic->value;
        norms.push_back(Json{{"letter", element_to_json(u)}, {"estimate", estimate_to_json(e)}});
    }
    run.add({"admissible", "each letter translation has ||T_u|| <= 2; sampled ratios over ball(6) agree", admissible, norms});

    const SubsetSpec powers_of_a = SubsetSpec::powers(group, FreeWord::generator(1));
    auto inf = abelian_inf_search(powers_of_a, *w, {DyadicValue::pow2(0), DyadicValue::pow2(-1), DyadicValue::pow2(-2)}, 300);
    bool inf_ok = true;
    Json inf_json = Json::array();
    for (std::size_t i = 0; i < inf.size(); ++i) {
        inf_ok = inf_ok && inf[i].found() && inf[i].witness->element == GroupElement(FreeWord::generator(1, tower(static_cast<unsigned>(i) + 1)));
        inf_json.push_back(threshold_to_json(inf[i]));
    }
    run.add({"inf-condition", "the inf of max(w(s), w(s^-1)) over powers of a reaches 2^-3 at a^(n_1), a^(n_2), a^(n_3)",
             inf_ok, inf_json});

    FiniteSet k;
    k.insert(group.identity());
    k.insert(FreeWord::generator(2));
    ThresholdResult esssup = esssup_sufficient_check(powers_of_a, *w, k, DyadicValue::pow2(-1), 300);
    run.add({"esssup-fails", "with K = {e, b} no power of a up to a^300 brings the sup over sK u s^-1 K below 1/2",
             !esssup.found(), threshold_to_json(esssup)});
    return run.finish();
}

// ---------------------------------------------------------------- F_2, semigroup weight

Report f2_semigroup_dense(const ScenarioOverrides& o) {
    Run run("f2-semigroup-dense");
    const Group group = Group::free(2, o.cap.value_or(default_enumeration_cap()));
    auto w = std::make_shared<F2SemigroupWeight>(4, 8);
    SpaceParams params(w, 1);

    std::vector<GroupElement> s;
    std::vector<FiniteSet> u;
    std::vector<Rational> ones;
    for (unsigned j = 1; j <= 4; ++j) {
        s.push_back(semigroup_generator(j));
        u.push_back(group.ball(j));
        ones.push_back(1);
    }
    SeriesTerms terms = series_terms(params, s, u, ones);
    Rational bound = 0;
    for (unsigned n = 1; n <= 4; ++n) {
        for (unsigned k = 1; k <= 4; ++k) {
            if (n != k) bound += pow2(-3 * static_cast<std::int64_t>(n + k)) * (ipow(Rational(4), k) + 1);
        }
    }
    run.add({"series-bound", "sum over n != k <= 4 of ||w|| on s_n s_k^-1 U^k is at most sum of 8^(-n-k)(4^k + 1)",
             terms.total <= bound, Json{{"partial_sum", rational_to_json(terms.total)}, {"bound", rational_to_json(bound)}}});

    bool parses = true;
    std::size_t checked = 0;
    for (unsigned n = 1; n <= 4 && parses; ++n) {
        for (unsigned k = 1; k <= 4 && parses; ++k) {
            if (n == k) continue;
            GroupElement centre = group.multiply(s[n - 1], group.invert(s[k - 1]));
            for (const auto& x : u[k - 1]) {
                auto parse = parse_sv_membership(std::get<FreeWord>(group.multiply(centre, x)), 4, 8);
                ++checked;
                if (!parse || parse->l != n || parse->k != k || !parse->prefix_factors.empty()) {
                    parses = false;
                    break;
                }
            }
        }
    }
    run.add({"parser", "every word of s_l s_k^-1 U^k (l != k <= 4) parses with indices (l, k) and an empty S-prefix", parses,
             Json{{"words", checked}}});

    const unsigned radius = static_cast<unsigned>(o.horizon.value_or(5));
    bool contracts = true;
    Json norms = Json::array();
    for (unsigned j = 1; j <= 4; ++j) {
        NormEstimate e = translation_norm(s[j - 1], params, radius);
        contracts = contracts && e.analytic && e.analytic->value == DyadicValue{} && e.lower_bound <= DyadicValue{};
        norms.push_back(Json{{"j", j}, {"estimate", estimate_to_json(e)}});
    }
    run.add({"admissible", "||T_(s_j)|| <= 1 for j <= 4; sampled ratios over ball(" + std::to_string(radius) + ") agree",
             contracts, norms});
    return run.finish();
}

// ---------------------------------------------------------------- Z^2 weight

Report z2_group_dense_no_single(const ScenarioOverrides& o) {
    Run run("z2-group-dense-no-single");
    const Group group = Group::lattice(2, o.cap.value_or(default_enumeration_cap()));
    auto w = std::make_shared<Z2Weight>();

    std::vector<DyadicValue> thresholds;
    for (int k = 1; k <= 6; ++k) thresholds.push_back(DyadicValue::pow2(1 - k));
    auto inf = abelian_inf_search(SubsetSpec::whole_group(group), *w, thresholds, o.horizon.value_or(20000));
    bool inf_ok = true;
    Json inf_json = Json::array();
    for (std::size_t i = 0; i < inf.size(); ++i) {
        inf_ok = inf_ok && inf[i].found() && inf[i].witness->value <= DyadicValue::pow2(-static_cast<long long>(i) - 1);
        inf_json.push_back(threshold_to_json(inf[i]));
        if (inf[i].found()) run.csv() << "inf," << i + 1 << ",\"" << to_string(inf[i].witness->element) << "\"\n";
    }
    run.add({"inf-condition", "witnesses s with max(w(s), w(-s)) <= 2^-k exist for k = 1..6", inf_ok, inf_json});

    bool single_ok = true;
    Json singles = Json::array();
    std::vector<DyadicValue> probe;
    for (int k = 1; k <= 6; ++k) probe.push_back(DyadicValue::pow2(-k));
    for (long long l = -3; l <= 3; ++l) {
        for (long long m = -3; m <= 3; ++m) {
            if (l == 0 && m == 0) continue;
            SingleTranslationReport r64 = single_translation_check(z2(l, m), *w, probe, 64);
            SingleTranslationReport r128 = single_translation_check(z2(l, m), *w, {}, 128);
            bool stable = r64.non_unit_powers == r128.non_unit_powers;
            bool no_lower = true;
            for (const auto& t : r64.thresholds) no_lower = no_lower && (t.found() == (r64.min_value < t.threshold));
            single_ok = single_ok && stable && no_lower;
            Json j = single_translation_to_json(r64);
            j["stable_to_128"] = stable;
            singles.push_back(std::move(j));
        }
    }
    run.add({"single-operators",
             "for every (l, m) with |l|, |m| <= 3 only finitely many powers leave w = 1 (same set at horizons 64 and 128), "
             "and no power goes below the attained minimum",
             single_ok, singles});

    SpaceParams params(w, 1);
    DyadicValue at32, at64;
    for (const auto& g : group.generators()) {
        for (const auto& h : {g, group.invert(g)}) {
            DyadicValue a = translation_norm(h, params, 32).lower_bound;
            DyadicValue b = translation_norm(h, params, 64).lower_bound;
            if (at32 < a) at32 = a;
            if (at64 < b) at64 = b;
        }
    }
    run.add({"generator-ratio", "the largest generator ratio w(g + t) / w(t) is the same on box(32) and box(64)",
             at32 == at64, Json{{"box32", dyadic_to_json(at32)}, {"box64", dyadic_to_json(at64)}}});
    return run.finish();
}

// ---------------------------------------------------------------- R^2 strip

Report r2_sector_strip(const ScenarioOverrides&) {
    Run run("r2-sector-strip");
    StripRatioEstimate ratio = horizontal_ratio_bound(Rational(1, 2), 20);
    run.add({"ratio", "the horizontal translation ratio over bands n <= 20 is exactly 4",
             ratio.max_ratio == DyadicValue::pow2(2), ratio_estimate_to_json(ratio)});
    StripRatioEstimate identity = horizontal_ratio_bound(Rational(0), 20);
    run.add({"identity", "translation by t = 0 has ratio 1", identity.max_ratio == DyadicValue{},
             ratio_estimate_to_json(identity)});

    bool all_valid = true;
    Json grid = Json::array();
    run.csv() << "n,delta,t,removed_area\n";
    for (unsigned n : {1U, 2U, 4U, 8U}) {
        for (int d = 1; d <= 6; ++d) {
            Criterion4Witness c = criterion4_witness(n, pow2(static_cast<std::int64_t>(-d)));
            all_valid = all_valid && c.ok();
            grid.push_back(criterion4_to_json(c));
            run.csv() << n << "," << to_double(c.delta) << "," << c.t << "," << to_double(c.removed_area) << "\n";
        }
    }
    run.add({"criterion4", "for n in {1, 2, 4, 8} and delta = 2^-1..2^-6 the witness s = (2 l_t, 0) has |F \\ E| < delta and "
                           "sup of w over (s + E) u (-s + E) at most 2^-t < delta",
             all_valid, grid});

    bool heavy = true;
    Json integrals = Json::array();
    for (unsigned n = 0; n <= 10; ++n) {
        Rational v = integral_r2(CellRegion::box(n, 0, n + 1, 1), 1);
        heavy = heavy && v >= 1;
        integrals.push_back(Json{{"n", n}, {"integral", rational_to_json(v)}});
    }
    run.add({"column-integrals", "the integral of w over [n, n+1] x [0, 1] is at least 1 for n <= 10", heavy, integrals});
    return run.finish();
}

}  // namespace

std::vector<ExampleInfo> example_ids() {
    return {
        {"existence-weight", "weight with G-dense vectors on Z from nested neighbourhoods, s_n = 10^n"},
        {"f2-admissible-nondense", "F_2-admissible weight concentrated near a^(+-n_k) without F_2-dense vectors"},
        {"f2-semigroup-dense", "semigroup weight on F_2 with the 8^(-n-k)(4^k + 1) series bound"},
        {"z2-group-dense-no-single", "Z^2 weight: the whole group acts densely but no single translation does"},
        {"r2-sector-strip", "strip weight on R^2: translation ratio 4, criterion-4 witnesses, heavy unit columns"},
    };
}

Report reproduce(const std::string& id, const ScenarioOverrides& overrides) {
    if (id == "existence-weight") return existence_weight(overrides);
    if (id == "f2-admissible-nondense") return f2_admissible_nondense(overrides);
    if (id == "f2-semigroup-dense") return f2_semigroup_dense(overrides);
    if (id == "z2-group-dense-no-single") return z2_group_dense_no_single(overrides);
    if (id == "r2-sector-strip") return r2_sector_strip(overrides);
    std::string known;
    for (const auto& e : example_ids()) known += (known.empty() ? "" : ", ") + e.id;
    throw UsageError("unknown example id '" + id + "' (known: " + known + ")");
}

}  // namespace wlp
