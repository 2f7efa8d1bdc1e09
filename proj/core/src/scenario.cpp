#include "wlp/scenario.hpp"

#include "wlp/constructor.hpp"
#include "wlp/criteria.hpp"
#include "wlp/errors.hpp"
#include "wlp/existence_weight.hpp"
#include "wlp/plane_strip.hpp"
#include "wlp/weights_f2.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#ifndef WLP_VERSION_STRING
#define WLP_VERSION_STRING "0.0.0"
#endif

namespace wlp {

std::string version() { return WLP_VERSION_STRING; }

namespace {

// A JSON value together with its path, for validation messages.
class Node {
public:
    Node(const Json& j, std::string path) : j_(j), path_(std::move(path)) {}

    const Json& json() const noexcept { return j_; }
    const std::string& path() const noexcept { return path_; }

    [[noreturn]] void fail(const std::string& message) const { throw ValidationError(path_ + ": " + message); }

    bool has(const std::string& key) const { return j_.is_object() && j_.contains(key); }

    Node at(const std::string& key) const {
        if (!j_.is_object()) fail("expected an object");
        if (!j_.contains(key)) fail("missing required field '" + key + "'");
        return Node(j_.at(key), path_ + "/" + key);
    }

    Node at(std::size_t i) const { return Node(j_.at(i), path_ + "/" + std::to_string(i)); }

    std::string str() const {
        if (!j_.is_string()) fail("expected a string");
        return j_.get<std::string>();
    }

    long long integer(long long lo, long long hi) const {
        if (!j_.is_number_integer()) fail("expected an integer");
        long long v = j_.get<long long>();
        if (v < lo || v > hi) fail("must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
        return v;
    }

    double real() const {
        if (!j_.is_number()) fail("expected a number");
        return j_.get<double>();
    }

    Rational rational() const {
        try {
            return rational_from_json(j_);
        } catch (const ValidationError& e) {
            fail(e.what());
        }
    }

    std::vector<Node> items() const {
        if (!j_.is_array()) fail("expected an array");
        std::vector<Node> out;
        for (std::size_t i = 0; i < j_.size(); ++i) out.push_back(at(i));
        return out;
    }

    GroupElement element(const Group& group) const {
        try {
            return element_from_json(group, j_);
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        } catch (const ValidationError& e) {
            fail(e.what());
        }
    }

    template <class T>
    T get_or(const std::string& key, T fallback, long long lo = 0, long long hi = 1LL << 40) const {
        if (!has(key)) return fallback;
        return static_cast<T>(at(key).integer(lo, hi));
    }

private:
    const Json& j_;
    std::string path_;
};

std::vector<DyadicValue> exponents(const Node& node) {
    std::vector<DyadicValue> out;
    for (const auto& e : node.items()) out.push_back(DyadicValue::pow2(BigInt(e.integer(-100000, 100000))));
    return out;
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace

// ---------------------------------------------------------------- construction

WeightPtr make_weight(const Group& group, const Json& spec, const std::string& path) {
    Node node(spec, path);
    const std::string id = node.at("id").str();
    WeightPtr w;
    if (id == "unit") {
        w = std::make_shared<UnitWeight>(group);
    } else if (id == "salas") {
        Rational alpha = node.has("alpha") ? node.at("alpha").rational() : Rational(1);
        if (alpha <= 0) node.at("alpha").fail("alpha must be positive");
        w = std::make_shared<SalasWeight>(alpha);
    } else if (id == "z2") {
        w = std::make_shared<Z2Weight>();
    } else if (id == "f2_nondense") {
        w = std::make_shared<F2NondenseWeight>(node.get_or<unsigned>("k_max", 4, 1, 24));
    } else if (id == "f2_semigroup") {
        w = std::make_shared<F2SemigroupWeight>(node.get_or<unsigned>("l_max", 4, 2, 24),
                                                node.get_or<unsigned>("depth_max", 8, 0, 1 << 20));
    } else if (id == "existence") {
        std::vector<GroupElement> points;
        for (const auto& e : node.at("points").items()) points.push_back(e.element(group));
        try {
            w = ExistenceWeight::build(group, node.get_or<unsigned>("radius", 1, 1, 1 << 20), std::move(points));
        } catch (const ConstructionError& e) {
            node.fail(e.what());
        }
    } else if (id == "table") {
        DyadicValue fallback = DyadicValue::pow2(BigInt(node.get_or<long long>("fallback_exp2", 0, -100000, 100000)));
        w = TableWeight::load_csv(group, node.at("csv").str(), fallback);
    } else if (id == "r2_strip") {
        node.at("id").fail("r2_strip lives on the plane; use group \"R^2\" with analysis \"strip\"");
    } else {
        node.at("id").fail("unknown weight id '" + id + "' (expected unit, salas, z2, f2_nondense, f2_semigroup, "
                           "existence, table)");
    }
    if (!(w->group() == group)) {
        node.at("id").fail("weight " + id + " is defined on " + w->group().name() + ", not on " + group.name());
    }
    return w;
}

SubsetSpec make_subset(const Group& group, const Json& spec, const std::string& path) {
    Node node(spec, path);
    const std::string kind = node.at("kind").str();
    if (kind == "naturals") {
        if (!group.is_lattice() || group.rank() != 1) node.at("kind").fail("naturals needs the group Z");
        return SubsetSpec::naturals(group);
    }
    if (kind == "whole") return SubsetSpec::whole_group(group);
    if (kind == "powers") return SubsetSpec::powers(group, node.at("of").element(group));
    if (kind == "list") {
        std::vector<GroupElement> elements;
        for (const auto& e : node.at("elements").items()) elements.push_back(e.element(group));
        return SubsetSpec::explicit_list(group, std::move(elements));
    }
    if (kind == "semigroup") {
        std::vector<GroupElement> gens;
        for (const auto& e : node.at("generators").items()) gens.push_back(e.element(group));
        if (gens.empty()) node.at("generators").fail("needs at least one generator");
        return SubsetSpec::semigroup(group, std::move(gens), node.get_or<unsigned>("depth", 3, 0, 64));
    }
    node.at("kind").fail("unknown subset kind '" + kind + "' (expected naturals, whole, powers, list, semigroup)");
}

Scenario parse_scenario(std::string_view text, const ScenarioOverrides& overrides) {
    Scenario sc;
    try {
        sc.source = Json::parse(text);
    } catch (const Json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ValidationError("scenario is not valid JSON (line " + std::to_string(line) + ", column " +
                              std::to_string(col) + "): " + e.what());
    }
    Node root(sc.source, "");
    if (!sc.source.is_object()) root.fail("the scenario must be a JSON object");

    sc.analysis = root.at("analysis").str();
    static const std::vector<std::string> analyses{"criteria", "construct", "norms", "strip", "reproduce"};
    if (std::find(analyses.begin(), analyses.end(), sc.analysis) == analyses.end()) {
        root.at("analysis").fail("unknown analysis '" + sc.analysis + "' (expected criteria, construct, norms, strip, reproduce)");
    }
    sc.horizon = overrides.horizon.value_or(root.get_or<std::size_t>("horizon", 1000, 1, 1LL << 32));
    sc.horizon_given = overrides.horizon.has_value() || root.has("horizon");
    sc.cap_override = overrides.cap;
    if (root.has("p")) {
        sc.p = root.at("p").real();
        if (!(sc.p >= 1.0)) root.at("p").fail("p must be >= 1");
    }
    if (sc.analysis == "reproduce") {
        root.at("reproduce").at("id").str();
        return sc;
    }

    sc.group_name = root.at("group").str();
    if (sc.group_name == "R^2") {
        if (sc.analysis != "strip") root.at("analysis").fail("the plane model supports only the strip analysis");
        if (root.has("weight") && root.at("weight").at("id").str() != "r2_strip") {
            root.at("weight").at("id").fail("the plane model carries only the r2_strip weight");
        }
        return sc;
    }
    if (sc.analysis == "strip") root.at("group").fail("the strip analysis needs group \"R^2\"");

    std::size_t cap = overrides.cap.value_or(root.get_or<std::size_t>("cap", default_enumeration_cap(), 1, 1LL << 40));
    try {
        sc.group = Group::parse(sc.group_name, cap);
    } catch (const ValidationError& e) {
        root.at("group").fail(e.what());
    }
    sc.weight = make_weight(*sc.group, root.at("weight").json());
    if (root.has("subset")) sc.subset = make_subset(*sc.group, root.at("subset").json());
    return sc;
}

Scenario load_scenario(const std::string& path, const ScenarioOverrides& overrides) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open scenario file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str(), overrides);
}

// ---------------------------------------------------------------- analyses

namespace {

std::string log2_text(const DyadicValue& v) { return v.is_dyadic() ? v.exponent().str() : std::to_string(v.log2()); }

Json run_criteria(const Scenario& sc, std::string& summary, std::ostringstream& csv) {
    Node root(sc.source, "");
    Node block = root.at("criteria");
    const Weight& w = *sc.weight;
    const Group& group = *sc.group;
    Json out;
    csv << "check,index,threshold_log2,witness,value_log2\n";

    auto need_subset = [&](const Node& n) -> const SubsetSpec& {
        if (!sc.subset) n.fail("this check needs a subset S");
        return *sc.subset;
    };

    if (block.has("inf")) {
        Node n = block.at("inf");
        auto results = abelian_inf_search(need_subset(n), w, exponents(n.at("thresholds_exp2")), sc.horizon);
        out["inf"] = Json::array();
        std::size_t found = 0;
        for (std::size_t i = 0; i < results.size(); ++i) {
            out["inf"].push_back(threshold_to_json(results[i]));
            if (results[i].found()) {
                ++found;
                csv << "inf," << i << "," << log2_text(results[i].threshold) << ",\"" << to_string(results[i].witness->element)
                    << "\"," << log2_text(results[i].witness->value) << "\n";
            }
        }
        summary += "inf search: " + std::to_string(found) + " of " + std::to_string(results.size()) +
                   " thresholds have a witness within the horizon\n";
    }
    if (block.has("esssup")) {
        Node n = block.at("esssup");
        FiniteSet k;
        for (const auto& e : n.at("K").items()) k.insert(e.element(group));
        if (k.empty()) n.at("K").fail("K must be nonempty");
        DyadicValue eps = DyadicValue::pow2(BigInt(n.at("epsilon_exp2").integer(-100000, 100000)));
        ThresholdResult r = esssup_sufficient_check(need_subset(n), w, k, eps, sc.horizon);
        out["esssup"] = threshold_to_json(r);
        summary += std::string("ess sup check: ") + (r.found() ? "witness " + to_string(r.witness->element) : "horizon exhausted") + "\n";
    }
    if (block.has("series")) {
        Node n = block.at("series");
        const unsigned depth = n.get_or<unsigned>("N", 4, 1, 64);
        std::vector<FiniteSet> sets;
        if (n.has("F") && n.at("F").json().is_array()) {
            for (const auto& f : n.at("F").items()) {
                FiniteSet s;
                for (const auto& e : f.items()) s.insert(e.element(group));
                sets.push_back(std::move(s));
            }
            if (sets.size() != depth) n.at("F").fail("needs exactly N sets");
        } else {
            for (unsigned i = 1; i <= depth; ++i) sets.push_back(group.ball(i));
        }
        SeriesOptions opt;
        opt.budget0 = n.has("budget0") ? n.at("budget0").rational() : Rational(1);
        opt.horizon = n.get_or<std::size_t>("stage_horizon", std::min<std::size_t>(sc.horizon, 256), 1, 1LL << 32);
        SeriesResult r = series_criterion_search(need_subset(n), SpaceParams(sc.weight, sc.p), sets, opt);
        Json j;
        if (r.ok()) {
            CertificateCheck check = recheck_certificate(*r.certificate, SpaceParams(sc.weight, sc.p));
            j["verdict"] = "certificate";
            j["certificate"] = certificate_to_json(*r.certificate);
            j["recheck"] = Json{{"disjoint", check.disjoint}, {"total_matches", check.total_matches}};
            for (const auto& s : r.certificate->stages) {
                csv << "series," << s.stage << "," << to_double(s.budget) << ",," << to_double(s.increment) << "\n";
            }
            summary += "series search: certificate with total " + to_string(r.certificate->total) + "\n";
        } else {
            j["verdict"] = "no certificate found";
            j["failure"] = failure_to_json(*r.failure);
            summary += "series search: no certificate found (" + to_string(r.failure->reason) + " at stage " +
                       std::to_string(r.failure->stage) + ")\n";
        }
        out["series"] = std::move(j);
    }
    if (block.has("single")) {
        Node n = block.at("single");
        auto thresholds = n.has("thresholds_exp2") ? exponents(n.at("thresholds_exp2")) : std::vector<DyadicValue>{};
        out["single"] = Json::array();
        for (const auto& g : n.at("generators").items()) {
            SingleTranslationReport r = single_translation_check(g.element(group), w, thresholds, sc.horizon);
            out["single"].push_back(single_translation_to_json(r));
            summary += "powers of " + to_string(r.generator) + ": " + std::to_string(r.non_unit_powers.size()) +
                       " powers with weight != 1 up to " + std::to_string(sc.horizon) + "\n";
        }
    }
    if (out.empty()) block.fail("expected at least one of inf, esssup, series, single");
    return out;
}

Json run_construct(const Scenario& sc, std::string& summary, std::ostringstream& csv) {
    Node root(sc.source, "");
    Node block = root.at("construct");
    const Group& group = *sc.group;
    SpaceParams params(sc.weight, sc.p);
    if (!params.exact()) root.at("p").fail("construct needs integer p and an exact weight");

    std::vector<FinSupFun> targets;
    for (const auto& t : block.at("targets").items()) {
        try {
            targets.push_back(function_from_json(group, t.json()));
        } catch (const ValidationError& e) {
            t.fail(e.what());
        }
    }
    const auto depth = block.get_or<std::size_t>("N", targets.size(), 1, 4096);
    TargetSchedule schedule = [&] {
        try {
            return schedule_targets(targets, depth, params);
        } catch (const ValidationError& e) {
            block.fail(e.what());
        }
    }();

    std::optional<Assembly> assembly;
    Json out;
    if (block.has("witnesses")) {
        std::vector<GroupElement> ws;
        for (const auto& e : block.at("witnesses").items()) ws.push_back(e.element(group));
        try {
            assembly = assemble_with_witnesses(schedule, ws, params);
        } catch (const ConstructionError& e) {
            out["verdict"] = "witnesses rejected";
            out["message"] = e.what();
            summary += std::string("construct: witnesses rejected: ") + e.what() + "\n";
            return out;
        }
    } else {
        const SubsetSpec s = sc.subset ? *sc.subset : SubsetSpec::whole_group(group);
        SeriesOptions opt;
        opt.budget0 = block.has("budget0") ? block.at("budget0").rational() : Rational(1);
        opt.horizon = block.get_or<std::size_t>("stage_horizon", std::min<std::size_t>(sc.horizon, 256), 1, 1LL << 32);
        AssembleResult r = assemble(schedule, s, params, opt);
        if (!r.ok()) {
            out["verdict"] = "no certificate found";
            out["failure"] = failure_to_json(*r.failure);
            summary += "construct: no certificate found (" + to_string(r.failure->reason) + " at stage " +
                       std::to_string(r.failure->stage) + ")\n";
            return out;
        }
        assembly = std::move(r.assembly);
    }

    VerifyReport v = verify(*assembly, params);
    out["verdict"] = v.ok() ? "verified" : "verification failed";
    out["assembly"] = assembly_to_json(*assembly);
    out["verify"] = verify_to_json(v);
    csv << "n,bound,achieved\n";
    for (const auto& row : v.rows) csv << row.n << "," << to_double(row.bound) << "," << to_double(row.lhs) << "\n";
    summary += "construct: " + std::to_string(assembly->witnesses.size() - 1) + " stages, verification " +
               (v.ok() ? "passed" : "FAILED: " + v.first_problem) + "\n";
    return out;
}

Json run_norms(const Scenario& sc, std::string& summary, std::ostringstream& csv) {
    Node root(sc.source, "");
    Node block = root.at("norms");
    const Group& group = *sc.group;
    SpaceParams params(sc.weight, sc.p);
    const auto radius = block.get_or<unsigned>("radius", 10, 0, 1 << 20);
    Json out;
    csv << "element,left_log2,right_log2\n";
    if (block.has("elements")) {
        out["functionals"] = Json::array();
        for (const auto& e : block.at("elements").items()) {
            GroupElement g = e.element(group);
            auto [l, r] = left_right_functionals(g, params, radius);
            out["functionals"].push_back(Json{{"element", element_to_json(g)}, {"L", estimate_to_json(l)}, {"R", estimate_to_json(r)}});
            csv << "\"" << to_string(g) << "\"," << l.lower_bound.log2() << "," << r.lower_bound.log2() << "\n";
            summary += "||T_" + to_string(g) + "|| >= " + l.lower_bound.str() +
                       (l.analytic ? " (declared bound " + l.analytic->value.str() + ")" : "") + "\n";
        }
    }
    if (block.has("admissibility")) {
        Node a = block.at("admissibility");
        if (!sc.subset) a.fail("admissibility needs a subset S");
        auto entries = admissibility_report(*sc.subset, params, a.get_or<std::size_t>("count", 5, 1, 1 << 20),
                                            a.get_or<unsigned>("radius", radius, 0, 1 << 20));
        out["admissibility"] = Json::array();
        std::size_t unproven = 0;
        for (const auto& entry : entries) {
            Json j = estimate_to_json(entry.estimate);
            j["element"] = element_to_json(entry.element);
            j["status"] = entry.unproven ? "admissibility unproven" : (entry.estimate.analytic ? "bounded" : "no growth seen");
            unproven += entry.unproven;
            out["admissibility"].push_back(std::move(j));
        }
        summary += "admissibility: " + std::to_string(entries.size()) + " candidates, " + std::to_string(unproven) +
                   " flagged unproven\n";
    }
    if (out.empty()) block.fail("expected elements and/or admissibility");
    return out;
}

Json run_strip(const Scenario& sc, std::string& summary, std::ostringstream& csv) {
    Node root(sc.source, "");
    Node block = root.at("strip");
    Json out;
    const Rational t = block.has("t") ? block.at("t").rational() : Rational(1, 2);
    if (t < 0 || t >= 1) block.at("t").fail("t must lie in [0, 1)");
    StripRatioEstimate ratio = horizontal_ratio_bound(t, block.get_or<unsigned>("bands", 20, 0, 4096));
    out["ratio"] = ratio_estimate_to_json(ratio);
    summary += "horizontal translation ratio max " + ratio.max_ratio.str() + " (bound 4)\n";

    if (block.has("criterion4")) {
        Node c = block.at("criterion4");
        out["criterion4"] = Json::array();
        csv << "n,delta,t,removed_area,sup_weight_log2\n";
        std::size_t valid = 0, total = 0;
        for (const auto& nn : c.at("n").items()) {
            for (const auto& d : c.at("delta_exp2").items()) {
                auto n = static_cast<unsigned>(nn.integer(1, 4096));
                Rational delta = pow2(static_cast<std::int64_t>(d.integer(-60, 60)));
                Criterion4Witness w = criterion4_witness(n, delta);
                out["criterion4"].push_back(criterion4_to_json(w));
                csv << n << "," << to_double(delta) << "," << w.t << "," << to_double(w.removed_area) << ","
                    << log2_text(w.sup_weight) << "\n";
                valid += w.ok();
                ++total;
            }
        }
        summary += "criterion-4 witnesses valid: " + std::to_string(valid) + " of " + std::to_string(total) + "\n";
    }
    if (block.has("integral_columns")) {
        const auto upto = static_cast<unsigned>(block.at("integral_columns").integer(0, 4096));
        const unsigned p = static_cast<unsigned>(sc.p);
        if (static_cast<double>(p) != sc.p) root.at("p").fail("the strip integrals need integer p");
        out["column_integrals"] = Json::array();
        bool all = true;
        for (unsigned n = 0; n <= upto; ++n) {
            Rational v = integral_r2(CellRegion::box(n, 0, n + 1, 1), p);
            out["column_integrals"].push_back(Json{{"n", n}, {"integral", rational_to_json(v)}, {"at_least_one", v >= 1}});
            all = all && v >= 1;
        }
        summary += std::string("column integrals >= 1 for n <= ") + std::to_string(upto) + ": " + (all ? "yes" : "no") + "\n";
    }
    return out;
}

}  // namespace

Report run_scenario(const Scenario& sc) {
    if (sc.analysis == "reproduce") {
        ScenarioOverrides o{sc.cap_override, std::nullopt};
        if (sc.horizon_given) o.horizon = sc.horizon;
        return reproduce(sc.source.at("reproduce").at("id").get<std::string>(), o);
    }
    const auto start = std::chrono::steady_clock::now();
    Report report;
    std::ostringstream csv;
    Json results;
    if (sc.analysis == "criteria") results = run_criteria(sc, report.summary, csv);
    if (sc.analysis == "construct") results = run_construct(sc, report.summary, csv);
    if (sc.analysis == "norms") results = run_norms(sc, report.summary, csv);
    if (sc.analysis == "strip") results = run_strip(sc, report.summary, csv);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    report.json["tool"] = "wlp";
    report.json["version"] = version();
    report.json["scenario"] = sc.source;
    report.json["weight"] = sc.weight ? sc.weight->describe() : std::string("r2_strip");
    report.json["results"] = std::move(results);
    report.json["seed"] = nullptr;
    report.json["advisory"] = Json{{"wall_time_seconds", seconds}};
    report.csv = csv.str();
    return report;
}

}  // namespace wlp
