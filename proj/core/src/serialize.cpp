#include "wlp/serialize.hpp"

#include "wlp/errors.hpp"

#include <limits>

namespace wlp {

namespace {

[[noreturn]] void bad(const std::string& what, const Json& j) {
    throw ValidationError("expected " + what + ", got " + j.dump());
}

}  // namespace

Json bigint_to_json(const BigInt& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(x);
    }
    return x.str();
}

BigInt bigint_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
    if (j.is_string()) return parse_bigint(j.get<std::string>());
    bad("an integer", j);
}

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    bad("a rational written as \"p/q\"", j);
}

Json element_to_json(const GroupElement& g) {
    Json out = Json::array();
    if (const auto* pt = std::get_if<LatticePoint>(&g)) {
        for (const auto& c : pt->coords) out.push_back(bigint_to_json(c));
    } else {
        for (const auto& s : std::get<FreeWord>(g).syllables()) out.push_back(Json::array({s.gen, bigint_to_json(s.exp)}));
    }
    return out;
}

GroupElement element_from_json(const Group& group, const Json& j) {
    if (j.is_string()) return parse_element(group, j.get<std::string>());
    if (!j.is_array()) bad("an element array", j);
    GroupElement g;
    if (group.is_lattice()) {
        std::vector<BigInt> coords;
        for (const auto& c : j) coords.push_back(bigint_from_json(c));
        g = LatticePoint(std::move(coords));
    } else {
        std::vector<Syllable> syl;
        for (const auto& s : j) {
            if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer()) bad("a syllable [gen, exp]", s);
            syl.push_back(Syllable{s[0].get<int>(), bigint_from_json(s[1])});
        }
        FreeWord w = FreeWord::from_syllables(syl);
        if (w.syllables() != syl) bad("a reduced word", j);
        g = std::move(w);
    }
    if (!group.contains(g)) bad("an element of " + group.name(), j);
    return g;
}

Json set_to_json(const FiniteSet& a) {
    Json out = Json::array();
    for (const auto& g : a) out.push_back(element_to_json(g));
    return out;
}

FiniteSet set_from_json(const Group& group, const Json& j) {
    if (!j.is_array()) bad("an array of elements", j);
    FiniteSet out;
    for (const auto& e : j) out.insert(element_from_json(group, e));
    return out;
}

Json dyadic_to_json(const DyadicValue& v) {
    switch (v.kind()) {
        case DyadicValue::Kind::Dyadic: return Json{{"exp2", bigint_to_json(v.exponent())}};
        case DyadicValue::Kind::Rational: return Json{{"rational", rational_to_json(v.to_rational())}};
        case DyadicValue::Kind::Real: return Json{{"real", v.to_double()}, {"advisory", true}};
    }
    return {};
}

DyadicValue dyadic_from_json(const Json& j) {
    if (!j.is_object()) bad("a weight value object", j);
    if (j.contains("exp2")) return DyadicValue::pow2(bigint_from_json(j.at("exp2")));
    if (j.contains("rational")) return DyadicValue::from_rational(rational_from_json(j.at("rational")));
    if (j.contains("real")) return DyadicValue::from_real(j.at("real").get<double>());
    bad("one of exp2, rational, real", j);
}

Json function_to_json(const FinSupFun& f) {
    Json out = Json::array();
    for (const auto& [g, v] : f.values()) out.push_back(Json::array({element_to_json(g), rational_to_json(v)}));
    return out;
}

FinSupFun function_from_json(const Group& group, const Json& j) {
    if (!j.is_array()) bad("an array of [element, value] pairs", j);
    FinSupFun f;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2) bad("an [element, value] pair", pair);
        f.set(element_from_json(group, pair[0]), rational_from_json(pair[1]));
    }
    return f;
}

Json norm_value_to_json(const NormValue& v) {
    Json out;
    out["pth_power"] = v.exact ? rational_to_json(*v.exact) : Json(nullptr);
    out["advisory"] = Json{{"pth_power", v.pth_power}, {"norm", v.norm}};
    return out;
}

Json estimate_to_json(const NormEstimate& e) {
    Json out;
    out["lower_bound"] = dyadic_to_json(e.lower_bound);
    out["attained_at"] = element_to_json(e.attained_at);
    if (e.analytic) {
        out["analytic_bound"] = Json{{"value", dyadic_to_json(e.analytic->value)}, {"provenance", e.analytic->provenance}};
    } else {
        out["analytic_bound"] = nullptr;
    }
    out["region"] = e.region;
    return out;
}

Json threshold_to_json(const ThresholdResult& r) {
    Json out;
    out["threshold"] = dyadic_to_json(r.threshold);
    out["scanned"] = r.scanned;
    if (r.witness) {
        out["verdict"] = "witness";
        out["witness"] = Json{{"element", element_to_json(r.witness->element)},
                              {"value", dyadic_to_json(r.witness->value)},
                              {"index", r.witness->index}};
    } else {
        out["verdict"] = "horizon-exhausted";
    }
    return out;
}

Json single_translation_to_json(const SingleTranslationReport& r) {
    Json out;
    out["generator"] = element_to_json(r.generator);
    out["non_unit_powers"] = r.non_unit_powers;
    out["min_value"] = dyadic_to_json(r.min_value);
    out["thresholds"] = Json::array();
    for (const auto& t : r.thresholds) out["thresholds"].push_back(threshold_to_json(t));
    return out;
}

namespace {

Json stage_to_json(const StageRecord& s) {
    return Json{{"stage", s.stage},
                {"candidate_index", s.candidate_index},
                {"scanned", s.scanned},
                {"forbidden_size", s.forbidden_size},
                {"increment", rational_to_json(s.increment)},
                {"budget", rational_to_json(s.budget)},
                {"backtracks", s.backtracks}};
}

StageRecord stage_from_json(const Json& j) {
    StageRecord s;
    s.stage = j.at("stage").get<unsigned>();
    s.candidate_index = j.at("candidate_index").get<std::size_t>();
    s.scanned = j.at("scanned").get<std::size_t>();
    s.forbidden_size = j.at("forbidden_size").get<std::size_t>();
    s.increment = rational_from_json(j.at("increment"));
    s.budget = rational_from_json(j.at("budget"));
    s.backtracks = j.at("backtracks").get<unsigned>();
    return s;
}

}  // namespace

Json certificate_to_json(const SeriesCertificate& c) {
    Json out;
    out["witnesses"] = Json::array();
    for (const auto& g : c.witnesses) out["witnesses"].push_back(element_to_json(g));
    out["sets"] = Json::array();
    for (const auto& f : c.sets) out["sets"].push_back(set_to_json(f));
    out["coefficients"] = Json::array();
    for (const auto& q : c.coefficients) out["coefficients"].push_back(rational_to_json(q));
    out["total"] = rational_to_json(c.total);
    out["stages"] = Json::array();
    for (const auto& s : c.stages) out["stages"].push_back(stage_to_json(s));
    return out;
}

SeriesCertificate certificate_from_json(const Group& group, const Json& j) {
    SeriesCertificate c;
    for (const auto& g : j.at("witnesses")) c.witnesses.push_back(element_from_json(group, g));
    for (const auto& f : j.at("sets")) c.sets.push_back(set_from_json(group, f));
    for (const auto& q : j.at("coefficients")) c.coefficients.push_back(rational_from_json(q));
    c.total = rational_from_json(j.at("total"));
    for (const auto& s : j.at("stages")) c.stages.push_back(stage_from_json(s));
    if (c.sets.size() != c.witnesses.size() || c.coefficients.size() != c.witnesses.size()) {
        throw ValidationError("certificate needs one set and one coefficient per witness");
    }
    return c;
}

Json failure_to_json(const SeriesFailure& f) {
    Json out;
    out["reason"] = to_string(f.reason);
    out["stage"] = f.stage;
    out["best_increment"] = f.best_increment ? rational_to_json(*f.best_increment) : Json(nullptr);
    out["budget"] = rational_to_json(f.budget);
    out["message"] = f.message;
    out["partial"] = certificate_to_json(f.partial);
    return out;
}

Json assembly_to_json(const Assembly& a) {
    Json out;
    out["targets"] = Json::array();
    for (const auto& q : a.schedule.base) out["targets"].push_back(function_to_json(q));
    out["schedule"] = a.schedule.order;
    out["sup_powers"] = Json::array();
    for (const auto& p : a.schedule.sup_powers) out["sup_powers"].push_back(rational_to_json(p));
    out["witnesses"] = Json::array();
    for (const auto& g : a.witnesses) out["witnesses"].push_back(element_to_json(g));
    out["x"] = function_to_json(a.x);
    out["eps"] = Json::array();
    for (const auto& e : a.eps) out["eps"].push_back(rational_to_json(e));
    out["total"] = rational_to_json(a.total);
    out["stages"] = Json::array();
    for (const auto& s : a.stages) out["stages"].push_back(stage_to_json(s));
    return out;
}

Json verify_to_json(const VerifyReport& r) {
    Json out;
    out["ok"] = r.ok();
    out["x_matches"] = r.x_matches;
    out["disjoint"] = r.disjoint;
    out["eps_sum_matches"] = r.eps_sum_matches;
    out["first_problem"] = r.first_problem;
    out["rows"] = Json::array();
    for (const auto& row : r.rows) {
        out["rows"].push_back(Json{{"n", row.n},
                                   {"lhs", rational_to_json(row.lhs)},
                                   {"eps", rational_to_json(row.eps)},
                                   {"bound", rational_to_json(row.bound)},
                                   {"mass_loss", rational_to_json(row.mass_loss)},
                                   {"pieces_sum", rational_to_json(row.pieces_sum)},
                                   {"bound_ok", row.bound_ok},
                                   {"identity_ok", row.identity_ok},
                                   {"equals_eps", row.equals_eps}});
    }
    return out;
}

Json region_to_json(const CellRegion& r) {
    Json out = Json::array();
    for (const auto& rect : r.rects()) {
        out.push_back(Json{{"x0", rational_to_json(rect.x0)},
                           {"y0", rational_to_json(rect.y0)},
                           {"x1", rational_to_json(rect.x1)},
                           {"y1", rational_to_json(rect.y1)}});
    }
    return out;
}

CellRegion region_from_json(const Json& j) {
    if (!j.is_array()) bad("a rectangle list", j);
    std::vector<Rect> rects;
    for (const auto& r : j) {
        rects.push_back(Rect{rational_from_json(r.at("x0")), rational_from_json(r.at("y0")), rational_from_json(r.at("x1")),
                             rational_from_json(r.at("y1"))});
    }
    return CellRegion(std::move(rects));
}

Json plane_point_to_json(const PlanePoint& p) { return Json::array({rational_to_json(p.x), rational_to_json(p.y)}); }

Json ratio_estimate_to_json(const StripRatioEstimate& e) {
    return Json{{"max_ratio", dyadic_to_json(e.max_ratio)},
                {"attained_at", plane_point_to_json(e.attained_at)},
                {"analytic_bound", dyadic_to_json(e.analytic)},
                {"region", e.region}};
}

Json criterion4_to_json(const Criterion4Witness& w) {
    return Json{{"n", w.n},
                {"delta", rational_to_json(w.delta)},
                {"t", w.t},
                {"s", plane_point_to_json(w.s)},
                {"E", region_to_json(w.e)},
                {"removed_area", rational_to_json(w.removed_area)},
                {"sup_weight", dyadic_to_json(w.sup_weight)},
                {"area_ok", w.area_ok},
                {"sup_ok", w.sup_ok}};
}

}  // namespace wlp
