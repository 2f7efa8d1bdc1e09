#pragma once

// JSON forms of the library's values. Certified quantities are exact:
// integers that do not fit 64 bits and all rationals travel as strings, and
// floats appear only under keys marked advisory.

#include "wlp/constructor.hpp"
#include "wlp/criteria.hpp"
#include "wlp/plane_strip.hpp"
#include "wlp/space.hpp"

#include <nlohmann/json.hpp>

namespace wlp {

using Json = nlohmann::ordered_json;

Json bigint_to_json(const BigInt& x);
BigInt bigint_from_json(const Json& j);

/// "p/q" or "p"
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// Lattice points: [x, y, ...]; free words: [[gen, exp], ...].
Json element_to_json(const GroupElement& g);
GroupElement element_from_json(const Group& group, const Json& j);

Json set_to_json(const FiniteSet& a);
FiniteSet set_from_json(const Group& group, const Json& j);

/// {"exp2": e}, {"rational": "p/q"} or {"real": x, "advisory": true}.
Json dyadic_to_json(const DyadicValue& v);
DyadicValue dyadic_from_json(const Json& j);

/// [[element, "value"], ...]
Json function_to_json(const FinSupFun& f);
FinSupFun function_from_json(const Group& group, const Json& j);

Json norm_value_to_json(const NormValue& v);
Json estimate_to_json(const NormEstimate& e);
Json threshold_to_json(const ThresholdResult& r);
Json single_translation_to_json(const SingleTranslationReport& r);

Json certificate_to_json(const SeriesCertificate& c);
SeriesCertificate certificate_from_json(const Group& group, const Json& j);
Json failure_to_json(const SeriesFailure& f);

Json assembly_to_json(const Assembly& a);
Json verify_to_json(const VerifyReport& r);

Json region_to_json(const CellRegion& r);
CellRegion region_from_json(const Json& j);
Json plane_point_to_json(const PlanePoint& p);
Json ratio_estimate_to_json(const StripRatioEstimate& e);
Json criterion4_to_json(const Criterion4Witness& w);

}  // namespace wlp
