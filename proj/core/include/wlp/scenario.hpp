#pragma once

// Declarative JSON scenarios: which group, weight, subset S and exponent p,
// and which analysis to run on them. See docs/scenario-schema.md.

#include "wlp/serialize.hpp"
#include "wlp/subset.hpp"
#include "wlp/weight.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wlp {

/// Command-line overrides applied on top of a scenario file.
struct ScenarioOverrides {
    std::optional<std::size_t> cap;
    std::optional<std::size_t> horizon;
};

struct Scenario {
    Json source;
    std::string group_name;
    std::optional<Group> group;  // absent for the plane model "R^2"
    WeightPtr weight;            // absent for "R^2"
    std::optional<SubsetSpec> subset;
    double p = 1.0;
    std::string analysis;        // criteria | construct | norms | strip | reproduce
    std::size_t horizon = 1000;
    bool horizon_given = false;  // set in the file or on the command line
    std::optional<std::size_t> cap_override;
};

/// Parses and validates. Syntax errors report line and column; semantic
/// errors report the JSON path of the offending field.
Scenario parse_scenario(std::string_view text, const ScenarioOverrides& overrides = {});
Scenario load_scenario(const std::string& path, const ScenarioOverrides& overrides = {});

/// Builds a weight from its JSON description, e.g. {"id": "salas", "alpha": "1"}.
WeightPtr make_weight(const Group& group, const Json& spec, const std::string& path = "/weight");
SubsetSpec make_subset(const Group& group, const Json& spec, const std::string& path = "/subset");

struct Report {
    Json json;
    std::string summary;  // human-readable
    std::string csv;      // advisory plot data, may be empty
};

/// Runs the analysis. Verdicts such as "no certificate found" are completed
/// analyses; only execution errors throw.
Report run_scenario(const Scenario& scenario);

struct ExampleInfo {
    std::string id;
    std::string description;
};
std::vector<ExampleInfo> example_ids();

/// Canned analyses of the worked examples. Throws UsageError on an unknown id.
Report reproduce(const std::string& id, const ScenarioOverrides& overrides = {});

/// Semantic version of the library and tools.
std::string version();

}  // namespace wlp
