// wlp: run scenario files and reproduce the worked examples.
//
//   wlp run <file> [--output report.json] [--csv data.csv] [--cap N] [--horizon N]
//   wlp reproduce <id> [...same flags]
//   wlp list-examples

#include "wlp/errors.hpp"
#include "wlp/scenario.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw wlp::UsageError("cannot write " + path);
    out << text;
}

void emit(const wlp::Report& report, const std::string& output, const std::string& csv) {
    const std::string json = report.json.dump(2) + "\n";
    if (output.empty()) {
        std::cout << json;
    } else {
        write_file(output, json);
    }
    if (!csv.empty()) write_file(csv, report.csv);
    std::cerr << report.summary;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Density of translates in weighted l^p spaces: criteria, certificates and constructions"};
    app.set_version_flag("--version", wlp::version());
    app.require_subcommand(1);
    app.fallthrough();

    std::string output, csv;
    std::size_t cap = 0, horizon = 0;
    app.add_option("--output", output, "Write the JSON report here instead of stdout");
    app.add_option("--csv", csv, "Write advisory CSV plot data here");
    app.add_option("--cap", cap, "Enumeration cap for balls and set products (default from WLP_CAP or 1000000)");
    app.add_option("--horizon", horizon, "Candidate horizon (for reproduce: the example's main scan size)");

    std::string file;
    auto* run = app.add_subcommand("run", "Run a scenario file");
    run->add_option("file", file, "Scenario JSON")->required();

    std::string id;
    auto* repro = app.add_subcommand("reproduce", "Run one of the canned examples");
    repro->add_option("id", id, "Example id (see list-examples)")->required();

    auto* list = app.add_subcommand("list-examples", "List example ids");

    CLI11_PARSE(app, argc, argv);

    wlp::ScenarioOverrides overrides;
    if (cap > 0) {
        overrides.cap = cap;
        setenv("WLP_CAP", std::to_string(cap).c_str(), 1);
    }
    if (horizon > 0) overrides.horizon = horizon;

    try {
        if (*list) {
            for (const auto& e : wlp::example_ids()) std::cout << e.id << "\t" << e.description << "\n";
            return 0;
        }
        if (*run) {
            emit(wlp::run_scenario(wlp::load_scenario(file, overrides)), output, csv);
            return 0;
        }
        if (*repro) {
            emit(wlp::reproduce(id, overrides), output, csv);
            return 0;
        }
    } catch (const wlp::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const wlp::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const wlp::ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
