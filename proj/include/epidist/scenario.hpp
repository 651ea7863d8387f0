#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epidist/cost.hpp"
#include "epidist/params.hpp"
#include "epidist/policy.hpp"
#include "epidist/simulate.hpp"

namespace epidist {

/// Which post-processing steps a run should emit.
struct AnalysisFlags {
    bool waves = true;
    bool single_peak = false;
    bool threshold = false;
    bool reproduction = false;
};

/// One fully validated simulation scenario, parsed from a JSON document
/// (see docs/scenario-format.md, schema_version 1).
struct Scenario {
    std::string name;
    EpidemicParams params;
    CostModel cost;
    SimConfig sim;
    AnalysisFlags analyses;
    std::optional<TransmissionPath> policy;
};

/// Validation outcome: either a scenario or the full list of errors (the
/// parser is not fail-fast; every problem is reported with field context).
struct ParseResult {
    std::optional<Scenario> scenario;
    std::vector<std::string> errors;

    bool ok() const { return scenario.has_value() && errors.empty(); }
};

ParseResult parse_scenario(const std::string& text);
ParseResult parse_scenario_file(const std::string& path);

/// Canonical single-document form (sorted keys, derived fields filled in).
/// parse(write(parse(doc))) is idempotent on this form.
std::string write_scenario(const Scenario& scenario);

}  // namespace epidist
