#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "catk/glued.hpp"
#include "catk/lemma_suite.hpp"
#include "catk/viscosity.hpp"

namespace catk {

using ordered_json = nlohmann::ordered_json;

struct ExperimentConfig {
    IterationConfig iteration;
    std::optional<std::string> trace_path;
    std::optional<std::string> summary_path;
};

// Parses and validates the JSON experiment schema; throws config_error whose
// message carries the failing JSON pointer.
ExperimentConfig load_experiment_config(const ordered_json& j);
ExperimentConfig load_experiment_config_file(const std::string& path);

// CSV with header n,t_n,b_n,<coordinates of x_n>,r_fix,r_xy,d_q; one row per
// report_every steps plus the final step. Identical runs yield identical bytes.
std::string trace_csv(const Trace& trace, const Space& space);

ordered_json summary_json(const Trace& trace, const IterationConfig& cfg);

// Empty vector means the summary validates against the emitted schema.
std::vector<std::string> validate_summary_schema(const ordered_json& j);

std::string counterexample_text(const NPropertyReport& r);
ordered_json counterexample_json(const NPropertyReport& r); // 15 significant digits

ordered_json suite_report_json(const SuiteReport& r);

ordered_json point_json(const Point& p);

} // namespace catk
