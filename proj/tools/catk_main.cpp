#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "catk/experiment.hpp"
#include "catk/projections.hpp"

namespace {

using catk::ordered_json;

int write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open output file: " << path << "\n";
        return 2;
    }
    out << contents;
    return 0;
}

int run_iteration(const std::string& config_path, const std::string& trace_path,
                  const std::string& summary_path, std::int64_t seed_override, bool explore,
                  bool halpern) {
    catk::ExperimentConfig cfg = catk::load_experiment_config_file(config_path);
    cfg.iteration.explore_no_n = explore;
    if (seed_override >= 0) cfg.iteration.seed = static_cast<std::uint64_t>(seed_override);
    if (!trace_path.empty()) cfg.trace_path = trace_path;
    if (!summary_path.empty()) cfg.summary_path = summary_path;

    const catk::Trace trace = halpern ? catk::run_halpern(cfg.iteration)
                                      : catk::run_viscosity(cfg.iteration);

    if (cfg.trace_path) {
        const int rc = write_file(*cfg.trace_path, catk::trace_csv(trace, cfg.iteration.space));
        if (rc != 0) return rc;
    }
    const ordered_json summary = catk::summary_json(trace, cfg.iteration);
    if (cfg.summary_path) {
        const int rc = write_file(*cfg.summary_path, summary.dump(2) + "\n");
        if (rc != 0) return rc;
    } else {
        std::cout << summary.dump(2) << "\n";
    }
    return 0;
}

catk::Point parse_cli_point(const catk::Space& sp, const std::string& text) {
    std::vector<double> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) vals.push_back(std::stod(item));
    switch (sp.kind()) {
    case catk::SpaceKind::plane:
        if (vals.size() != 2) throw catk::config_error("expected x,y for a planar point");
        return catk::planar(vals[0], vals[1]);
    case catk::SpaceKind::sphere:
    case catk::SpaceKind::scaled_sphere:
        if (vals.size() != 3) throw catk::config_error("expected x,y,z for a spherical point");
        return catk::spherical(vals[0], vals[1], vals[2]);
    case catk::SpaceKind::glued_example:
        if (vals.size() != 3) throw catk::config_error("expected face,u,w for a glued point");
        return catk::glued_point(static_cast<int>(vals[0]), vals[1], vals[2]);
    }
    throw catk::config_error("unknown space kind");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"CAT(kappa) geodesic geometry toolkit: viscosity fixed-point iteration, "
                 "randomized inequality suites, and the glued-complex counterexample"};
    app.require_subcommand(1);

    std::string config_path, trace_path, out_path, format = "text", suite = "all";
    std::string space_name = "plane", seg_a, seg_b, point_text;
    std::int64_t trials = 100000;
    std::int64_t seed = -1;
    bool explore = false;

    auto* iterate = app.add_subcommand("iterate", "run the two-step viscosity iteration");
    iterate->add_option("--config", config_path, "experiment config (JSON)")->required();
    iterate->add_option("--trace", trace_path, "trace CSV output path");
    iterate->add_option("--out", out_path, "summary JSON output path (default: stdout)");
    iterate->add_option("--seed", seed, "override the config seed");
    iterate->add_flag("--explore-no-N", explore,
                      "allow the glued example as the arena (exploratory; no convergence claim)");

    auto* halpern = app.add_subcommand("halpern", "run the constant-target specialization");
    halpern->add_option("--config", config_path, "experiment config (JSON)")->required();
    halpern->add_option("--trace", trace_path, "trace CSV output path");
    halpern->add_option("--out", out_path, "summary JSON output path (default: stdout)");
    halpern->add_option("--seed", seed, "override the config seed");
    halpern->add_flag("--explore-no-N", explore, "allow the glued example as the arena");

    auto* counter = app.add_subcommand("counterexample",
                                       "report the glued-complex N-property failure");
    counter->add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    counter->add_option("--out", out_path, "output path (default: stdout)");

    auto* lemmas = app.add_subcommand("lemmas", "run the randomized inequality suites");
    lemmas->add_option("--suite", suite, "lemma_3_1 | lemma_3_2 | lemma_3_3 | h_suite | all");
    lemmas->add_option("--trials", trials, "trials per suite");
    lemmas->add_option("--seed", seed, "suite seed (default 0)");
    lemmas->add_option("--out", out_path, "report JSON output path (default: stdout)");

    auto* project = app.add_subcommand("project", "one-off segment projection query");
    project->add_option("--space", space_name, "plane | sphere | glued-example")
        ->check(CLI::IsMember({"plane", "sphere", "glued-example"}));
    project->add_option("--seg-a", seg_a, "segment start (comma-separated coordinates)")
        ->required();
    project->add_option("--seg-b", seg_b, "segment end")->required();
    project->add_option("--point", point_text, "point to project")->required();
    project->add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (iterate->parsed() || halpern->parsed())
            return run_iteration(config_path, trace_path, out_path, seed, explore,
                                 halpern->parsed());

        if (counter->parsed()) {
            const catk::NPropertyReport rep = catk::n_property_witness();
            const std::string body = format == "json"
                                         ? catk::counterexample_json(rep).dump(2) + "\n"
                                         : catk::counterexample_text(rep);
            if (!out_path.empty()) return write_file(out_path, body);
            std::cout << body;
            return rep.n_property_violated ? 0 : 1;
        }

        if (lemmas->parsed()) {
            if (trials < 1) {
                std::cerr << "--trials must be >= 1\n";
                return 2;
            }
            const std::uint64_t s = seed < 0 ? 0 : static_cast<std::uint64_t>(seed);
            const catk::SuiteReport rep = catk::run_suite(suite, trials, s);
            std::cerr << rep.name << ": " << rep.elapsed_seconds << " s\n";
            const std::string body = catk::suite_report_json(rep).dump(2) + "\n";
            if (!out_path.empty()) {
                const int rc = write_file(out_path, body);
                if (rc != 0) return rc;
            } else {
                std::cout << body;
            }
            return rep.pass ? 0 : 1;
        }

        if (project->parsed()) {
            const catk::Space sp = space_name == "plane"
                                       ? catk::Space::plane()
                                       : space_name == "sphere" ? catk::Space::sphere()
                                                                : catk::Space::glued();
            const catk::GeodesicSegment seg = catk::make_segment(
                sp, parse_cli_point(sp, seg_a), parse_cli_point(sp, seg_b));
            const catk::ProjectionResult pr =
                catk::project_segment(seg, parse_cli_point(sp, point_text));
            if (format == "json") {
                std::cout << ordered_json{{"point", catk::point_json(pr.point)},
                                          {"parameter", pr.parameter},
                                          {"distance", pr.distance}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "projection parameter " << pr.parameter << ", distance "
                          << pr.distance << "\n";
            }
            return 0;
        }
    } catch (const catk::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const catk::invariant_error& e) {
        std::cerr << "invariant failure: " << e.what() << "\n";
        return 1;
    } catch (const catk::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
