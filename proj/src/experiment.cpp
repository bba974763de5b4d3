#include "catk/experiment.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "catk/detail/format.hpp"

namespace catk {

namespace {

using detail::fmt_g17;
using detail::round_sig15;

[[noreturn]] void bad(const std::string& pointer, const std::string& why) {
    throw config_error(pointer + ": " + why);
}

const ordered_json& need(const ordered_json& j, const std::string& pointer,
                         const std::string& key) {
    if (!j.contains(key)) bad(pointer + "/" + key, "missing required field");
    return j.at(key);
}

double need_number(const ordered_json& j, const std::string& pointer, const std::string& key) {
    const auto& v = need(j, pointer, key);
    if (!v.is_number()) bad(pointer + "/" + key, "expected a number");
    return v.get<double>();
}

std::int64_t need_integer(const ordered_json& j, const std::string& pointer,
                          const std::string& key) {
    const auto& v = need(j, pointer, key);
    if (!v.is_number_integer()) bad(pointer + "/" + key, "expected an integer");
    return v.get<std::int64_t>();
}

std::string need_string(const ordered_json& j, const std::string& pointer,
                        const std::string& key) {
    const auto& v = need(j, pointer, key);
    if (!v.is_string()) bad(pointer + "/" + key, "expected a string");
    return v.get<std::string>();
}

Point parse_point(const Space& sp, const ordered_json& v, const std::string& pointer) {
    try {
        switch (sp.kind()) {
        case SpaceKind::plane:
            if (!v.is_array() || v.size() != 2) bad(pointer, "expected [x, y]");
            return planar(v[0].get<double>(), v[1].get<double>());
        case SpaceKind::sphere:
        case SpaceKind::scaled_sphere:
            if (!v.is_array() || v.size() != 3) bad(pointer, "expected a unit [x, y, z]");
            return spherical(v[0].get<double>(), v[1].get<double>(), v[2].get<double>());
        case SpaceKind::glued_example: {
            if (!v.is_object()) bad(pointer, "expected {face, u, w}");
            return glued_point(static_cast<int>(need_integer(v, pointer, "face")),
                               need_number(v, pointer, "u"), need_number(v, pointer, "w"));
        }
        }
    } catch (const config_error&) {
        throw;
    } catch (const error& e) {
        bad(pointer, e.what());
    }
    bad(pointer, "unknown space kind");
}

Space parse_space(const ordered_json& j) {
    const std::string pointer = "/space";
    const std::string kind = need_string(j, pointer, "kind");
    if (kind == "glued-example") return Space::glued();

    const double radius = need_number(j, pointer, "cap-radius");
    if (kind == "plane") {
        const auto& c = need(j, pointer, "cap-center");
        if (!c.is_array() || c.size() != 2) bad(pointer + "/cap-center", "expected [x, y]");
        try {
            return Space::plane(planar(c[0].get<double>(), c[1].get<double>()), radius);
        } catch (const error& e) {
            bad(pointer, e.what());
        }
    }
    if (kind == "sphere" || kind == "scaled-sphere") {
        double kappa = 1.0;
        if (kind == "scaled-sphere") kappa = need_number(j, pointer, "kappa");
        if (j.contains("kappa") && kind == "sphere" && j.at("kappa").get<double>() != 1.0)
            bad(pointer + "/kappa", "the unit sphere has kappa = 1");
        const auto& c = need(j, pointer, "cap-center");
        if (!c.is_array() || c.size() != 3) bad(pointer + "/cap-center", "expected [x, y, z]");
        try {
            const Point center = spherical(c[0].get<double>(), c[1].get<double>(),
                                           c[2].get<double>());
            return kind == "sphere" ? Space::sphere(center, radius)
                                    : Space::scaled_sphere(kappa, center, radius);
        } catch (const error& e) {
            bad(pointer, e.what());
        }
    }
    bad(pointer + "/kind", "expected plane | sphere | scaled-sphere | glued-example");
}

MapSpec parse_T(const Space& sp, const ordered_json& j) {
    const std::string pointer = "/T";
    const std::string kind = need_string(j, pointer, "kind");
    try {
        if (kind == "identity") return MapSpec::identity(sp);
        if (kind == "rotation") {
            const auto& a = need(j, pointer, "axis");
            if (!a.is_array() || a.size() != 3) bad(pointer + "/axis", "expected [x, y, z]");
            return MapSpec::rotation(
                sp, Vec3{a[0].get<double>(), a[1].get<double>(), a[2].get<double>()},
                need_number(j, pointer, "angle"));
        }
        if (kind == "segment-projection") {
            const auto& seg = need(j, pointer, "segment");
            const Point a = parse_point(sp, need(seg, pointer + "/segment", "a"),
                                        pointer + "/segment/a");
            const Point b = parse_point(sp, need(seg, pointer + "/segment", "b"),
                                        pointer + "/segment/b");
            return MapSpec::segment_projection(make_segment(sp, a, b));
        }
    } catch (const config_error&) {
        throw;
    } catch (const error& e) {
        bad(pointer, e.what());
    }
    bad(pointer + "/kind", "expected identity | rotation | segment-projection");
}

MapSpec parse_f(const Space& sp, const ordered_json& j) {
    const std::string pointer = "/f";
    const std::string kind = need_string(j, pointer, "kind");
    try {
        if (kind == "homothety")
            return MapSpec::homothety(sp,
                                      parse_point(sp, need(j, pointer, "anchor"),
                                                  pointer + "/anchor"),
                                      need_number(j, pointer, "k"));
        if (kind == "constant")
            return MapSpec::constant(
                sp, parse_point(sp, need(j, pointer, "value"), pointer + "/value"));
    } catch (const config_error&) {
        throw;
    } catch (const error& e) {
        bad(pointer, e.what());
    }
    bad(pointer + "/kind", "expected homothety | constant");
}

SequenceSpec parse_sequence(const ordered_json& j, const std::string& pointer) {
    const std::string kind = need_string(j, pointer, "kind");
    if (kind == "harmonic") {
        HarmonicSeq s;
        s.c = need_number(j, pointer, "c");
        s.p = need_number(j, pointer, "p");
        return s;
    }
    if (kind == "constant") return ConstantSeq{need_number(j, pointer, "value")};
    if (kind == "table") {
        const auto& v = need(j, pointer, "values");
        if (!v.is_array() || v.empty()) bad(pointer + "/values", "expected a nonempty array");
        TableSeq s;
        for (const auto& e : v) s.values.push_back(e.get<double>());
        return s;
    }
    bad(pointer + "/kind", "expected harmonic | constant | table");
}

} // namespace

ExperimentConfig load_experiment_config(const ordered_json& j) {
    if (!j.is_object()) bad("", "expected a JSON object");

    const Space sp = parse_space(need(j, "", "space"));

    ExperimentConfig out{
        IterationConfig{sp, parse_T(sp, need(j, "", "T")), parse_f(sp, need(j, "", "f")),
                        parse_point(sp, need(j, "", "u"), "/u"),
                        SequencePair{parse_sequence(need(need(j, "", "sequences"), "/sequences",
                                                         "t"),
                                                    "/sequences/t"),
                                     parse_sequence(need(need(j, "", "sequences"), "/sequences",
                                                         "b"),
                                                    "/sequences/b")},
                        need_integer(j, "", "max_iter"), need_integer(j, "", "report_every")},
        std::nullopt, std::nullopt};

    if (out.iteration.max_iter < 1) bad("/max_iter", "must be >= 1");
    if (out.iteration.report_every < 1) bad("/report_every", "must be >= 1");
    if (j.contains("seed")) out.iteration.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("output")) {
        const auto& o = j.at("output");
        if (o.contains("trace")) out.trace_path = o.at("trace").get<std::string>();
        if (o.contains("summary")) out.summary_path = o.at("summary").get<std::string>();
    }
    return out;
}

ExperimentConfig load_experiment_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw config_error("config is not valid JSON: " + std::string(e.what()));
    }
    return load_experiment_config(j);
}

namespace {

void append_point_csv(std::string& out, const Point& p) {
    if (is_planar(p)) {
        const auto& q = as_planar(p);
        out += fmt_g17(q.x) + "," + fmt_g17(q.y);
    } else if (is_spherical(p)) {
        const auto& q = as_spherical(p);
        out += fmt_g17(q.v.x) + "," + fmt_g17(q.v.y) + "," + fmt_g17(q.v.z);
    } else {
        const auto& q = as_glued(p);
        out += std::to_string(q.face) + "," + fmt_g17(q.u) + "," + fmt_g17(q.w);
    }
}

} // namespace

std::string trace_csv(const Trace& trace, const Space& space) {
    std::string out = "n,t_n,b_n,";
    switch (space.kind()) {
    case SpaceKind::plane: out += "x1,x2"; break;
    case SpaceKind::sphere:
    case SpaceKind::scaled_sphere: out += "x1,x2,x3"; break;
    case SpaceKind::glued_example: out += "face,u,w"; break;
    }
    out += ",r_fix,r_xy,d_q\n";
    for (const auto& row : trace.rows) {
        out += std::to_string(row.n) + "," + fmt_g17(row.t) + "," + fmt_g17(row.b) + ",";
        append_point_csv(out, row.x);
        out += "," + fmt_g17(row.r_fix) + "," + fmt_g17(row.r_xy) + "," + fmt_g17(row.d_q) + "\n";
    }
    return out;
}

ordered_json point_json(const Point& p) {
    if (is_planar(p)) {
        const auto& q = as_planar(p);
        return ordered_json::array({q.x, q.y});
    }
    if (is_spherical(p)) {
        const auto& q = as_spherical(p);
        return ordered_json::array({q.v.x, q.v.y, q.v.z});
    }
    const auto& q = as_glued(p);
    return ordered_json{{"face", q.face}, {"u", q.u}, {"w", q.w}};
}

ordered_json summary_json(const Trace& trace, const IterationConfig& cfg) {
    const SuzukiMargins m = suzuki_check(trace);
    const auto& rep = trace.hypotheses;

    ordered_json checks = ordered_json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name},
                          {"ok", c.ok},
                          {"verifiable", c.verifiable},
                          {"detail", c.detail}});

    const auto& last = trace.rows.back();
    return ordered_json{
        {"q", point_json(trace.q)},
        {"iterations", trace.iterations},
        {"final", ordered_json{{"n", last.n},
                               {"r_fix", last.r_fix},
                               {"r_xy", last.r_xy},
                               {"d_q", last.d_q}}},
        {"tail", ordered_json{{"max_r_fix", m.tail_max_r_fix},
                              {"max_r_xy", m.tail_max_r_xy},
                              {"max_suzuki", m.tail_max_suzuki},
                              {"max_step3", m.tail_max_step3}}},
        {"hypotheses", ordered_json{{"M", rep.M},
                                    {"k", rep.k},
                                    {"k_eff", rep.k_eff},
                                    {"k_bound", rep.k_bound},
                                    {"containment_radius", rep.containment_radius},
                                    {"checks", checks},
                                    {"ok", rep.ok}}},
        {"exploratory", cfg.explore_no_n},
        {"seed", cfg.seed}};
}

std::vector<std::string> validate_summary_schema(const ordered_json& j) {
    std::vector<std::string> problems;
    const auto want = [&](const char* ptr, bool ok) {
        if (!ok) problems.push_back(std::string("missing or ill-typed field: ") + ptr);
    };
    want("/q", j.contains("q") && (j["q"].is_array() || j["q"].is_object()));
    want("/iterations", j.contains("iterations") && j["iterations"].is_number_integer());
    want("/final", j.contains("final") && j["final"].is_object());
    for (const char* k : {"n", "r_fix", "r_xy", "d_q"})
        want(("/final/" + std::string(k)).c_str(),
             j.contains("final") && j["final"].contains(k) && j["final"][k].is_number());
    want("/tail", j.contains("tail") && j["tail"].is_object());
    for (const char* k : {"max_r_fix", "max_r_xy", "max_suzuki", "max_step3"})
        want(("/tail/" + std::string(k)).c_str(),
             j.contains("tail") && j["tail"].contains(k) && j["tail"][k].is_number());
    want("/hypotheses", j.contains("hypotheses") && j["hypotheses"].is_object());
    want("/hypotheses/checks", j.contains("hypotheses") && j["hypotheses"].contains("checks") &&
                                   j["hypotheses"]["checks"].is_array());
    want("/exploratory", j.contains("exploratory") && j["exploratory"].is_boolean());
    want("/seed", j.contains("seed") && j["seed"].is_number());
    return problems;
}

namespace {

ordered_json point_json_15(const Point& p) {
    if (is_glued(p)) {
        const auto& q = as_glued(p);
        return ordered_json{{"face", q.face}, {"u", round_sig15(q.u)}, {"w", round_sig15(q.w)}};
    }
    ordered_json arr = ordered_json::array();
    for (const auto& v : point_json(p)) arr.push_back(round_sig15(v.get<double>()));
    return arr;
}

std::string chart_str(const Point& p) {
    const auto& q = as_glued(p);
    return "face " + std::to_string(q.face) + ", (u, w) = (" + fmt_g17(q.u) + ", " +
           fmt_g17(q.w) + ")";
}

std::string ambient_str(const Point& p) {
    const Vec3 v = glued_ambient(as_glued(p));
    return "(" + fmt_g17(v.x) + ", " + fmt_g17(v.y) + ", " + fmt_g17(v.z) + ")";
}

} // namespace

std::string counterexample_text(const NPropertyReport& r) {
    std::ostringstream os;
    os << "Glued CAT(0) complex: two flat triangles sharing the segment [C, D]\n";
    os << "  A = " << ambient_str(r.A) << "\n";
    os << "  B = " << ambient_str(r.B) << "\n";
    os << "  C = " << ambient_str(r.C) << "\n";
    os << "  D = " << ambient_str(r.D) << "  (midpoint of [A, B])\n";
    os << "  E = " << ambient_str(r.E) << "\n";
    os << "  F = " << ambient_str(r.F) << "  (midpoint of [C, E])\n";
    os << "\n";
    os << "  d(A, C) = " << fmt_g17(r.d_AC) << "  (= sqrt(17))\n";
    os << "  d(A, F) = " << fmt_g17(r.d_AF) << "  (= sqrt((134 + 3 sqrt(7)) / 8))\n";
    os << "  d(A, F) > d(A, C): " << (r.d_AF > r.d_AC ? "true" : "false") << "\n";
    os << "\n";
    os << "  Projections onto the segment [C, E]:\n";
    os << "    P(D) = " << ambient_str(r.proj_D) << "  [" << chart_str(r.proj_D)
       << "], parameter " << fmt_g17(r.param_D) << ", distance " << fmt_g17(r.dist_D) << "\n";
    os << "    P(A) = " << ambient_str(r.proj_A) << "  [" << chart_str(r.proj_A)
       << "], parameter " << fmt_g17(r.param_A) << ", distance " << fmt_g17(r.dist_A) << "\n";
    os << "    P(B) = " << ambient_str(r.proj_B) << "  [" << chart_str(r.proj_B)
       << "], parameter " << fmt_g17(r.param_B) << ", distance " << fmt_g17(r.dist_B) << "\n";
    os << "\n";
    os << "  P(D) = F:                 " << (r.proj_D_equals_F ? "true" : "false") << "\n";
    os << "  P(A) = P(B):              " << (r.proj_A_equals_proj_B ? "true" : "false") << "\n";
    os << "  P(A) != F:                " << (r.proj_A_differs_from_F ? "true" : "false") << "\n";
    os << "  P(D) in [P(A), P(B)]:     " << (r.F_in_segment_projA_projB ? "true" : "false")
       << "\n";
    os << "\n";
    os << "The midpoint D of [A, B] projects outside [P(A), P(B)].\n";
    os << "N-property: " << (r.n_property_violated ? "VIOLATED" : "HOLDS") << "\n";
    return os.str();
}

ordered_json counterexample_json(const NPropertyReport& r) {
    const auto pt = [](const Point& p) { return point_json_15(p); };
    return ordered_json{
        {"points",
         ordered_json{{"A", pt(r.A)},
                      {"B", pt(r.B)},
                      {"C", pt(r.C)},
                      {"D", pt(r.D)},
                      {"E", pt(r.E)},
                      {"F", pt(r.F)}}},
        {"projections",
         ordered_json{{"D", ordered_json{{"point", pt(r.proj_D)},
                                         {"parameter", round_sig15(r.param_D)},
                                         {"distance", round_sig15(r.dist_D)}}},
                      {"A", ordered_json{{"point", pt(r.proj_A)},
                                         {"parameter", round_sig15(r.param_A)},
                                         {"distance", round_sig15(r.dist_A)}}},
                      {"B", ordered_json{{"point", pt(r.proj_B)},
                                         {"parameter", round_sig15(r.param_B)},
                                         {"distance", round_sig15(r.dist_B)}}}}},
        {"d_AC", round_sig15(r.d_AC)},
        {"d_AF", round_sig15(r.d_AF)},
        {"checks",
         ordered_json{{"proj_D_equals_F", r.proj_D_equals_F},
                      {"proj_A_equals_proj_B", r.proj_A_equals_proj_B},
                      {"proj_A_differs_from_F", r.proj_A_differs_from_F},
                      {"F_in_segment_projA_projB", r.F_in_segment_projA_projB}}},
        {"n_property", r.n_property_violated ? "VIOLATED" : "HOLDS"}};
}

ordered_json suite_report_json(const SuiteReport& r) {
    ordered_json fails = ordered_json::array();
    for (const auto& f : r.failures)
        fails.push_back({{"trial", f.trial}, {"margin", f.margin}, {"detail", f.detail}});
    ordered_json comps = ordered_json::array();
    for (const auto& c : r.components) comps.push_back(suite_report_json(c));
    // No timing fields: the emitted report is byte-stable for a fixed seed.
    ordered_json out{{"suite", r.name},       {"trials", r.trials},
                     {"seed", r.seed},        {"tolerance", r.tolerance},
                     {"worst_margin", r.worst_margin}, {"pass", r.pass},
                     {"failures", fails}};
    if (!comps.empty()) out["components"] = comps;
    return out;
}

} // namespace catk
