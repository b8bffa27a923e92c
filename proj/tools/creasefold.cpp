#include "creasefold/deformation.hpp"
#include "creasefold/development.hpp"
#include "creasefold/errors.hpp"
#include "creasefold/meshio.hpp"
#include "creasefold/pillow.hpp"
#include "creasefold/suite.hpp"
#include "creasefold/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <regex>

namespace fs = std::filesystem;
using namespace creasefold;
using nlohmann::json;

namespace {

struct Globals {
    std::string input;
    std::string grid = "64x32";
    std::optional<double> eps_endpoint;
    std::vector<std::string> tol;
    std::string out = ".";
};

struct Context {
    FundamentalData data = example_data();
    DeformationSchedule schedule;
    std::optional<std::vector<double>> t_values;
    int n_s = 64;
    int n_v = 32;
    Tolerances tol;
    fs::path out;
};

Context make_context(const Globals& g) {
    Context c;
    if (!g.input.empty()) {
        json j;
        try {
            j = json::parse(read_text(g.input));
        } catch (const json::parse_error& e) {
            throw InvalidDescriptor(g.input + ": " + e.what());
        }
        c.data = parse_fundamental_data(j.contains("data") ? j.at("data") : j);
        if (j.contains("schedule"))
            c.schedule = parse_schedule(j.at("schedule"));
        if (j.contains("t_values"))
            c.t_values = parse_t_values(j);
    }
    static const std::regex grid_re(R"((\d+)x(\d+))");
    std::smatch m;
    if (!std::regex_match(g.grid, m, grid_re))
        throw DomainError("--grid expects NSxNV, got \"" + g.grid + "\"");
    c.n_s = std::stoi(m[1]);
    c.n_v = std::stoi(m[2]);
    if (g.eps_endpoint)
        c.tol.endpoint_eps = *g.eps_endpoint;
    for (const auto& kv : g.tol) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw DomainError("--tol expects name=value, got \"" + kv + "\"");
        double value = 0.0;
        try {
            value = std::stod(kv.substr(eq + 1));
        } catch (const std::exception&) {
            throw DomainError("--tol value is not a number in \"" + kv + "\"");
        }
        if (!c.tol.set(kv.substr(0, eq), value))
            throw DomainError("unknown tolerance \"" + kv.substr(0, eq) + "\"");
    }
    c.out = g.out;
    fs::create_directories(c.out);
    return c;
}

std::string t_label(double t) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", t);
    return buf;
}

void write_json(const fs::path& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

bool report_line(const std::string& what, bool pass) {
    std::cout << (pass ? "PASS " : "FAIL ") << what << "\n";
    return pass;
}

bool sphere(const TopologyReport& r) { return r.closed && r.euler_characteristic == 2 && r.self_intersections == 0; }

bool cmd_validate(const Context& c) {
    const ValidationReport data = validate_fundamental_data(c.data.b(), c.data.profile(), 199, c.tol);
    const ValidationReport sched = validate_schedule(c.schedule, c.data, 11, 199, c.tol);
    write_json(c.out / "validate.json", {{"fundamental_data", to_json(data)}, {"schedule", to_json(sched)}});
    const bool a = report_line("fundamental data", data.pass());
    const bool b = report_line("schedule " + c.schedule.lambda.name() + ", " + c.schedule.mu.name(), sched.pass());
    return a && b;
}

bool cmd_build(const Context& c) {
    const TriMesh mesh = assemble_box(quarter_parametrization(c.data, c.tol), c.n_s, c.n_v);
    const TopologyReport r = topology_report(mesh, c.tol);
    export_obj(mesh, c.out / "pillow_box.obj");
    write_json(c.out / "pillow_box.json", to_json(r));
    return report_line("pillow box is a closed sphere", sphere(r));
}

bool cmd_develop(const Context& c) {
    const DevelopingMap dev = developing_map(c.data);
    const Profile psi = crease_pattern_graph(c.data);
    const ConditionReport cond = validate_pattern_conditions(*psi, c.data.b(), 199, c.tol);
    const TriMesh rect = double_rectangle_mesh(c.data, std::max(c.n_s, c.n_v));
    const TopologyReport r = topology_report(rect, c.tol);
    export_obj(rect, c.out / "double_rectangle.obj");
    export_svg(crease_pattern_drawing(c.data), c.out / "crease_pattern.svg");
    auto conditions = json::array();
    for (const auto& m : cond.conditions)
        conditions.push_back({{"name", m.name}, {"margin", m.margin}, {"at", m.at}, {"pass", m.pass}});
    write_json(c.out / "develop.json", {{"a", dev.half_width()},
                                        {"b", c.data.b()},
                                        {"width", 2.0 * dev.half_width()},
                                        {"height", 2.0 * c.data.b()},
                                        {"pattern_conditions", conditions},
                                        {"topology", to_json(r)}});
    const bool a = report_line("crease pattern conditions", cond.pass());
    const bool b = report_line("double rectangle is closed with chi = 2",
                               r.closed && r.euler_characteristic == 2 && r.signed_volume == 0.0);
    return a && b;
}

bool cmd_deform(const Context& c, const std::vector<double>& ts) {
    SweepTrace trace;
    for (double t : ts) {
        const SweepStage stage = sweep_stage(c.data, c.schedule, t, c.n_s, c.n_v, c.tol);
        export_obj(stage.mesh, c.out / ("deform_t" + t_label(t) + ".obj"));
        trace.rows.push_back(stage.row);
    }
    export_trace(trace, c.out / "trace.json");
    return report_line("deformation stages written: " + std::to_string(ts.size()), true);
}

bool cmd_family(const Context& c) {
    const std::vector<double> ts = c.t_values.value_or(std::vector<double>{0.0, 0.25, 0.5, 0.75, 0.95});
    auto rows = json::array();
    bool ok = true;
    for (double t : ts) {
        const ScaledFamilyMember m = pattern_scaling_family(c.data, t, c.n_s, c.n_v, c.tol);
        const TopologyReport r = topology_report(m.mesh, c.tol);
        export_obj(m.mesh, c.out / ("family_t" + t_label(t) + ".obj"));
        const double a = m.data ? m.data->half_width() : c.data.half_width();
        const double b = m.data ? m.data->b() : c.data.b();
        rows.push_back({{"t", t}, {"width", 2.0 * a}, {"height", 2.0 * b}, {"topology", to_json(r)}});
        ok = report_line("family member t=" + t_label(t) + " is closed with chi = 2",
                         r.closed && r.euler_characteristic == 2) && ok;
    }
    write_json(c.out / "family.json", rows);
    return ok;
}

bool cmd_verify(const Context& c) {
    SuiteOptions opt;
    opt.n_s = c.n_s;
    opt.n_v = c.n_v;
    const SuiteResult r = run_check_suite(c.data, c.schedule, opt, c.tol);
    write_json(c.out / "verify.json", to_json(r));
    std::size_t failed = 0;
    for (const auto& ch : r.checks)
        if (!ch.pass) {
            ++failed;
            report_line(ch.check, false);
        }
    for (const auto& s : r.stages)
        if (!s.pass) {
            ++failed;
            report_line("topology@t=" + t_label(s.t), false);
        }
    return report_line("check suite (" + std::to_string(r.checks.size() + r.stages.size()) + " checks, " +
                           std::to_string(failed) + " failed)",
                       r.pass());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pillow boxes, their developments and crease-preserving isometric deformations"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--input", g.input, "Fundamental data JSON (default: the hyperbolic example)")->check(CLI::ExistingFile);
    app.add_option("--grid", g.grid, "Sampling grid NSxNV")->capture_default_str();
    app.add_option("--eps-endpoint", g.eps_endpoint, "Relative endpoint guard for frame sampling");
    app.add_option("--tol", g.tol, "Tolerance override name=value (repeatable)");
    app.add_option("--out", g.out, "Output directory")->capture_default_str();

    auto* validate = app.add_subcommand("validate", "Check fundamental data and schedule hypotheses");
    auto* build = app.add_subcommand("build", "Write the pillow box mesh");
    auto* develop = app.add_subcommand("develop", "Write the double rectangle and crease pattern SVG");
    auto* deform = app.add_subcommand("deform", "Write deformation stages and a sweep trace");
    double t_single = 0.0;
    int sweep = 0;
    auto* t_opt = deform->add_option("--t", t_single, "Single stage t in [0, 1]")->check(CLI::Range(0.0, 1.0));
    auto* sweep_opt = deform->add_option("--sweep", sweep, "Uniform sweep with n stages")->check(CLI::Range(2, 100000));
    t_opt->excludes(sweep_opt);
    auto* family = app.add_subcommand("family", "Write the pattern-scaling family");
    bool pattern_scaling = false;
    family->add_flag("--pattern-scaling", pattern_scaling, "Scale the crease pattern by (1 - t)")->required();
    auto* verify = app.add_subcommand("verify", "Run the full check suite");
    bool all = false;
    verify->add_flag("--all", all, "Run every check")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        const Context c = make_context(g);
        if (deform->parsed() && t_opt->count() == 0 && sweep_opt->count() == 0 && !c.t_values) {
            std::cerr << "deform: one of --t, --sweep or an input file with t_values is required\n";
            return 2;
        }
        bool ok = false;
        if (validate->parsed())
            ok = cmd_validate(c);
        else if (build->parsed())
            ok = cmd_build(c);
        else if (develop->parsed())
            ok = cmd_develop(c);
        else if (deform->parsed()) {
            std::vector<double> ts;
            if (t_opt->count())
                ts.push_back(t_single);
            else if (sweep_opt->count() == 0)
                ts = *c.t_values;
            else
                for (int i = 0; i < sweep; ++i)
                    ts.push_back(static_cast<double>(i) / (sweep - 1));
            ok = cmd_deform(c, ts);
        } else if (family->parsed())
            ok = cmd_family(c);
        else if (verify->parsed())
            ok = cmd_verify(c);
        return ok ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << e.kind() << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
