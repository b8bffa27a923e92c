#include "creasefold/suite.hpp"

#include "creasefold/development.hpp"
#include "creasefold/meshio.hpp"
#include "creasefold/pillow.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace creasefold {

bool SuiteResult::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.pass; })
        && std::all_of(stages.begin(), stages.end(), [](const StageTopology& s) { return s.pass; });
}

namespace {

std::string tag(const char* name, double t) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s@t=%.4g", name, t);
    return buf;
}

CheckReport scalar_check(std::string name, int samples, double threshold) {
    return {std::move(name), std::to_string(samples), 0.0, Vec2::Zero(), threshold, false};
}

void record(CheckReport& r, double residual, double s, double v = 0.0) {
    if (!(residual <= r.worst)) {
        r.worst = residual;
        r.at = {s, v};
    }
}

} // namespace

SuiteResult run_check_suite(const FundamentalData& data, const DeformationSchedule& schedule, const SuiteOptions& opt,
                            const Tolerances& tol) {
    SuiteResult out;
    auto& checks = out.checks;
    const double L = data.L(), b = data.b();
    const Profile z = data.zeta();
    const QuarterParametrization pillow(data, tol);
    const DevelopingMap develop(data);
    const auto [s_lo, s_hi] = pillow.guarded_range();

    const MetricField reference = [z](double s, double) { return Metric{1.0, -z->d1(s), 1.0}; };
    GridSpec upper{opt.n_s, opt.n_v, s_lo, s_hi, [z](double s) { return std::pair{0.0, z->value(s)}; }, L};
    GridSpec lower{opt.n_s, opt.n_v, s_lo, s_hi, [z, b](double s) { return std::pair{z->value(s) - b, 0.0}; }, L};

    {
        const ValidationReport v = validate_schedule(schedule, data, opt.n_t, opt.n_s, tol);
        for (const auto& c : v.conditions) {
            CheckReport r = scalar_check("schedule " + c.name, opt.n_s, 0.0);
            r.worst = -c.margin;
            r.at = {c.at, 0.0};
            r.threshold = 0.0;
            r.pass = c.pass;
            checks.push_back(r);
        }
        if (!v.pass())
            return out;
    }

    {
        CheckReport r = scalar_check("half_width", 1, tol.round_trip);
        const double x_end = develop.crease_pattern().position(L).x();
        r.worst = std::abs(x_end - 2.0 * data.half_width());
        r.at = {L, 0.0};
        r.pass = r.worst < r.threshold;
        checks.push_back(r);
    }

    for (int k = 0; k < opt.n_t; ++k) {
        const double t = static_cast<double>(k) / (opt.n_t - 1);
        const DeformedQuarter q = deformed_quarter(data, schedule, t, tol);
        const SurfaceSampler up = [&q](double s, double v) { return q.upper_point(s, v); };
        const SurfaceSampler lo = [&q](double s, double v) { return q.lower_point(s, v); };

        checks.push_back(check_isometry(up, reference, upper, tol.isometry, tag("isometry_upper", t)));
        checks.push_back(check_isometry(lo, reference, lower, tol.isometry, tag("isometry_lower", t)));
        checks.push_back(check_flatness(up, upper, tol.flatness, tag("flatness_upper", t)));
        checks.push_back(check_flatness(lo, lower, tol.flatness, tag("flatness_lower", t)));

        const int n = opt.structure_samples;
        CheckReport height = scalar_check(tag("crease_height", t), n, tol.planarity);
        CheckReport plane = scalar_check(tag("crease_plane", t), n, tol.planarity);
        CheckReport vend = scalar_check(tag("vertical_end_plane", t), n, tol.planarity);
        CheckReport pins = scalar_check(tag("endpoint_pinning", t), 2, tol.planarity);
        CheckReport unit = scalar_check(tag("ruling_norm", t), 1, tol.ruling_norm);
        std::vector<Vec3> crease_samples;
        for (int i = 0; i < n; ++i) {
            const double s = L * i / (n - 1);
            const Vec3 c = q.crease().position(s);
            crease_samples.push_back(c);
            record(height, std::abs(c.y() - z->value(s)), s);
            record(plane, std::abs(c.z() - q.lambda() * c.y()), s);
            record(vend, std::abs(q.vertical_end(s).y() - b), s);
        }
        for (double s : {0.0, L}) {
            const Vec3 c = q.crease().position(s);
            record(pins, std::hypot(c.y(), c.z()), s);
        }
        record(unit, std::abs(q.upper_ruling().norm() - 1.0), 0.0);
        for (CheckReport* r : {&height, &plane, &vend, &pins, &unit}) {
            r->pass = r->worst < r->threshold;
            checks.push_back(*r);
        }

        const PlanarityReport fit = check_crease_planarity(crease_samples);
        CheckReport slope = scalar_check(tag("plane_slope", t), n, 1e-8);
        slope.worst = std::abs(fit.lambda - q.lambda());
        slope.pass = slope.worst < slope.threshold;
        checks.push_back(slope);

        CheckReport dev = check_crease_development(q.crease(), DeformedQuarter::lower_ruling(),
                                                   develop.crease_pattern(), s_lo, s_hi, 20000, tol.round_trip);
        dev.check = tag("crease_development", t);
        checks.push_back(dev);

        if (k == 0 || k == opt.n_t - 1) {
            const bool start = k == 0;
            CheckReport c = scalar_check(start ? "collapse X^0=X" : "collapse X^1=Y", opt.n_s * opt.n_v,
                                         tol.collapse);
            for (int i = 0; i <= opt.n_s; ++i) {
                const double s = L * i / opt.n_s;
                const double v0 = z->value(s) - b, v1 = z->value(s);
                for (int j = 0; j <= opt.n_v; ++j) {
                    const double v = v0 + (v1 - v0) * j / opt.n_v;
                    const Vec3 ref = start ? pillow.point(s, v) : develop.point(s, v);
                    record(c, (q.point(s, v) - ref).norm(), s, v);
                }
            }
            c.pass = c.worst < c.threshold;
            checks.push_back(c);
        }

        StageTopology stage;
        stage.t = t;
        const AssemblyResult mesh = assemble_reflected(q.domain_map(), opt.mesh_n_s, opt.mesh_n_v, tol.weld);
        stage.report = topology_report(mesh.mesh, tol);
        stage.unwelded = mesh.unwelded();
        stage.depth = horizontal_end_depth(data, q.lambda());
        const auto& r = stage.report;
        const bool sphere = r.closed && r.euler_characteristic == 2 && r.self_intersections == 0;
        if (k == 0 || k == opt.n_t - 1)
            stage.pass = sphere && std::abs(stage.depth) < tol.planarity;
        else
            stage.pass = !r.closed && r.self_intersections > 0;
        out.stages.push_back(stage);
    }

    GridSpec dual_grid = upper;
    checks.push_back(check_dual_metrics(pillow.upper_strip(), dual_grid, 1e-8));
    return out;
}

nlohmann::json to_json(const SuiteResult& result) {
    auto checks = nlohmann::json::array();
    for (const auto& c : result.checks)
        checks.push_back(to_json(c));
    auto stages = nlohmann::json::array();
    for (const auto& s : result.stages) {
        stages.push_back({{"t", s.t},
                          {"topology", to_json(s.report)},
                          {"unwelded", s.unwelded},
                          {"horizontal_end_depth", s.depth},
                          {"pass", s.pass}});
    }
    return {{"pass", result.pass()}, {"checks", checks}, {"stages", stages}};
}

} // namespace creasefold
