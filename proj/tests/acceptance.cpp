#include "creasefold/deformation.hpp"
#include "creasefold/development.hpp"
#include "creasefold/folding_kernel.hpp"
#include "creasefold/pillow.hpp"
#include "creasefold/verify.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

using namespace creasefold;

namespace {

int failures = 0;

void report(int n, bool pass, const std::string& what, double seconds) {
    std::printf("%s criterion %d: %s (%.2f s)\n", pass ? "PASS" : "FAIL", n, what.c_str(), seconds);
    std::fflush(stdout);
    if (!pass)
        ++failures;
}

template <typename F>
void criterion(int n, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = false;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail += std::string(" threw ") + e.what();
    }
    report(n, pass, detail, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
}

std::string fmt(const char* f, double x) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

const FundamentalData data = example_data();
const DeformationSchedule linear = DeformationSchedule::linear();
constexpr double L = 2.0, b = 1.0;

std::vector<double> t_grid(int n) {
    std::vector<double> ts;
    for (int k = 0; k <= n; ++k)
        ts.push_back(static_cast<double>(k) / n);
    return ts;
}

std::pair<GridSpec, GridSpec> strip_grids(int n_s, int n_v) {
    const auto [s0, s1] = QuarterParametrization(data).guarded_range();
    return {GridSpec{n_s, n_v, s0, s1, [](double s) { return std::pair{0.0, oracle::zeta(s)}; }, L},
            GridSpec{n_s, n_v, s0, s1, [](double s) { return std::pair{oracle::zeta(s) - b, 0.0}; }, L}};
}

// Richardson-extrapolated central difference
template <typename V, typename F>
V derivative(F&& f, double x, double h) {
    const V d1 = (f(x + h) - f(x - h)) / (2.0 * h);
    const V d2 = (f(x + h / 2) - f(x - h / 2)) / h;
    return (4.0 * d2 - d1) / 3.0;
}

} // namespace

int main() {
    criterion(1, [](std::string& d) {
        const auto [upper, lower] = strip_grids(64, 32);
        const MetricField reference = [](double s, double) { return Metric{1.0, -oracle::dzeta(s), 1.0}; };
        double worst = 0.0;
        for (double t : t_grid(10)) {
            const DeformedQuarter q = deformed_quarter(data, linear, t);
            worst = std::max(worst, check_isometry([&](double s, double v) { return q.upper_point(s, v); }, reference,
                                                   upper, 1e-6).worst);
            worst = std::max(worst, check_isometry([&](double s, double v) { return q.lower_point(s, v); }, reference,
                                                   lower, 1e-6).worst);
        }
        d = "isometry of both strips, 11 stages, 64x32, worst |dI| = " + fmt("%.3g", worst);
        return worst < 1e-6;
    });

    criterion(2, [](std::string& d) {
        const QuarterParametrization X(data);
        const DevelopingMap Y(data);
        const DeformedQuarter q0 = deformed_quarter(data, linear, 0.0);
        const DeformedQuarter q1 = deformed_quarter(data, linear, 1.0);
        double w0 = 0.0, w1 = 0.0;
        for (int i = 0; i <= 64; ++i) {
            const double s = L * i / 64.0;
            const double cx = oracle::crease_x(s), gx = oracle::pattern_x(s), z = oracle::zeta(s);
            for (int j = 0; j <= 32; ++j) {
                const double v = (z - b) + b * j / 32.0;
                const Vec3 x_ref = v >= 0.0 ? Vec3(cx, z, z - v) : Vec3(cx, z - v, z);
                const Vec3 y_ref(gx, z - v, 0.0);
                w0 = std::max({w0, (q0.point(s, v) - X.point(s, v)).norm(), (q0.point(s, v) - x_ref).norm()});
                w1 = std::max({w1, (q1.point(s, v) - Y.point(s, v)).norm(), (q1.point(s, v) - y_ref).norm()});
            }
        }
        d = "X^0 = X to " + fmt("%.3g", w0) + ", X^1 = Y to " + fmt("%.3g", w1);
        return w0 < 1e-8 && w1 < 1e-8;
    });

    criterion(3, [](std::string& d) {
        const auto [upper, lower] = strip_grids(64, 32);
        double worst = 0.0;
        for (double t : t_grid(10)) {
            const DeformedQuarter q = deformed_quarter(data, linear, t);
            worst = std::max(worst, check_flatness([&](double s, double v) { return q.upper_point(s, v); }, upper).worst);
            worst = std::max(worst, check_flatness([&](double s, double v) { return q.lower_point(s, v); }, lower).worst);
        }
        d = "flatness of both strips, 11 stages, worst |K| = " + fmt("%.3g", worst);
        return worst < 1e-5;
    });

    criterion(4, [](std::string& d) {
        double height = 0.0, plane = 0.0, vend = 0.0, pins = 0.0, unit = 0.0;
        for (double t : t_grid(10)) {
            const DeformedQuarter q = deformed_quarter(data, linear, t);
            const double lambda = 1.0 - t;
            for (int i = 0; i <= 1000; ++i) {
                const double s = L * i / 1000.0;
                const Vec3 c = q.crease().position(s);
                height = std::max(height, std::abs(c.y() - oracle::zeta(s)));
                plane = std::max(plane, std::abs(c.z() - lambda * c.y()));
                vend = std::max(vend, std::abs(q.vertical_end(s).y() - b));
            }
            for (double s : {0.0, L})
                pins = std::max(pins, q.crease().position(s).tail<2>().norm());
            unit = std::max(unit, std::abs(q.upper_ruling().norm() - 1.0));
        }
        d = "crease height " + fmt("%.2g", height) + ", plane z = lambda y " + fmt("%.2g", plane) +
            ", vertical end on y = b " + fmt("%.2g", vend) + ", pinned ends " + fmt("%.2g", pins) +
            ", |xi| - 1 " + fmt("%.2g", unit);
        return height < 1e-9 && plane < 1e-9 && vend < 1e-9 && pins < 1e-9 && unit < 1e-12;
    });

    criterion(5, [](std::string& d) {
        const double max_zeta = std::sqrt(2.0) - 1.0;
        double worst = 0.0;
        for (double t : t_grid(10)) {
            const double l = 1.0 - t;
            worst = std::max(worst, std::abs(horizontal_end_depth(data, l) + l * (1 - l * l) / (1 + l * l) * max_zeta));
        }
        const double half = horizontal_end_depth(data, 0.5);
        bool topo = true;
        std::string counts;
        for (double t : {0.0, 0.2, 0.4, 0.6, 0.8, 1.0}) {
            const TopologyReport r = topology_report(assemble_deformed(data, linear, t, 64, 32).mesh);
            const bool end = t == 0.0 || t == 1.0;
            topo = topo && (end ? r.closed && r.euler_characteristic == 2 && r.self_intersections == 0
                                : !r.closed && r.self_intersections > 0);
            counts += " " + std::to_string(r.self_intersections);
        }
        d = "depth vs closed form " + fmt("%.2g", worst) + ", depth(1/2) = " + fmt("%.12f", half) +
            ", intersections at t = 0, .2, .4, .6, .8, 1:" + counts;
        return worst < 1e-8 && std::abs(half + 0.3 * max_zeta) < 1e-8 && std::abs(half + 0.124264) < 1e-6 && topo;
    });

    criterion(6, [](std::string& d) {
        const double two_a = 2.0 * std::log(1.0 + std::sqrt(2.0));
        const DevelopingMap Y(data);
        const double a = Y.half_width();
        bool fills = true;
        double worst = 0.0;
        // invert Y on a grid of the rectangle
        for (int i = 0; i <= 40; ++i) {
            const double x = two_a * i / 40.0;
            double lo = 0.0, hi = L;
            for (int it = 0; it < 80; ++it) {
                const double mid = 0.5 * (lo + hi);
                (Y.point(mid, 0.0).x() < x ? lo : hi) = mid;
            }
            const double s = 0.5 * (lo + hi);
            for (int j = 0; j <= 20; ++j) {
                const double y = b * j / 20.0;
                const double v = oracle::zeta(s) - y;
                fills = fills && v >= oracle::zeta(s) - b - 1e-12 && v <= oracle::zeta(s) + 1e-12;
                worst = std::max(worst, (Y.point(s, v) - Vec3(x, y, 0.0)).norm());
            }
        }
        // and the image stays inside it
        double outside = 0.0;
        for (int i = 0; i <= 64; ++i) {
            const double s = L * i / 64.0;
            for (int j = 0; j <= 16; ++j) {
                const Vec3 p = Y.point(s, oracle::zeta(s) - b * j / 16.0);
                outside = std::max({outside, -p.x(), p.x() - two_a, -p.y(), p.y() - b, std::abs(p.z())});
            }
        }
        const TopologyReport r = topology_report(double_rectangle_mesh(data, 32));
        d = "2a = " + fmt("%.15f", 2 * a) + " (error " + fmt("%.2g", std::abs(2 * a - two_a)) +
            "), rectangle coverage " + fmt("%.2g", worst) + ", overshoot " + fmt("%.2g", outside) +
            ", double rectangle chi = " + std::to_string(r.euler_characteristic) + " volume " +
            fmt("%.3g", r.signed_volume);
        return std::abs(2 * a - two_a) < 1e-8 && std::abs(2 * data.half_width() - two_a) < 1e-8 && fills &&
               worst < 1e-6 && outside < 1e-6 && r.closed && r.euler_characteristic == 2 && r.signed_volume == 0.0;
    });

    criterion(7, [](std::string& d) {
        const double a = data.half_width();
        bool ok = true;
        double previous = std::numeric_limits<double>::infinity(), first = 0.0, last = 0.0, width = 0.0;
        std::string volumes;
        for (double t : {0.0, 0.25, 0.5, 0.75, 0.95}) {
            const ScaledFamilyMember m = pattern_scaling_family(data, t, 64, 32);
            const TopologyReport r = topology_report(m.mesh);
            ok = ok && r.closed && r.euler_characteristic == 2 && r.volume_valid && m.data.has_value();
            if (m.data) {
                const DevelopingMap Y(*m.data);
                width = std::max({width, std::abs(Y.half_width() - a),
                                  std::abs(Y.crease_pattern().position(m.data->L()).x() - 2 * a) / 2,
                                  std::abs(m.data->b() - b)});
            }
            ok = ok && r.signed_volume < previous;
            previous = r.signed_volume;
            (t == 0.0 ? first : last) = r.signed_volume;
            volumes += fmt(" %.4f", r.signed_volume);
        }
        d = "closed spheres, rectangle drift " + fmt("%.2g", width) + ", volumes" + volumes;
        return ok && width < 1e-6 && last < 0.1 * first;
    });

    criterion(8, [](std::string& d) {
        const QuarterParametrization q(data);
        const DevelopableStrip up = q.upper_strip();
        const auto c1 = [](double s) { return Vec3(oracle::sigma(s), oracle::dzeta(s), oracle::dzeta(s)); };
        const Vec3 T = c1(1.0).normalized();
        const Vec3 c2 = derivative<Vec3>(c1, 1.0, 1e-2);
        const double kappa = c2.norm();
        const Vec3 N = c2 / kappa, B = T.cross(N);
        const Vec3 nu = T.cross(QuarterParametrization::upper_ruling()).normalized();
        const double alpha = std::atan2(-nu.dot(N), nu.dot(B));
        const double beta = std::acos(QuarterParametrization::upper_ruling().dot(T));
        const double F = -derivative<double>(oracle::zeta, 0.5, 1e-2);

        const double e_kappa = std::abs(frenet_frame(q.crease(), 1.0).kappa - kappa);
        const double e_alpha = std::abs(up.alpha(1.0) - alpha);
        const double e_beta = std::abs(up.beta(1.0) - beta);
        const double v = 0.5 * oracle::zeta(0.5);
        const MetricPair m = first_fundamental_form(up, 0.5, v);
        const double e_F = std::max(std::abs(m.closed_form.F - F), std::abs(m.measured.F - F));
        d = "kappa(1) " + fmt("%.12f", kappa) + " err " + fmt("%.2g", e_kappa) + ", alpha(1) err " +
            fmt("%.2g", e_alpha) + ", beta(1) err " + fmt("%.2g", e_beta) + ", F(0.5) " + fmt("%.6f", F) + " err " +
            fmt("%.2g", e_F);
        return e_kappa < 1e-8 && e_alpha < 1e-8 && e_beta < 1e-8 && e_F < 1e-8 &&
               std::abs(kappa - std::sqrt(2.0)) < 1e-8 && std::abs(alpha - std::numbers::pi / 4) < 1e-8 &&
               std::abs(beta - std::numbers::pi / 2) < 1e-8 && std::abs(F + 0.447214) < 1e-6;
    });

    criterion(9, [](std::string& d) {
        const QuarterParametrization q(data);
        const auto [upper, lower] = strip_grids(64, 32);
        const double pillow = std::max(check_dual_metrics(q.upper_strip(), upper).worst,
                                       check_dual_metrics(q.lower_strip(), lower).worst);
        auto helix = std::make_shared<HelixCurve>(HelixCurve::from_curvature_torsion(0.9, 0.3, 4.0));
        const VRange band = [](double) { return std::pair{-0.3, 0.3}; };
        const DevelopableStrip strip(helix, AngleFunction::constant(0.6), 0.5, 3.5, band);
        const double twisted = check_dual_metrics(strip, GridSpec{64, 32, 0.5, 3.5, band, 3.0}).worst;
        d = "pillow dual metrics differ by " + fmt("%.2g", pillow) + ", helix (tau = 0.3) by " + fmt("%.3g", twisted);
        return pillow < 1e-8 && twisted > 1e-3;
    });

    return failures == 0 ? 0 : 1;
}
