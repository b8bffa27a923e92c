#include "creasefold/meshio.hpp"

#include "creasefold/development.hpp"
#include "creasefold/errors.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace creasefold {

namespace {

std::string fmt(const char* spec, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, x);
    return buf;
}

std::string g9(double x) { return fmt("%.9g", x + 0.0); }

} // namespace

std::string to_obj(const TriMesh& mesh) {
    std::string out;
    out.reserve(mesh.vertices.size() * 40 + mesh.triangles.size() * 24);
    for (const auto& v : mesh.vertices)
        out += "v " + g9(v.x()) + " " + g9(v.y()) + " " + g9(v.z()) + "\n";
    for (const auto& t : mesh.triangles)
        out += "f " + std::to_string(t[0] + 1) + " " + std::to_string(t[1] + 1) + " " + std::to_string(t[2] + 1) + "\n";
    return out;
}

void export_obj(const TriMesh& mesh, const std::filesystem::path& path) { write_text(path, to_obj(mesh)); }

TriMesh parse_obj(const std::string& text) {
    TriMesh mesh;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#')
            continue;
        if (tag == "v") {
            double x, y, z;
            if (!(ls >> x >> y >> z))
                throw IoError("bad vertex record on line " + std::to_string(lineno));
            mesh.vertices.emplace_back(x, y, z);
        } else if (tag == "f") {
            std::array<int, 3> t{};
            for (int& k : t) {
                std::string tok;
                if (!(ls >> tok))
                    throw IoError("face on line " + std::to_string(lineno) + " is not a triangle");
                k = std::stoi(tok.substr(0, tok.find('/'))) - 1;
            }
            std::string extra;
            if (ls >> extra)
                throw IoError("face on line " + std::to_string(lineno) + " is not a triangle");
            mesh.triangles.push_back(t);
        }
    }
    try {
        mesh.check_indices();
    } catch (const DomainError& e) {
        throw IoError(std::string("OBJ: ") + e.what());
    }
    return mesh;
}

TriMesh load_obj(const std::filesystem::path& path) { return parse_obj(read_text(path)); }

std::vector<Vec2> CreasePatternDrawing::gamma2() const {
    std::vector<Vec2> out;
    out.reserve(gamma1.size());
    for (const auto& p : gamma1)
        out.emplace_back(p.x(), 2.0 * b - p.y());
    return out;
}

CreasePatternDrawing crease_pattern_drawing(const FundamentalData& data, int n_samples) {
    if (n_samples < 2)
        throw DomainError("crease pattern drawing needs at least 2 samples");
    const CreasePatternCurve gamma(data.zeta());
    CreasePatternDrawing d;
    d.a = gamma.half_width();
    d.b = data.b();
    for (int i = 0; i < n_samples; ++i) {
        const double s = data.L() * i / (n_samples - 1);
        const Vec3 p = gamma.position(s);
        d.gamma1.emplace_back(p.x(), p.y());
    }
    d.gamma1.front().y() = 0.0;
    d.gamma1.back().y() = 0.0;
    return d;
}

std::string to_svg(const CreasePatternDrawing& d) {
    const double w = 2.0 * d.a, h = 2.0 * d.b;
    const double pad = 0.05 * std::max(w, h);
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + g9(-pad) + " " + g9(-pad) + " " +
           g9(w + 2 * pad) + " " + g9(h + 2 * pad) + "\">\n";
    out += "<g transform=\"matrix(1 0 0 -1 0 " + g9(h) + ")\" fill=\"none\" stroke-width=\"" + g9(0.005 * w) + "\">\n";
    out += "<rect id=\"rectangle\" x=\"0\" y=\"0\" width=\"" + g9(w) + "\" height=\"" + g9(h) + "\" stroke=\"black\"/>\n";
    const auto polyline = [&](const char* id, const std::vector<Vec2>& pts) {
        out += std::string("<polyline id=\"") + id + "\" stroke=\"red\" points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i)
            out += (i ? " " : "") + g9(pts[i].x()) + "," + g9(pts[i].y());
        out += "\"/>\n";
    };
    polyline("gamma1", d.gamma1);
    polyline("gamma2", d.gamma2());
    out += "</g>\n</svg>\n";
    return out;
}

void export_svg(const CreasePatternDrawing& drawing, const std::filesystem::path& path) {
    write_text(path, to_svg(drawing));
}

SweepStage sweep_stage(const FundamentalData& data, const DeformationSchedule& schedule, double t, int n_s, int n_v,
                       const Tolerances& tol) {
    const DeformedQuarter q = deformed_quarter(data, schedule, t, tol);
    AssemblyResult a = assemble_reflected(q.domain_map(), n_s, n_v, tol.weld);
    const TopologyReport r = topology_report(a.mesh, tol);
    SweepRow row{t,
                 q.lambda(),
                 q.mu(),
                 r.closed,
                 r.euler_characteristic,
                 r.boundary_edges,
                 a.unwelded(),
                 r.self_intersections,
                 r.signed_volume,
                 r.volume_valid,
                 horizontal_end_depth(data, q.lambda())};
    return {row, std::move(a.mesh)};
}

SweepTrace sweep_trace(const FundamentalData& data, const DeformationSchedule& schedule,
                       const std::vector<double>& t_values, int n_s, int n_v, const Tolerances& tol) {
    SweepTrace trace;
    for (double t : t_values)
        trace.rows.push_back(sweep_stage(data, schedule, t, n_s, n_v, tol).row);
    return trace;
}

nlohmann::json to_json(const SweepTrace& trace) {
    auto rows = nlohmann::json::array();
    for (const auto& r : trace.rows) {
        rows.push_back({{"t", r.t},
                        {"lambda", r.lambda},
                        {"mu", r.mu},
                        {"closed", r.closed},
                        {"euler_characteristic", r.euler_characteristic},
                        {"boundary_edges", r.boundary_edges},
                        {"unwelded", r.unwelded},
                        {"self_intersections", r.self_intersections},
                        {"signed_volume", r.signed_volume},
                        {"volume_valid", r.volume_valid},
                        {"horizontal_end_depth", r.horizontal_end_depth}});
    }
    return rows;
}

nlohmann::json to_json(const CheckReport& r) {
    return {{"check", r.check},
            {"grid", r.grid},
            {"worst", r.worst},
            {"at", {r.at.x(), r.at.y()}},
            {"threshold", r.threshold},
            {"pass", r.pass}};
}

nlohmann::json to_json(const TopologyReport& r) {
    return {{"vertices", r.vertices},
            {"edges", r.edges},
            {"faces", r.faces},
            {"euler_characteristic", r.euler_characteristic},
            {"closed", r.closed},
            {"boundary_edges", r.boundary_edges},
            {"nonmanifold_edges", r.nonmanifold_edges},
            {"consistently_oriented", r.consistently_oriented},
            {"self_intersections", r.self_intersections},
            {"signed_volume", r.signed_volume},
            {"volume_valid", r.volume_valid}};
}

nlohmann::json to_json(const ValidationReport& r) {
    const auto margins = [](const std::vector<ConditionMargin>& cs) {
        auto arr = nlohmann::json::array();
        for (const auto& c : cs)
            arr.push_back({{"name", c.name}, {"margin", c.margin}, {"at", c.at}, {"pass", c.pass}});
        return arr;
    };
    return {{"pass", r.pass()}, {"conditions", margins(r.conditions)}, {"endpoint_notes", margins(r.endpoint_notes)}};
}

void export_trace(const SweepTrace& trace, const std::filesystem::path& path) {
    write_text(path, to_json(trace).dump(2) + "\n");
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open " + path.string() + " for writing");
    out << text;
    if (!out)
        throw IoError("write to " + path.string() + " failed");
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace {

template <typename T>
T field(const nlohmann::json& j, const char* key, const char* where) {
    if (!j.is_object() || !j.contains(key))
        throw InvalidDescriptor(std::string(where) + " is missing \"" + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidDescriptor(std::string(where) + " field \"" + key + "\": " + e.what());
    }
}

} // namespace

Profile parse_profile(const nlohmann::json& j) {
    const auto kind = field<std::string>(j, "kind", "profile descriptor");
    const nlohmann::json params = j.contains("params") ? j.at("params") : nlohmann::json::object();
    if (kind == "table") {
        auto s = field<std::vector<double>>(params, "s", "table params");
        auto v = field<std::vector<double>>(params, "values", "table params");
        if (j.contains("L") && !s.empty() && std::abs(field<double>(j, "L", "profile descriptor") - s.back()) > 1e-12)
            throw InvalidDescriptor("table profile: L does not match the last s sample");
        return make_spline_table(std::move(s), std::move(v));
    }
    const double L = field<double>(j, "L", "profile descriptor");
    if (kind == "hyperbolic")
        return make_hyperbolic(L, field<double>(params, "r", "hyperbolic params"));
    if (kind == "circular")
        return make_circular_arc(L, field<double>(params, "R", "circular params"));
    if (kind == "poly")
        return make_polynomial(L, field<std::vector<double>>(params, "coefficients", "poly params"));
    throw InvalidDescriptor("unknown profile kind \"" + kind + "\"");
}

FundamentalData parse_fundamental_data(const nlohmann::json& j) {
    const double b = field<double>(j, "b", "fundamental data");
    if (!j.contains("zeta"))
        throw InvalidDescriptor("fundamental data is missing \"zeta\"");
    return FundamentalData(b, parse_profile(j.at("zeta")));
}

ScheduleFunction parse_schedule_function(const nlohmann::json& j) {
    if (j.is_number())
        return ScheduleFunction::constant(j.get<double>());
    if (j.is_string()) {
        const auto name = j.get<std::string>();
        if (name == "1-t")
            return ScheduleFunction::one_minus_t();
        if (name == "cos")
            return ScheduleFunction::cosine();
        if (name == "zero")
            return ScheduleFunction::constant(0.0);
        throw InvalidDescriptor("unknown schedule function \"" + name + "\"");
    }
    const auto kind = field<std::string>(j, "kind", "schedule descriptor");
    const nlohmann::json params = j.contains("params") ? j.at("params") : nlohmann::json::object();
    if (kind == "poly")
        return ScheduleFunction::polynomial(field<std::vector<double>>(params, "coefficients", "poly params"));
    if (kind == "table")
        return ScheduleFunction::table(field<std::vector<double>>(params, "t", "table params"),
                                       field<std::vector<double>>(params, "values", "table params"));
    if (kind == "hyperbolic" || kind == "circular") {
        const Profile p = parse_profile(j);
        return ScheduleFunction::custom(kind, [p](double t) { return p->value(t); });
    }
    throw InvalidDescriptor("unknown schedule kind \"" + kind + "\"");
}

DeformationSchedule parse_schedule(const nlohmann::json& j) {
    DeformationSchedule s;
    if (!j.is_object())
        throw InvalidDescriptor("schedule descriptor must be an object");
    if (j.contains("lambda"))
        s.lambda = parse_schedule_function(j.at("lambda"));
    if (j.contains("mu"))
        s.mu = parse_schedule_function(j.at("mu"));
    return s;
}

std::vector<double> parse_t_values(const nlohmann::json& j) {
    auto t = field<std::vector<double>>(j, "t_values", "sweep spec");
    for (double x : t)
        if (!(x >= 0.0 && x <= 1.0))
            throw InvalidDescriptor("sweep t value " + std::to_string(x) + " is outside [0, 1]");
    return t;
}

} // namespace creasefold
