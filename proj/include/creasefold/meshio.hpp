#pragma once

#include "creasefold/deformation.hpp"
#include "creasefold/mesh.hpp"
#include "creasefold/profile.hpp"
#include "creasefold/verify.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace creasefold {

// OBJ: "v x y z" lines at 9 significant digits, then "f i j k" with 1-based indices.
std::string to_obj(const TriMesh& mesh);
void export_obj(const TriMesh& mesh, const std::filesystem::path& path);
/// Reads v and f records (triangles only; "f a/b/c" forms keep the vertex index).
TriMesh load_obj(const std::filesystem::path& path);
TriMesh parse_obj(const std::string& text);

// SVG of the double rectangle [0, 2a] x [0, 2b] with the crease pattern
// gamma1 = (x, psi(x)) and its mirror gamma2 = (x, 2b - psi(x)), in raw coordinates.
struct CreasePatternDrawing {
    double a = 0.0;
    double b = 0.0;
    std::vector<Vec2> gamma1;
    std::vector<Vec2> gamma2() const;
};

CreasePatternDrawing crease_pattern_drawing(const FundamentalData& data, int n_samples = 201);
std::string to_svg(const CreasePatternDrawing& drawing);
void export_svg(const CreasePatternDrawing& drawing, const std::filesystem::path& path);

struct SweepRow {
    double t = 0.0;
    double lambda = 0.0;
    double mu = 0.0;
    bool closed = false;
    long euler_characteristic = 0;
    std::size_t boundary_edges = 0;
    std::size_t unwelded = 0;
    std::size_t self_intersections = 0;
    double signed_volume = 0.0;
    bool volume_valid = false;
    double horizontal_end_depth = 0.0;
};

struct SweepTrace {
    std::vector<SweepRow> rows;
};

struct SweepStage {
    SweepRow row;
    TriMesh mesh;
};

/// Assembles the stage at t and measures it.
SweepStage sweep_stage(const FundamentalData& data, const DeformationSchedule& schedule, double t, int n_s, int n_v,
                       const Tolerances& tol = {});
SweepTrace sweep_trace(const FundamentalData& data, const DeformationSchedule& schedule,
                       const std::vector<double>& t_values, int n_s, int n_v, const Tolerances& tol = {});

nlohmann::json to_json(const SweepTrace& trace);
nlohmann::json to_json(const CheckReport& report);
nlohmann::json to_json(const TopologyReport& report);
nlohmann::json to_json(const ValidationReport& report);
void export_trace(const SweepTrace& trace, const std::filesystem::path& path);

/// Writes text to path; throws IoError.
void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

/// {"kind": "hyperbolic"|"circular"|"poly"|"table", "params": {...}, "L": number}
Profile parse_profile(const nlohmann::json& j);
/// {"b": number, "zeta": <profile descriptor>}
FundamentalData parse_fundamental_data(const nlohmann::json& j);
/// {"lambda": <descriptor or "1-t"|"cos">, "mu": ...}; missing fields default to 1-t and 0.
DeformationSchedule parse_schedule(const nlohmann::json& j);
ScheduleFunction parse_schedule_function(const nlohmann::json& j);
/// {"t_values": [...]}
std::vector<double> parse_t_values(const nlohmann::json& j);

} // namespace creasefold
