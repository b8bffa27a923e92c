#pragma once

#include "creasefold/deformation.hpp"
#include "creasefold/verify.hpp"

#include <json.hpp>

#include <vector>

namespace creasefold {

struct SuiteOptions {
    int n_s = 64;
    int n_v = 32;
    int n_t = 11;              // t = 0, 0.1, ..., 1
    int mesh_n_s = 32;         // topology meshes
    int mesh_n_v = 16;
    int structure_samples = 1001;
};

struct StageTopology {
    double t = 0.0;
    TopologyReport report;
    std::size_t unwelded = 0;
    double depth = 0.0;
    bool pass = false;  // sphere at t in {0, 1}, broken (open and self-intersecting) in between
};

struct SuiteResult {
    std::vector<CheckReport> checks;
    std::vector<StageTopology> stages;
    bool pass() const;
};

/// Every numerical certificate for one set of fundamental data under one schedule.
SuiteResult run_check_suite(const FundamentalData& data, const DeformationSchedule& schedule,
                            const SuiteOptions& opt = {}, const Tolerances& tol = {});

nlohmann::json to_json(const SuiteResult& result);

} // namespace creasefold
