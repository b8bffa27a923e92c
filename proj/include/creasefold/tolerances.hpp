#pragma once

#include <string>

namespace creasefold {

/// Named numerical tolerances shared by construction and verification.
/// Every field can be overridden from the command line with --tol name=value.
struct Tolerances {
    double boundary = 1e-9;        // tau_bc: zeta(0) = zeta(L) = 0
    double round_trip = 1e-6;      // tau_rt: graph <-> arc-length conversions
    double quadrature = 1e-10;     // adaptive Simpson absolute tolerance
    double endpoint_eps = 1e-3;    // sample s in [eps L, (1 - eps) L]
    double sigma_min = 1e-6;       // EndpointSingularity cutoff
    double kappa_min = 1e-8;       // VanishingCurvature cutoff
    double weld = 1e-6;            // relative to bounding-box diagonal
    double seam = 1e-9;            // intersection contact tolerance, relative to diagonal
    double isometry = 1e-6;
    double flatness = 1e-5;
    double planarity = 1e-9;
    double collapse = 1e-8;        // X^0 = X, X^1 = Y
    double ruling_norm = 1e-12;

    /// Sets a field by name; returns false for unknown names.
    bool set(const std::string& name, double value);
};

} // namespace creasefold
