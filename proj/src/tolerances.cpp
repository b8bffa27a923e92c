#include "creasefold/tolerances.hpp"

#include "creasefold/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace creasefold {

bool Tolerances::set(const std::string& name, double value) {
    const std::map<std::string, double Tolerances::*> fields = {
        {"tau_bc", &Tolerances::boundary},       {"boundary", &Tolerances::boundary},
        {"tau_rt", &Tolerances::round_trip},     {"round_trip", &Tolerances::round_trip},
        {"quadrature", &Tolerances::quadrature}, {"eps_endpoint", &Tolerances::endpoint_eps},
        {"sigma_min", &Tolerances::sigma_min},   {"kappa_min", &Tolerances::kappa_min},
        {"weld", &Tolerances::weld},             {"seam", &Tolerances::seam},
        {"isometry", &Tolerances::isometry},     {"flatness", &Tolerances::flatness},
        {"planarity", &Tolerances::planarity},   {"collapse", &Tolerances::collapse},
        {"ruling_norm", &Tolerances::ruling_norm},
    };
    const auto it = fields.find(name);
    if (it == fields.end())
        return false;
    this->*(it->second) = value;
    return true;
}

double Metric::distance(const Metric& o) const {
    return std::max({std::abs(E - o.E), std::abs(F - o.F), std::abs(G - o.G)});
}

} // namespace creasefold
