#include <algorithm>
#include <map>
#include <stdexcept>

#include "elasto/harness.hpp"

namespace elasto {

namespace {

const char* const kManufactured = R"(// Mirrors the manufactured-solution accuracy table: point source at x0 inside a starfish, far-field errors of V, K and W.
{
  "name": "manufactured",
  "problem": "manufactured",
  "geometry": {"kind": "starfish"},
  "materials": [{"lambda": 1, "mu": 1}],
  "incidence": {"type": "point_source", "source": [0.1, -0.2], "strength": [1, 0]},
  "formulations": [{"name": "V"}, {"name": "K"}, {"name": "W"}],
  "runs": [{"omega": 16, "n": [32, 64, 128]}, {"omega": 32, "n": [64, 128, 256]}],
  "solver": {"method": "lu"},
  "reference": "point_source",
  "output": {"pivot": "eps_inf", "record_time": false}
}
)";

std::string dirichlet(const char* comment, const char* geometry) {
    return std::string("// ") + comment + R"(
{
  "name": "dirichlet-)" + geometry + R"(",
  "problem": "dirichlet",
  "geometry": {"kind": ")" + geometry + R"("},
  "materials": [{"lambda": 2, "mu": 1}],
  "incidence": {"type": "S", "direction": [0, -1], "polarization": [1, 0]},
  "formulations": [
    {"name": "cfie", "label": "cfie_eta1", "eta": "one"},
    {"name": "cfie", "label": "cfie_opt", "eta": "optimal"},
    {"name": "cfier", "label": "cfier", "kappa": "default"}
  ],
  "runs": [
    {"omega": 10, "n": [64]}, {"omega": 20, "n": [128]}, {"omega": 40, "n": [256]},
    {"omega": 80, "n": [512]}, {"omega": 160, "n": [1024]}
  ],
  "solver": {"tol": 1e-8, "max_iter": 2000},
  "output": {"pivot": "iterations"}
}
)";
}

std::string neumann(const char* comment, const char* geometry) {
    return std::string("// ") + comment + R"(
{
  "name": "neumann-)" + geometry + R"(",
  "problem": "neumann",
  "geometry": {"kind": ")" + geometry + R"("},
  "materials": [{"lambda": 2, "mu": 1}],
  "incidence": {"type": "S", "direction": [0, -1], "polarization": [1, 0]},
  "formulations": [
    {"name": "cfie", "label": "cfie_eta1", "eta": "one"},
    {"name": "cfie", "label": "cfie_opt", "eta": "optimal"},
    {"name": "cfier", "label": "cfier", "kappa": "default"}
  ],
  "runs": [
    {"omega": 10, "n": [64, 128]}, {"omega": 20, "n": [128, 256]}, {"omega": 40, "n": [256, 512]},
    {"omega": 80, "n": [512, 1024]}, {"omega": 160, "n": [1024, 2048]}
  ],
  "solver": {"tol": 1e-8, "max_iter": 2000},
  "output": {"pivot": "iterations"}
}
)";
}

std::string transmission(const char* comment, const char* geometry) {
    return std::string("// ") + comment + R"(
// Material 1 (lambda 2, mu 8) fills the unbounded domain, material 2 (lambda 1, mu 1) the scatterer.
{
  "name": "transmission-)" + geometry + R"(",
  "problem": "transmission",
  "geometry": {"kind": ")" + geometry + R"("},
  "materials": [{"lambda": 2, "mu": 8}, {"lambda": 1, "mu": 1}],
  "interior": "second",
  "incidence": {"type": "P", "direction": [0, -1]},
  "formulations": [
    {"name": "kr", "label": "kr"},
    {"name": "dcfier", "label": "regularized"},
    {"name": "os", "label": "os"}
  ],
  "runs": [
    {"omega": 10, "n": [128]}, {"omega": 20, "n": [256]}, {"omega": 40, "n": [512]},
    {"omega": 80, "n": [1024]}, {"omega": 160, "n": [2048]}
  ],
  "solver": {"tol": 1e-6, "max_iter": 2000},
  "output": {"pivot": "iterations"}
}
)";
}

const std::map<std::string, std::string>& presets() {
    static const std::map<std::string, std::string> m{
        {"manufactured", kManufactured},
        {"dirichlet-circle", dirichlet("Mirrors the Dirichlet iteration table for the unit circle (S-wave, CFIE with two couplings and CFIER).", "circle")},
        {"dirichlet-starfish", dirichlet("Mirrors the Dirichlet iteration table for the starfish (S-wave, CFIE with two couplings and CFIER).", "starfish")},
        {"dirichlet-cavity", dirichlet("Mirrors the Dirichlet iteration table for the cavity (S-wave, CFIE with two couplings and CFIER).", "cavity")},
        {"neumann-starfish", neumann("Mirrors the Neumann iteration table for the starfish, coarse and fine grid per frequency.", "starfish")},
        {"neumann-cavity", neumann("Mirrors the Neumann iteration table for the cavity, coarse and fine grid per frequency.", "cavity")},
        {"transmission-starfish", transmission("Mirrors the transmission iteration table for the starfish (KR, regularized, optimized Schwarz).", "starfish")},
        {"transmission-cavity", transmission("Mirrors the transmission iteration table for the cavity (KR, regularized, optimized Schwarz).", "cavity")},
    };
    return m;
}

const std::map<std::string, std::string>& aliases() {
    static const std::map<std::string, std::string> m{
        {"comp5", "manufactured"},       {"comp6", "dirichlet-circle"},       {"comp7", "dirichlet-starfish"},
        {"comp8", "dirichlet-cavity"},   {"comp9", "neumann-starfish"},       {"comp10", "neumann-cavity"},
        {"comp15", "transmission-starfish"}, {"comp16", "transmission-cavity"},
    };
    return m;
}

}  // namespace

std::vector<std::string> preset_names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : presets()) out.push_back(k);
    return out;
}

std::string preset_text(const std::string& name) {
    const auto a = aliases().find(name);
    const std::string& key = a == aliases().end() ? name : a->second;
    const auto it = presets().find(key);
    if (it == presets().end()) throw std::invalid_argument("unknown preset '" + name + "'");
    return it->second;
}

}  // namespace elasto
