#include "oiptb/types.hpp"

#include <cmath>

namespace oiptb {

std::vector<std::string> validate_oips(const OipSet& o) {
    std::vector<std::string> report;
    for (const auto& f : oip_fields) {
        if (!std::isfinite(o.*(f.member))) report.push_back(std::string(f.name) + " must be finite");
    }
    if (o.delta_a < 0.0) report.push_back("delta_a >= 0 violated");
    if (o.delta_c < 0.0) report.push_back("delta_c >= 0 violated");
    return report;
}

const std::vector<Material>& default_materials() {
    static const std::vector<Material> db = {
        Material{
            "GaAs",
            OipSet{-4.7642, -6.0354, 9.0528, 5.3134, 5.2952, 1.9014, 11.6705, 3.8331, 4.7758,
                   1.5776, 3.2967, -6.7941, 2.4006, 0.421, 0.174},
            5.6533,
            "As",
            "Ga",
        },
        Material{
            "AlAs",
            OipSet{-8.1639, -0.6369, 14.9740, 7.1118, 4.6210, 7.4231, 6.7832, 7.3042, 3.1458,
                   1.4693, 3.3875, -6.3951, 2.3378, 0.421, 0.024},
            5.6611,
            "As",
            "Al",
        },
    };
    return db;
}

const Material& default_material(const std::string& name) {
    for (const auto& m : default_materials())
        if (m.name == name) return m;
    throw ConfigError("unknown material: " + name);
}

}  // namespace oiptb
