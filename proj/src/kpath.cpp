#include "oiptb/kpath.hpp"

#include <cmath>
#include <sstream>

namespace oiptb {

WaveVector high_symmetry_point(const std::string& label) {
    if (label == "G" || label == "Gamma") return {0.0, 0.0, 0.0};
    if (label == "X") return {1.0, 0.0, 0.0};
    if (label == "L") return {0.5, 0.5, 0.5};
    if (label == "W") return {1.0, 0.5, 0.0};
    if (label == "K") return {0.75, 0.75, 0.0};
    if (label == "U") return {1.0, 0.25, 0.25};
    throw ConfigError("unknown high-symmetry point: " + label);
}

KPath KPath::parse(const std::string& spec, int samples_per_segment) {
    if (samples_per_segment < 2)
        throw ConfigError("kpath: need at least 2 samples per segment");
    KPath path;
    path.samples_per_segment = samples_per_segment;
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, '-')) {
        if (token.empty()) continue;
        high_symmetry_point(token);  // validate
        path.labels.push_back(token);
    }
    if (path.labels.size() < 2) throw ConfigError("kpath: need at least two points, e.g. L-G-X");
    return path;
}

std::vector<KPathPoint> KPath::sample() const {
    std::vector<WaveVector> nodes;
    for (const auto& l : labels) nodes.push_back(high_symmetry_point(l));

    // Arc length weights so `fraction` is proportional to |dk|.
    std::vector<double> seg_len;
    double total = 0.0;
    for (std::size_t s = 0; s + 1 < nodes.size(); ++s) {
        const double dx = nodes[s + 1].kx - nodes[s].kx;
        const double dy = nodes[s + 1].ky - nodes[s].ky;
        const double dz = nodes[s + 1].kz - nodes[s].kz;
        seg_len.push_back(std::sqrt(dx * dx + dy * dy + dz * dz));
        total += seg_len.back();
    }

    std::vector<KPathPoint> out;
    double walked = 0.0;
    for (std::size_t s = 0; s + 1 < nodes.size(); ++s) {
        const int n = samples_per_segment;
        const int start = s == 0 ? 0 : 1;  // skip duplicated joint points
        for (int j = start; j < n; ++j) {
            const double t = static_cast<double>(j) / (n - 1);
            KPathPoint p;
            p.k = {nodes[s].kx + t * (nodes[s + 1].kx - nodes[s].kx),
                   nodes[s].ky + t * (nodes[s + 1].ky - nodes[s].ky),
                   nodes[s].kz + t * (nodes[s + 1].kz - nodes[s].kz)};
            p.fraction = total > 0.0 ? (walked + t * seg_len[s]) / total : 0.0;
            out.push_back(p);
        }
        walked += seg_len[s];
    }
    return out;
}

}  // namespace oiptb
