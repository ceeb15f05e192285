#ifndef OIPTB_KPATH_HPP
#define OIPTB_KPATH_HPP

#include <string>
#include <vector>

#include "oiptb/types.hpp"

namespace oiptb {

// Piecewise-linear path through fcc high-symmetry points (G, X, L, W, K, U),
// e.g. "L-G-X" with a fixed number of samples per segment.
struct KPathPoint {
    WaveVector k;
    double fraction = 0.0;  // cumulative path position in [0, 1]
};

struct KPath {
    std::vector<std::string> labels;
    int samples_per_segment = 0;

    static KPath parse(const std::string& spec, int samples_per_segment);
    std::vector<KPathPoint> sample() const;
};

WaveVector high_symmetry_point(const std::string& label);

}  // namespace oiptb

#endif
