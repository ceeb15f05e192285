#ifndef OIPTB_PROPERTIES_HPP
#define OIPTB_PROPERTIES_HPP

#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "oiptb/types.hpp"

namespace oiptb {

// The 23 bulk observables: zone-center/zone-edge energies (eV, referenced
// to the valence maximum at Gamma) and effective-mass ratios m*/m0.
enum class BandFeature {
    Gamma6c,
    DeltaSo,
    MGamma,
    MLh001,
    MLh011,
    MLh111,
    MHh001,
    MHh011,
    MHh111,
    MSo,
    L6c,
    Gamma6v,
    Gamma7c,
    Gamma8c,
    X5v,
    X6v,
    X7v,
    X6c,
    X7c,
    L5v,
    L6v,
    L7v,
    L7c,
};

inline constexpr int kNumBandFeatures = 23;

const std::vector<BandFeature>& all_band_features();
const char* feature_label(BandFeature f);
std::optional<BandFeature> parse_feature_label(const std::string& label);
bool is_mass_feature(BandFeature f);

// All 23 features from one parameter set. Energy features are eigenvalue
// indices at Gamma/X/L (sorted ascending; the valence manifold holds four
// states per formula unit), mass features come from finite-difference
// curvature at Gamma.
std::map<BandFeature, double> extract_features(const OipSet& o, double lattice_constant);

// Central 5-point second derivative of `energy` (a function of a wave vector
// in 2*pi/a units) along a unit direction, converted to eV*A^2.
template <typename EnergyFn>
double curvature_5point(EnergyFn&& energy, double lattice_constant,
                        const std::array<double, 3>& direction, const WaveVector& at,
                        double step_frac) {
    const double norm = std::sqrt(direction[0] * direction[0] + direction[1] * direction[1] +
                                  direction[2] * direction[2]);
    if (!(norm > 0.0)) throw ConfigError("curvature: zero direction");
    std::array<double, 5> e;
    for (int j = -2; j <= 2; ++j) {
        const double s = j * step_frac / norm;
        e[static_cast<std::size_t>(j + 2)] =
            energy(WaveVector{at.kx + s * direction[0], at.ky + s * direction[1],
                              at.kz + s * direction[2]});
    }
    const double d2 =
        (-e[0] + 16.0 * e[1] - 30.0 * e[2] + 16.0 * e[3] - e[4]) / (12.0 * step_frac * step_frac);
    const double to_inv_angstrom = 2.0 * std::numbers::pi / lattice_constant;
    return d2 / (to_inv_angstrom * to_inv_angstrom);
}

// m*/m0 from a central 5-point second difference with step
// delta_k = step_frac * 2*pi/a along `direction`, band tracked by sorted
// index. Negative for valence maxima.
double effective_mass(const OipSet& o, double lattice_constant, int band_index,
                      const std::array<double, 3>& direction, const WaveVector& at = {},
                      double step_frac = 1e-3);

// Sorted band indices competing with `band_index` within `tol` at the
// expansion point; size > 1 flags a degenerate-band ambiguity.
std::vector<int> degenerate_partners(const OipSet& o, double lattice_constant, int band_index,
                                     const WaveVector& at, double tol = 1e-9);

struct KSample {
    std::string label;
    std::vector<double> energies;  // ascending
};

enum class GapCharacter { Direct, Indirect };

struct GapReport {
    double gap = 0.0;            // eV
    GapCharacter character = GapCharacter::Direct;
    std::string cbm_location;
    double vbm_energy = 0.0;     // eV, at Gamma
};

const char* to_string(GapCharacter c);

// gap = min conduction energy over the samples minus the Gamma valence
// maximum; direct iff the minimum sits on the sample labelled `gamma_label`.
GapReport gap_report(const std::vector<KSample>& samples, int n_valence,
                     const std::string& gamma_label = "G");

// lambda = hc / gap, in micrometres. Throws on gap <= 0.
double cutoff_wavelength(double gap_ev);

struct MapeResult {
    double percent = 0.0;
    int n_used = 0;
    int n_skipped = 0;  // missing (NaN) or zero targets
};

// 100 * mean |p - t| / |t| over pairs with finite nonzero targets.
MapeResult mape(const std::vector<double>& predicted, const std::vector<double>& target);

}  // namespace oiptb

#endif
