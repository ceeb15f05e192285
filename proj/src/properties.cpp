#include "oiptb/properties.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oiptb/bulk.hpp"

namespace oiptb {

const std::vector<BandFeature>& all_band_features() {
    static const std::vector<BandFeature> all = {
        BandFeature::Gamma6c, BandFeature::DeltaSo, BandFeature::MGamma,  BandFeature::MLh001,
        BandFeature::MLh011,  BandFeature::MLh111,  BandFeature::MHh001,  BandFeature::MHh011,
        BandFeature::MHh111,  BandFeature::MSo,     BandFeature::L6c,     BandFeature::Gamma6v,
        BandFeature::Gamma7c, BandFeature::Gamma8c, BandFeature::X5v,     BandFeature::X6v,
        BandFeature::X7v,     BandFeature::X6c,     BandFeature::X7c,     BandFeature::L5v,
        BandFeature::L6v,     BandFeature::L7v,     BandFeature::L7c,
    };
    return all;
}

const char* feature_label(BandFeature f) {
    switch (f) {
        case BandFeature::Gamma6c: return "Gamma6c";
        case BandFeature::DeltaSo: return "Delta_so";
        case BandFeature::MGamma: return "m_Gamma";
        case BandFeature::MLh001: return "m_lh_001";
        case BandFeature::MLh011: return "m_lh_011";
        case BandFeature::MLh111: return "m_lh_111";
        case BandFeature::MHh001: return "m_hh_001";
        case BandFeature::MHh011: return "m_hh_011";
        case BandFeature::MHh111: return "m_hh_111";
        case BandFeature::MSo: return "m_so";
        case BandFeature::L6c: return "L6c";
        case BandFeature::Gamma6v: return "Gamma6v";
        case BandFeature::Gamma7c: return "Gamma7c";
        case BandFeature::Gamma8c: return "Gamma8c";
        case BandFeature::X5v: return "X5v";
        case BandFeature::X6v: return "X6v";
        case BandFeature::X7v: return "X7v";
        case BandFeature::X6c: return "X6c";
        case BandFeature::X7c: return "X7c";
        case BandFeature::L5v: return "L5v";
        case BandFeature::L6v: return "L6v";
        case BandFeature::L7v: return "L7v";
        case BandFeature::L7c: return "L7c";
    }
    return "?";
}

std::optional<BandFeature> parse_feature_label(const std::string& label) {
    for (BandFeature f : all_band_features())
        if (label == feature_label(f)) return f;
    return std::nullopt;
}

bool is_mass_feature(BandFeature f) {
    switch (f) {
        case BandFeature::MGamma:
        case BandFeature::MLh001:
        case BandFeature::MLh011:
        case BandFeature::MLh111:
        case BandFeature::MHh001:
        case BandFeature::MHh011:
        case BandFeature::MHh111:
        case BandFeature::MSo:
            return true;
        default:
            return false;
    }
}

double effective_mass(const OipSet& o, double a, int band, const std::array<double, 3>& direction,
                      const WaveVector& at, double step_frac) {
    if (band < 0 || band > 9) throw ConfigError("effective_mass: band index out of range");
    const auto energy = [&](const WaveVector& k) {
        return band_energies(o, k, a)[static_cast<std::size_t>(band)];
    };
    return constants::hbar2_over_m0 / curvature_5point(energy, a, direction, at, step_frac);
}

std::vector<int> degenerate_partners(const OipSet& o, double a, int band, const WaveVector& at,
                                     double tol) {
    const auto e = band_energies(o, at, a);
    std::vector<int> partners;
    for (int i = 0; i < static_cast<int>(e.size()); ++i)
        if (std::abs(e[static_cast<std::size_t>(i)] - e[static_cast<std::size_t>(band)]) <= tol)
            partners.push_back(i);
    return partners;
}

// Sorted-index conventions at the high-symmetry points. The valence manifold
// holds four states; at Gamma the ladder is (s-bonding, split-off, hh/lh
// pair), then (s-antibonding, so-antibonding, p-antibonding pair, s* pair)
// above the gap. At X and L the three labelled valence states sit above one
// deep s-like band, and the two labelled conduction states are the lowest two.
namespace idx {
constexpr int g6v = 0, so = 1, vbm = 3, g6c = 4, g7c = 5, g8c = 6;
constexpr int v5 = 1, v6 = 2, v7 = 3, c6 = 4, c7 = 5;
}  // namespace idx

std::map<BandFeature, double> extract_features(const OipSet& o, double a) {
    const auto eg = band_energies(o, kpoints::gamma, a);
    const auto ex = band_energies(o, kpoints::x_point, a);
    const auto el = band_energies(o, kpoints::l_point, a);
    const double vbm = eg[idx::vbm];

    std::map<BandFeature, double> f;
    f[BandFeature::Gamma6c] = eg[idx::g6c] - vbm;
    f[BandFeature::DeltaSo] = eg[idx::vbm] - eg[idx::so];
    f[BandFeature::Gamma6v] = eg[idx::g6v] - vbm;
    f[BandFeature::Gamma7c] = eg[idx::g7c] - vbm;
    f[BandFeature::Gamma8c] = eg[idx::g8c] - vbm;
    f[BandFeature::X5v] = ex[idx::v5] - vbm;
    f[BandFeature::X6v] = ex[idx::v6] - vbm;
    f[BandFeature::X7v] = ex[idx::v7] - vbm;
    f[BandFeature::X6c] = ex[idx::c6] - vbm;
    f[BandFeature::X7c] = ex[idx::c7] - vbm;
    f[BandFeature::L5v] = el[idx::v5] - vbm;
    f[BandFeature::L6v] = el[idx::v6] - vbm;
    f[BandFeature::L7v] = el[idx::v7] - vbm;
    f[BandFeature::L6c] = el[idx::c6] - vbm;
    f[BandFeature::L7c] = el[idx::c7] - vbm;

    f[BandFeature::MGamma] = effective_mass(o, a, idx::g6c, {0, 0, 1});
    f[BandFeature::MSo] = effective_mass(o, a, idx::so, {0, 0, 1});

    // hh/lh split along each direction: flatter band (larger |m|) is hh.
    const std::array<std::pair<BandFeature, BandFeature>, 3> pairs = {{
        {BandFeature::MLh001, BandFeature::MHh001},
        {BandFeature::MLh011, BandFeature::MHh011},
        {BandFeature::MLh111, BandFeature::MHh111},
    }};
    const std::array<std::array<double, 3>, 3> dirs = {{{0, 0, 1}, {0, 1, 1}, {1, 1, 1}}};
    for (std::size_t i = 0; i < 3; ++i) {
        const double m2 = effective_mass(o, a, 2, dirs[i]);
        const double m3 = effective_mass(o, a, 3, dirs[i]);
        const double hh = std::abs(m2) > std::abs(m3) ? m2 : m3;
        const double lh = std::abs(m2) > std::abs(m3) ? m3 : m2;
        f[pairs[i].first] = lh;
        f[pairs[i].second] = hh;
    }
    return f;
}

const char* to_string(GapCharacter c) { return c == GapCharacter::Direct ? "direct" : "indirect"; }

GapReport gap_report(const std::vector<KSample>& samples, int n_valence,
                     const std::string& gamma_label) {
    if (samples.empty()) throw ConfigError("gap_report: empty sample set");
    const std::size_t nv = static_cast<std::size_t>(n_valence);
    GapReport out;
    bool have_gamma = false;
    bool have_cbm = false;
    for (const auto& s : samples) {
        if (s.energies.size() <= nv)
            throw ConfigError("gap_report: sample " + s.label + " has no conduction state");
        if (s.label == gamma_label) {
            out.vbm_energy = s.energies[nv - 1];
            have_gamma = true;
        }
        const double c = s.energies[nv];
        if (!have_cbm || c < out.gap) {  // gap holds the raw CBM until the end
            out.gap = c;
            out.cbm_location = s.label;
            have_cbm = true;
        }
    }
    if (!have_gamma) throw ConfigError("gap_report: no sample labelled " + gamma_label);
    out.gap -= out.vbm_energy;
    out.character = out.cbm_location == gamma_label ? GapCharacter::Direct : GapCharacter::Indirect;
    return out;
}

double cutoff_wavelength(double gap_ev) {
    if (!(gap_ev > 0.0)) throw ConfigError("cutoff_wavelength: gap must be positive");
    return constants::hc_ev_um / gap_ev;
}

MapeResult mape(const std::vector<double>& predicted, const std::vector<double>& target) {
    if (predicted.size() != target.size()) throw ConfigError("mape: length mismatch");
    MapeResult r;
    double acc = 0.0;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        if (!std::isfinite(target[i]) || target[i] == 0.0) {
            ++r.n_skipped;
            continue;
        }
        acc += std::abs(predicted[i] - target[i]) / std::abs(target[i]);
        ++r.n_used;
    }
    r.percent = r.n_used > 0 ? 100.0 * acc / r.n_used : 0.0;
    return r;
}

}  // namespace oiptb
