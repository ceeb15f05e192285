#include "oiptb/superlattice.hpp"

#include <cmath>
#include <numbers>

#include "oiptb/eigensolver.hpp"

namespace oiptb {

namespace {
constexpr std::complex<double> I{0.0, 1.0};
}

int LayerStack::total_monolayers() const {
    int n = 0;
    for (const auto& l : layers) n += l.monolayers;
    return n;
}

static void check_stack(const LayerStack& stack) {
    if (stack.layers.empty()) throw ConfigError("superlattice: empty layer stack");
    for (const auto& l : stack.layers) {
        if (l.monolayers < 1) throw ConfigError("superlattice: monolayer counts must be >= 1");
        if (!(l.material.lattice_constant > 0.0))
            throw ConfigError("superlattice: material " + l.material.name +
                              " has no lattice constant");
    }
    if (stack.total_monolayers() < 2) throw ConfigError("superlattice: need at least 2 monolayers");
}

SLGeometry build_sl_geometry(const LayerStack& stack, const SlOptions& opts) {
    check_stack(stack);
    SLGeometry g;
    g.substrate_a =
        opts.substrate_a > 0.0 ? opts.substrate_a : stack.layers.front().material.lattice_constant;
    for (const auto& l : stack.layers) {
        SlLayerGeometry lg;
        const double a_nat = l.material.lattice_constant;
        const double c = opts.strain_scaling ? a_nat : g.substrate_a;
        const Eigen::Vector3d tau(g.substrate_a / 4.0, g.substrate_a / 4.0, c / 4.0);
        lg.bond_length = tau.norm();
        lg.natural_bond_length = std::sqrt(3.0) * a_nat / 4.0;
        lg.beta = opts.strain_scaling ? std::pow(lg.natural_bond_length / lg.bond_length, 2.0) : 1.0;
        lg.cos_theta = {tau.x() / lg.bond_length, tau.y() / lg.bond_length, tau.z() / lg.bond_length};
        lg.axial_spacing = c / 4.0;
        g.period_length += l.monolayers * c / 2.0;
        g.layers.push_back(lg);
    }
    return g;
}

namespace {

// Plane bookkeeping: plane 0 is an anion plane, planes alternate
// anion/cation, cation plane 2i+1 belongs to layer cat_layer[i].
struct StackIndex {
    int n_cations = 0;
    std::vector<int> cat_layer;

    explicit StackIndex(const LayerStack& stack) {
        for (std::size_t li = 0; li < stack.layers.size(); ++li)
            for (int i = 0; i < stack.layers[li].monolayers; ++i)
                cat_layer.push_back(static_cast<int>(li));
        n_cations = static_cast<int>(cat_layer.size());
    }

    int planes() const { return 2 * n_cations; }
    int layer_of_cation_plane(int plane) const { return cat_layer[static_cast<std::size_t>(plane / 2)]; }
};

Matrix5cd averaged_anion_onsite(const OipSet& below, const OipSet& above) {
    OipSet avg = below;
    avg.e_sa = 0.5 * (below.e_sa + above.e_sa);
    avg.e_pa = 0.5 * (below.e_pa + above.e_pa);
    avg.e_ssa = 0.5 * (below.e_ssa + above.e_ssa);
    avg.delta_a = 0.5 * (below.delta_a + above.delta_a);
    return anion_onsite_block(avg);
}

}  // namespace

HermitianMatrix build_sl_hamiltonian(const LayerStack& stack, const WaveVector& k,
                                     const SlOptions& opts) {
    if (!std::isfinite(k.kx) || !std::isfinite(k.ky) || !std::isfinite(k.kz))
        throw ConfigError("superlattice: non-finite wave vector");
    const SLGeometry geo = build_sl_geometry(stack, opts);
    const StackIndex si(stack);
    const int planes = si.planes();
    const int dim = 5 * planes;

    const double kx = 2.0 * std::numbers::pi / geo.substrate_a * k.kx;
    const double ky = 2.0 * std::numbers::pi / geo.substrate_a * k.ky;
    const double kz = std::numbers::pi / geo.period_length * k.kz;
    const Eigen::Vector3d kphys(kx, ky, kz);

    // Cache per-layer bond blocks and phases; the two up-bonds from an anion
    // are tau1/tau2, from a cation -tau3/-tau4, all scaled to the layer's
    // strained geometry.
    struct LayerData {
        std::array<Matrix5cd, 4> bonds;
        std::array<std::complex<double>, 4> phase;  // exp(i k . tau_m), strained tau
        Matrix5cd cation_onsite;
        const OipSet* oips;
    };
    std::vector<LayerData> layers;
    for (std::size_t li = 0; li < stack.layers.size(); ++li) {
        LayerData ld;
        ld.oips = &stack.layers[li].material.oips;
        ld.bonds = bond_coupling_blocks(*ld.oips);
        const double bl = geo.layers[li].beta;
        for (auto& b : ld.bonds) b *= bl;
        for (int m = 0; m < 4; ++m) {
            const Eigen::Vector3d tau(tau_signs[m][0] * geo.substrate_a / 4.0,
                                      tau_signs[m][1] * geo.substrate_a / 4.0,
                                      tau_signs[m][2] * geo.layers[li].axial_spacing);
            ld.phase[m] = std::exp(I * tau.dot(kphys));
        }
        ld.cation_onsite = cation_onsite_block(*ld.oips);
        layers.push_back(std::move(ld));
    }

    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    auto put = [&](int pi, int pj, const Matrix5cd& blk) {
        h.block<5, 5>(5 * pi, 5 * pj) += blk;
        if (pi != pj) h.block<5, 5>(5 * pj, 5 * pi) += blk.adjoint();
    };

    for (int p = 0; p < planes; ++p) {
        if (p % 2 == 1) {
            put(p, p, layers[static_cast<std::size_t>(si.layer_of_cation_plane(p))].cation_onsite);
        } else {
            const int li_below = si.layer_of_cation_plane((p - 1 + planes) % planes);
            const int li_above = si.layer_of_cation_plane((p + 1) % planes);
            put(p, p,
                averaged_anion_onsite(*layers[static_cast<std::size_t>(li_below)].oips,
                                      *layers[static_cast<std::size_t>(li_above)].oips));
        }
    }
    for (int p = 0; p < planes; ++p) {
        const int up = (p + 1) % planes;
        if (p % 2 == 0) {
            // anion -> cation above via bonds tau1, tau2; the bond belongs to
            // the cation's compound
            const auto& ld = layers[static_cast<std::size_t>(si.layer_of_cation_plane(up))];
            put(p, up, Matrix5cd(ld.phase[0] * ld.bonds[0] + ld.phase[1] * ld.bonds[1]));
        } else {
            // cation -> anion above via bonds -tau3, -tau4 (cation rows)
            const auto& ld = layers[static_cast<std::size_t>(si.layer_of_cation_plane(p))];
            put(p, up,
                Matrix5cd(std::conj(ld.phase[2]) * ld.bonds[2].adjoint() +
                          std::conj(ld.phase[3]) * ld.bonds[3].adjoint()));
        }
    }
    return HermitianMatrix::from_exact(std::move(h));
}

SLBlocks sl_blocks(const LayerStack& stack, const WaveVector& k, std::size_t layer_index,
                   const SlOptions& opts) {
    const SLGeometry geo = build_sl_geometry(stack, opts);
    if (layer_index >= stack.layers.size()) throw ConfigError("sl_blocks: layer index out of range");
    const OipSet& o = stack.layers[layer_index].material.oips;
    const SlLayerGeometry& lg = geo.layers[layer_index];

    SLBlocks b;
    b.h_a_so = spin_orbit_block(o.delta_a);
    b.h_c_so = spin_orbit_block(o.delta_c);
    b.h_aa = anion_onsite_block(o) - b.h_a_so;
    b.h_cc = cation_onsite_block(o) - b.h_c_so;

    const double kx = 2.0 * std::numbers::pi / geo.substrate_a * k.kx;
    const double ky = 2.0 * std::numbers::pi / geo.substrate_a * k.ky;
    const double kz = std::numbers::pi / geo.period_length * k.kz;
    const Eigen::Vector3d kphys(kx, ky, kz);
    const auto bonds = bond_coupling_blocks(o);
    b.h_ac = Matrix5cd::Zero();
    for (int m : {0, 1}) {
        const Eigen::Vector3d tau(tau_signs[m][0] * geo.substrate_a / 4.0,
                                  tau_signs[m][1] * geo.substrate_a / 4.0,
                                  tau_signs[m][2] * lg.axial_spacing);
        b.h_ac += std::exp(I * tau.dot(kphys)) * lg.beta * bonds[static_cast<std::size_t>(m)];
    }
    b.h_ca = b.h_ac.adjoint();
    return b;
}

std::vector<double> sl_band_energies(const LayerStack& stack, const WaveVector& k,
                                     const SlOptions& opts) {
    const EigenResult r = eigh(build_sl_hamiltonian(stack, k, opts));
    return {r.values.data(), r.values.data() + r.values.size()};
}

GapReport sl_gap(const LayerStack& stack, const SlGapOptions& opts) {
    if (opts.axial_samples < 2) throw ConfigError("sl_gap: need at least 2 axial samples");
    const int n_valence = 4 * stack.total_monolayers();

    std::vector<std::pair<std::string, WaveVector>> kset;
    kset.emplace_back("G", WaveVector{0, 0, 0});
    for (int j = 1; j < opts.axial_samples; ++j) {
        const double kz = static_cast<double>(j) / (opts.axial_samples - 1);
        kset.emplace_back("axial:" + std::to_string(kz), WaveVector{0, 0, kz});
    }
    if (opts.include_inplane_edges) {
        kset.emplace_back("M:0", WaveVector{1, 0, 0});
        kset.emplace_back("M:1", WaveVector{1, 0, 1});
        kset.emplace_back("X:0", WaveVector{0.5, 0.5, 0});
        kset.emplace_back("X:1", WaveVector{0.5, 0.5, 1});
    }

    std::vector<KSample> samples;
    samples.reserve(kset.size());
    for (const auto& [label, k] : kset)
        samples.push_back({label, sl_band_energies(stack, k, opts.sl)});
    return gap_report(samples, n_valence, "G");
}

std::vector<WaveVector> folded_bulk_kpoints(int total_monolayers, const WaveVector& sl_k) {
    const int n = total_monolayers;
    std::vector<WaveVector> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int nu = 0; nu < n; ++nu)
        out.push_back({sl_k.kx, sl_k.ky, sl_k.kz / n + 2.0 * nu / n});
    return out;
}

}  // namespace oiptb
