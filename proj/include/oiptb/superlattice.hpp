#ifndef OIPTB_SUPERLATTICE_HPP
#define OIPTB_SUPERLATTICE_HPP

#include <vector>

#include "oiptb/bulk.hpp"
#include "oiptb/properties.hpp"
#include "oiptb/types.hpp"

namespace oiptb {

// One [001]-stacked period. Each monolayer contributes one cation plane and
// one anion plane; anion planes at layer boundaries are shared.
struct SlLayer {
    Material material;
    int monolayers = 0;
};

struct LayerStack {
    std::vector<SlLayer> layers;

    int total_monolayers() const;
};

struct SlOptions {
    // Scale two-center couplings by (d0/d)^2 and use each layer's native
    // axial spacing; off reverts to ideal substrate geometry everywhere.
    bool strain_scaling = true;
    // In-plane lattice constant; <= 0 means "first layer's material".
    double substrate_a = 0.0;

    bool operator==(const SlOptions&) const = default;
};

// Per-layer bond geometry under tetragonal distortion on the substrate.
struct SlLayerGeometry {
    double bond_length = 0.0;        // A
    double natural_bond_length = 0.0;
    double beta = 1.0;               // (d0/d)^2 coupling scale
    std::array<double, 3> cos_theta{};  // |direction cosines| of every bond
    double axial_spacing = 0.0;      // plane-to-plane distance, A
};

struct SLGeometry {
    double substrate_a = 0.0;
    double period_length = 0.0;  // A
    std::vector<SlLayerGeometry> layers;
};

SLGeometry build_sl_geometry(const LayerStack& stack, const SlOptions& opts = {});

// The named 5x5 building blocks for one layer's bond family at a given k.
struct SLBlocks {
    Matrix5cd h_aa;    // anion on-site without spin-orbit
    Matrix5cd h_a_so;  // anion spin-orbit
    Matrix5cd h_cc;    // cation on-site without spin-orbit
    Matrix5cd h_c_so;  // cation spin-orbit
    Matrix5cd h_ac;    // anion -> cation-above coupling
    Matrix5cd h_ca;    // matched reverse block, h_ac^dagger
};

SLBlocks sl_blocks(const LayerStack& stack, const WaveVector& k, std::size_t layer_index,
                   const SlOptions& opts = {});

// k convention for superlattices: kx, ky in units of 2*pi/substrate_a,
// kz in units of pi/period_length.
HermitianMatrix build_sl_hamiltonian(const LayerStack& stack, const WaveVector& k,
                                     const SlOptions& opts = {});

std::vector<double> sl_band_energies(const LayerStack& stack, const WaveVector& k,
                                     const SlOptions& opts = {});

struct SlGapOptions {
    int axial_samples = 33;          // uniform kz in [0, 1] (pi/L units), Gamma included
    bool include_inplane_edges = false;
    SlOptions sl;
};

// Conduction minimum over the sampled set minus the Gamma valence maximum.
// The default set is the zone-center plus the axial line; the in-plane edge
// points are available behind the flag (they fold zone-boundary bulk states
// whose absolute position this parametrization does not constrain).
GapReport sl_gap(const LayerStack& stack, const SlGapOptions& opts = {});

// Folded bulk k-set equivalent to a degenerate (single-material) stack:
// for an N-monolayer period, the SL point (kx, ky, kz) corresponds to the
// bulk points (kx, ky, kz/N + 2*nu/N), nu = 0..N-1, in 2*pi/a units.
std::vector<WaveVector> folded_bulk_kpoints(int total_monolayers, const WaveVector& sl_k);

}  // namespace oiptb

#endif
