#ifndef OIPTB_BULK_HPP
#define OIPTB_BULK_HPP

#include <array>
#include <complex>

#include "oiptb/eigensolver.hpp"
#include "oiptb/hermitian.hpp"
#include "oiptb/types.hpp"

namespace oiptb {

using Matrix5cd = Eigen::Matrix<std::complex<double>, 5, 5>;

// Tetrahedral bond vectors of the zinc-blende anion, in Angstrom:
// tau_i = (a/4)(+-1,+-1,+-1) with the sign pattern below.
struct BondVectors {
    double a = 0.0;
    std::array<Eigen::Vector3d, 4> tau;
};

BondVectors bond_vectors(double lattice_constant);

// Sign pattern of the four bonds (rows tau1..tau4, columns x,y,z).
inline constexpr std::array<std::array<int, 3>, 4> tau_signs = {{
    {{1, 1, 1}},
    {{-1, -1, 1}},
    {{1, -1, -1}},
    {{-1, 1, -1}},
}};

// Signs with which bond m enters g_j: g_j = (1/4) sum_m sign[j][m] exp(i k.tau_m).
inline constexpr std::array<std::array<int, 4>, 4> g_signs = {{
    {{1, 1, 1, 1}},
    {{1, -1, 1, -1}},
    {{1, -1, -1, 1}},
    {{1, 1, -1, -1}},
}};

struct PhaseFactors {
    std::complex<double> g0, g1, g2, g3;
};

// k in units of 2*pi/a; converted internally to 1/A via the bond vectors.
PhaseFactors phase_factors(const WaveVector& k, const BondVectors& tau);

// Basis order per atom: s, p_x, p_y, p_z, s*. The 10-orbital bulk basis is
// (anion 5 | cation 5); this index map is the one all entry-level tests quote.
enum BulkOrbital {
    kSa = 0,
    kPxa = 1,
    kPya = 2,
    kPza = 3,
    kSsa = 4,
    kSc = 5,
    kPxc = 6,
    kPyc = 7,
    kPzc = 8,
    kSsc = 9,
};

// Intra-atomic delta/3 spin-orbit couplings within one p shell.
Matrix5cd spin_orbit_block(double delta);

// 5x5 on-site blocks, including the spin-orbit part.
Matrix5cd anion_onsite_block(const OipSet& o);
Matrix5cd cation_onsite_block(const OipSet& o);

// Anion-row/cation-column coupling block as a function of the phase factors.
Matrix5cd coupling_block(const OipSet& o, const PhaseFactors& g);

// Per-bond decomposition B_m with coupling_block == sum_m exp(i k.tau_m) B_m.
// The superlattice assembly consumes these directly.
std::array<Matrix5cd, 4> bond_coupling_blocks(const OipSet& o);

// The 10x10 first-nearest-neighbor sp3s* Hamiltonian with spin-orbit terms.
// Upper triangle is written analytically and mirrored, so Hermiticity is exact.
HermitianMatrix build_bulk_hamiltonian(const OipSet& o, const WaveVector& k, double lattice_constant);

// Ascending eigenvalues of the bulk Hamiltonian, in eV.
std::vector<double> band_energies(const OipSet& o, const WaveVector& k, double lattice_constant);

}  // namespace oiptb

#endif
