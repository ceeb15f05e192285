#include "oiptb/bulk.hpp"

#include <numbers>

namespace oiptb {

namespace {
constexpr std::complex<double> I{0.0, 1.0};
}

BondVectors bond_vectors(double a) {
    if (!(a > 0.0)) throw ConfigError("lattice constant must be positive");
    BondVectors b;
    b.a = a;
    for (int m = 0; m < 4; ++m)
        b.tau[m] = (a / 4.0) * Eigen::Vector3d(tau_signs[m][0], tau_signs[m][1], tau_signs[m][2]);
    return b;
}

PhaseFactors phase_factors(const WaveVector& k, const BondVectors& tau) {
    const double scale = 2.0 * std::numbers::pi / tau.a;  // 2pi/a units -> 1/A
    const Eigen::Vector3d kphys(scale * k.kx, scale * k.ky, scale * k.kz);
    std::array<std::complex<double>, 4> e;
    for (int m = 0; m < 4; ++m) e[m] = std::exp(I * tau.tau[m].dot(kphys));
    std::array<std::complex<double>, 4> g{};
    for (int j = 0; j < 4; ++j) {
        for (int m = 0; m < 4; ++m) g[j] += 0.25 * static_cast<double>(g_signs[j][m]) * e[m];
    }
    return {g[0], g[1], g[2], g[3]};
}

Matrix5cd spin_orbit_block(double delta) {
    const double d = delta / 3.0;
    Matrix5cd s = Matrix5cd::Zero();
    s(1, 2) = -I * d;
    s(1, 3) = d;
    s(2, 3) = -I * d;
    s(2, 1) = I * d;
    s(3, 1) = d;
    s(3, 2) = I * d;
    return s;
}

Matrix5cd anion_onsite_block(const OipSet& o) {
    Matrix5cd b = spin_orbit_block(o.delta_a);
    b(0, 0) = o.e_sa;
    b(1, 1) = o.e_pa;
    b(2, 2) = o.e_pa;
    b(3, 3) = o.e_pa;
    b(4, 4) = o.e_ssa;
    return b;
}

Matrix5cd cation_onsite_block(const OipSet& o) {
    Matrix5cd b = spin_orbit_block(o.delta_c);
    b(0, 0) = o.e_sc;
    b(1, 1) = o.e_pc;
    b(2, 2) = o.e_pc;
    b(3, 3) = o.e_pc;
    b(4, 4) = o.e_ssc;
    return b;
}

Matrix5cd coupling_block(const OipSet& o, const PhaseFactors& g) {
    Matrix5cd b = Matrix5cd::Zero();
    b(0, 0) = g.g0 * o.e_sasc;
    b(0, 1) = g.g1 * o.e_saxc;
    b(0, 2) = g.g2 * o.e_saxc;
    b(0, 3) = g.g3 * o.e_saxc;
    b(1, 0) = -g.g1 * o.e_xasc;
    b(1, 1) = g.g0 * o.e_xaxc;
    b(1, 2) = g.g3 * o.e_xayc;
    b(1, 3) = g.g2 * o.e_xayc;
    b(1, 4) = -g.g1 * o.e_xassc;
    b(2, 0) = -g.g2 * o.e_xasc;
    b(2, 1) = g.g3 * o.e_xayc;
    b(2, 2) = g.g0 * o.e_xaxc;
    b(2, 3) = g.g1 * o.e_xayc;
    b(2, 4) = -g.g2 * o.e_xassc;
    b(3, 0) = -g.g3 * o.e_xasc;
    b(3, 1) = g.g2 * o.e_xayc;
    b(3, 2) = g.g1 * o.e_xayc;
    b(3, 3) = g.g0 * o.e_xaxc;
    b(3, 4) = -g.g3 * o.e_xassc;
    b(4, 1) = g.g1 * o.e_ssaxc;
    b(4, 2) = g.g2 * o.e_ssaxc;
    b(4, 3) = g.g3 * o.e_ssaxc;
    return b;
}

std::array<Matrix5cd, 4> bond_coupling_blocks(const OipSet& o) {
    // B_m = (1/4) sum_j sign[j][m] M_j with M_j the coefficient of g_j.
    std::array<Matrix5cd, 4> out;
    for (int m = 0; m < 4; ++m) {
        PhaseFactors g{0.25 * g_signs[0][m], 0.25 * g_signs[1][m], 0.25 * g_signs[2][m],
                       0.25 * g_signs[3][m]};
        out[m] = coupling_block(o, g);
    }
    return out;
}

HermitianMatrix build_bulk_hamiltonian(const OipSet& o, const WaveVector& k, double a) {
    if (auto report = validate_oips(o); !report.empty())
        throw ConfigError("invalid parameter set: " + report.front());
    const PhaseFactors g = phase_factors(k, bond_vectors(a));
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(10, 10);
    h.block<5, 5>(0, 0) = anion_onsite_block(o);
    h.block<5, 5>(5, 5) = cation_onsite_block(o);
    const Matrix5cd ac = coupling_block(o, g);
    h.block<5, 5>(0, 5) = ac;
    h.block<5, 5>(5, 0) = ac.adjoint();
    return HermitianMatrix::from_exact(std::move(h));
}

std::vector<double> band_energies(const OipSet& o, const WaveVector& k, double a) {
    EigenResult r;
    try {
        r = eigh(build_bulk_hamiltonian(o, k, a));
    } catch (const NumericalError& e) {
        throw NumericalError(std::string(e.what()) + " at k = (" + std::to_string(k.kx) + ", " +
                             std::to_string(k.ky) + ", " + std::to_string(k.kz) + ")");
    }
    return {r.values.data(), r.values.data() + r.values.size()};
}

}  // namespace oiptb
