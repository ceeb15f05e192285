#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "oiptb/bulk.hpp"
#include "oiptb/constraints.hpp"
#include "support/helpers.hpp"

using namespace oiptb;
using oiptb::testing::random_k;
using oiptb::testing::random_oips;

namespace {
const Material& gaas() { return default_material("GaAs"); }
}

TEST_CASE("bond vectors form the ideal tetrahedron") {
    const auto b = bond_vectors(5.6533);
    for (const auto& t : b.tau) CHECK(t.norm() == doctest::Approx(5.6533 * std::sqrt(3.0) / 4.0));
    CHECK(b.tau[0].x() == doctest::Approx(5.6533 / 4.0));
    CHECK(b.tau[1].x() == doctest::Approx(-5.6533 / 4.0));
    CHECK_THROWS_AS(bond_vectors(0.0), ConfigError);
}

TEST_CASE("phase factors at the zone centre and X point") {
    const auto b = bond_vectors(5.6533);
    const auto g0 = phase_factors({0, 0, 0}, b);
    CHECK(std::abs(g0.g0 - 1.0) < 1e-15);
    CHECK(std::abs(g0.g1) < 1e-15);
    CHECK(std::abs(g0.g2) < 1e-15);
    CHECK(std::abs(g0.g3) < 1e-15);

    // At X = (1,0,0): k.tau_m = +-pi/2, so the four exponentials are (i,-i,i,-i):
    // g0 averages to 0 and g1 to i.
    const auto gx = phase_factors({1, 0, 0}, b);
    CHECK(std::abs(gx.g0) < 1e-14);
    CHECK(std::abs(gx.g1 - std::complex<double>(0, 1)) < 1e-14);
    CHECK(std::abs(gx.g2) < 1e-14);
    CHECK(std::abs(gx.g3) < 1e-14);
}

TEST_CASE("phase factors conjugate under k -> -k and stay bounded") {
    std::mt19937_64 rng(7);
    const auto b = bond_vectors(5.6533);
    for (int rep = 0; rep < 100; ++rep) {
        const auto k = random_k(rng);
        const auto g = phase_factors(k, b);
        const auto gm = phase_factors({-k.kx, -k.ky, -k.kz}, b);
        CHECK(std::abs(gm.g0 - std::conj(g.g0)) < 1e-14);
        CHECK(std::abs(gm.g1 - std::conj(g.g1)) < 1e-14);
        CHECK(std::abs(gm.g2 - std::conj(g.g2)) < 1e-14);
        CHECK(std::abs(gm.g3 - std::conj(g.g3)) < 1e-14);
        for (auto v : {g.g0, g.g1, g.g2, g.g3}) CHECK(std::abs(v) <= 1.0 + 1e-14);
    }
}

TEST_CASE("zone-centre matrix entries") {
    const auto& m = gaas();
    const auto h = build_bulk_hamiltonian(m.oips, {0, 0, 0}, m.lattice_constant).mat();
    CHECK(h(kSa, kSc).real() == doctest::Approx(-6.7941));
    CHECK(h(kSa, kSc).imag() == 0.0);
    CHECK(h(kPxa, kPya) == std::complex<double>(0.0, -0.421 / 3.0));
    CHECK(std::abs(h(kPxa, kPya) - std::complex<double>(0.0, -0.140333)) < 1e-6);
    // g1-weighted couplings vanish at the zone centre
    CHECK(std::abs(h(kSa, kPxc)) == 0.0);
    CHECK(std::abs(h(kPxa, kSc)) == 0.0);
    CHECK(std::abs(h(kSsa, kPxc)) == 0.0);
}

TEST_CASE("zone-centre block structure is exact") {
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 20; ++rep) {
        const OipSet o = random_oips(rng);
        const auto h = build_bulk_hamiltonian(o, {0, 0, 0}, 5.65).mat();
        const std::array<int, 2> s_block = {kSa, kSc};
        const std::array<int, 2> ss_block = {kSsa, kSsc};
        const std::array<int, 6> p_block = {kPxa, kPya, kPza, kPxc, kPyc, kPzc};
        for (int i : s_block) {
            for (int j : ss_block) CHECK(std::abs(h(i, j)) == 0.0);
            for (int j : p_block) CHECK(std::abs(h(i, j)) == 0.0);
        }
        for (int i : ss_block)
            for (int j : p_block) CHECK(std::abs(h(i, j)) == 0.0);
    }
}

TEST_CASE("rejects invalid parameter sets") {
    OipSet bad = gaas().oips;
    bad.delta_c = -1.0;
    CHECK_THROWS_AS(build_bulk_hamiltonian(bad, {0, 0, 0}, 5.65), ConfigError);
}

TEST_CASE("hermiticity holds exactly over random draws") {
    std::mt19937_64 rng(31);
    double worst = 0.0;
    for (int rep = 0; rep < 1000; ++rep) {
        const auto h = build_bulk_hamiltonian(random_oips(rng), random_k(rng), 5.6533);
        worst = std::max(worst, h.hermiticity_deviation());
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("zone-centre spectrum carries the analytic levels") {
    const auto& m = gaas();
    const auto e = band_energies(m.oips, {0, 0, 0}, m.lattice_constant);
    REQUIRE(e.size() == 10);
    // s-block eigenvalues from the 2x2 quadratic formula
    const double mean = 0.5 * (m.oips.e_sa + m.oips.e_sc);
    const double disc = std::sqrt(0.25 * std::pow(m.oips.e_sa - m.oips.e_sc, 2) +
                                  m.oips.e_sasc * m.oips.e_sasc);
    CHECK(e[0] == doctest::Approx(mean - disc).epsilon(1e-12));
    CHECK(e[4] == doctest::Approx(mean + disc).epsilon(1e-12));
    CHECK(e[0] == doctest::Approx(-12.224).epsilon(1e-3 / 12.0));
    CHECK(e[1] == doctest::Approx(-0.340).epsilon(1e-3 / 0.34));
    CHECK(std::abs(e[2]) < 1e-3);   // hh/lh level
    CHECK(std::abs(e[3]) < 1e-3);
    CHECK(e[4] == doctest::Approx(1.424).epsilon(1e-3));
}

TEST_CASE("ten real finite energies for arbitrary parameters") {
    std::mt19937_64 rng(37);
    for (int rep = 0; rep < 50; ++rep) {
        const auto e = band_energies(random_oips(rng), random_k(rng), 5.6533);
        REQUIRE(e.size() == 10);
        for (std::size_t i = 0; i < e.size(); ++i) {
            CHECK(std::isfinite(e[i]));
            if (i > 0) CHECK(e[i] >= e[i - 1]);
        }
    }
}

TEST_CASE("spectrum is periodic under reciprocal-lattice translations") {
    const auto& m = gaas();
    std::mt19937_64 rng(41);
    const std::array<WaveVector, 3> gs = {{{2, 0, 0}, {1, 1, 1}, {0, 2, 0}}};
    for (int rep = 0; rep < 10; ++rep) {
        const auto k = random_k(rng);
        const auto base = band_energies(m.oips, k, m.lattice_constant);
        for (const auto& g : gs) {
            const auto shifted = band_energies(
                m.oips, {k.kx + g.kx, k.ky + g.ky, k.kz + g.kz}, m.lattice_constant);
            for (std::size_t i = 0; i < base.size(); ++i)
                CHECK(std::abs(base[i] - shifted[i]) < 1e-9);
        }
    }
}

TEST_CASE("spectra agree at k and -k") {
    const auto& m = gaas();
    std::mt19937_64 rng(43);
    for (int rep = 0; rep < 10; ++rep) {
        const auto k = random_k(rng);
        const auto plus = band_energies(m.oips, k, m.lattice_constant);
        const auto minus = band_energies(m.oips, {-k.kx, -k.ky, -k.kz}, m.lattice_constant);
        for (std::size_t i = 0; i < plus.size(); ++i) CHECK(std::abs(plus[i] - minus[i]) < 1e-9);
    }
}

TEST_CASE("valence maximum pinned at zero after constraint expansion") {
    const auto& m = gaas();
    FreeParams f;
    f.e_sa = m.oips.e_sa;
    f.e_sc = m.oips.e_sc;
    f.e_ssa = m.oips.e_ssa;
    f.e_ssc = m.oips.e_ssc;
    f.e_xayc = m.oips.e_xayc;
    f.e_saxc = m.oips.e_saxc;
    f.e_xasc = m.oips.e_xasc;
    f.e_ssaxc = m.oips.e_ssaxc;
    f.e_xassc = m.oips.e_xassc;
    f.e_pa = m.oips.e_pa;
    const ConstraintAnchors anchors{1.424, 0.340, std::nullopt, 0.421, 0.174};
    const OipSet pinned = expand(f, anchors);
    const auto e = band_energies(pinned, {0, 0, 0}, m.lattice_constant);
    // largest non-positive valence level sits exactly at zero
    CHECK(std::abs(e[3]) < 1e-9);
    CHECK(std::abs(e[2]) < 1e-9);
}
