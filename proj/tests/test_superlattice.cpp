#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oiptb/superlattice.hpp"
#include "support/helpers.hpp"

using namespace oiptb;

namespace {

LayerStack stack_of(std::initializer_list<std::pair<const char*, int>> layers) {
    LayerStack s;
    for (const auto& [name, ml] : layers) s.layers.push_back({default_material(name), ml});
    return s;
}

std::vector<double> folded_bulk(const Material& m, int total_ml, const WaveVector& sl_k) {
    std::vector<double> all;
    for (const auto& k : folded_bulk_kpoints(total_ml, sl_k)) {
        const auto e = band_energies(m.oips, k, m.lattice_constant);
        all.insert(all.end(), e.begin(), e.end());
    }
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace

TEST_CASE("geometry of a degenerate stack is the ideal tetrahedron") {
    const auto g = build_sl_geometry(stack_of({{"GaAs", 1}, {"GaAs", 1}}));
    CHECK(g.substrate_a == doctest::Approx(5.6533));
    CHECK(g.period_length == doctest::Approx(5.6533));
    for (const auto& lg : g.layers) {
        CHECK(lg.beta == 1.0);
        for (double c : lg.cos_theta) CHECK(c == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
    }
}

TEST_CASE("geometry of the lattice-mismatched stack stays near ideal") {
    const auto g = build_sl_geometry(stack_of({{"GaAs", 9}, {"AlAs", 4}}));
    for (const auto& lg : g.layers) {
        CHECK(std::abs(lg.beta - 1.0) < 0.01);
        const double sum = lg.cos_theta[0] * lg.cos_theta[0] + lg.cos_theta[1] * lg.cos_theta[1] +
                           lg.cos_theta[2] * lg.cos_theta[2];
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK_THROWS_AS(build_sl_geometry(LayerStack{}), ConfigError);
    CHECK_THROWS_AS(build_sl_geometry(stack_of({{"GaAs", 1}})), ConfigError);
}

TEST_CASE("matrix dimension and exact hermiticity") {
    const auto stack = stack_of({{"GaAs", 9}, {"AlAs", 4}});
    const auto h = build_sl_hamiltonian(stack, {0.1, -0.2, 0.7});
    CHECK(h.dim() == 130);
    CHECK(h.hermiticity_deviation() == 0.0);

    std::mt19937_64 rng(61);
    for (int rep = 0; rep < 10; ++rep) {
        const auto k = oiptb::testing::random_k(rng);
        CHECK(build_sl_hamiltonian(stack, k).hermiticity_deviation() == 0.0);
    }
}

TEST_CASE("named building blocks are mutually consistent") {
    const auto stack = stack_of({{"GaAs", 2}, {"AlAs", 2}});
    for (std::size_t li : {std::size_t{0}, std::size_t{1}}) {
        const SLBlocks b = sl_blocks(stack, {0.2, 0.1, 0.4}, li);
        CHECK((b.h_ca - b.h_ac.adjoint()).cwiseAbs().maxCoeff() == 0.0);
        CHECK((b.h_aa - b.h_aa.adjoint()).cwiseAbs().maxCoeff() == 0.0);
        CHECK((b.h_cc - b.h_cc.adjoint()).cwiseAbs().maxCoeff() == 0.0);
        const Matrix5cd a_full = b.h_aa + b.h_a_so;
        CHECK((a_full - a_full.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
    }
}

TEST_CASE("degenerate stacks reproduce folded bulk spectra") {
    const auto& gaas = default_material("GaAs");
    std::mt19937_64 rng(67);
    std::uniform_real_distribution<double> u(-0.4, 0.4);
    for (const auto& [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}}) {
        const auto stack = stack_of({{"GaAs", m}, {"GaAs", n}});
        double worst = 0.0;
        for (int j = 0; j < 16; ++j) {
            const WaveVector sl_k{u(rng), u(rng), -1.0 + 2.0 * j / 15.0};
            const auto sl = sl_band_energies(stack, sl_k);
            const auto bulk = folded_bulk(gaas, m + n, sl_k);
            REQUIRE(sl.size() == bulk.size());
            for (std::size_t i = 0; i < sl.size(); ++i)
                worst = std::max(worst, std::abs(sl[i] - bulk[i]));
        }
        CHECK(worst < 1e-6);
    }
}

TEST_CASE("axial Bloch periodicity") {
    const auto stack = stack_of({{"GaAs", 3}, {"AlAs", 2}});
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    for (int rep = 0; rep < 5; ++rep) {
        const double kx = u(rng), ky = u(rng), kz = u(rng);
        const auto a = sl_band_energies(stack, {kx, ky, kz});
        const auto b = sl_band_energies(stack, {kx, ky, kz + 2.0});
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-9);
    }
}

TEST_CASE("period doubling leaves the gap unchanged") {
    const auto base = stack_of({{"GaAs", 3}, {"AlAs", 2}});
    const auto doubled = stack_of({{"GaAs", 3}, {"AlAs", 2}, {"GaAs", 3}, {"AlAs", 2}});
    const GapReport a = sl_gap(base);
    const GapReport b = sl_gap(doubled);
    CHECK(std::abs(a.gap - b.gap) < 1e-6);
}

TEST_CASE("reference superlattice gaps") {
    struct Row {
        int m, n;
        double gap;
        double tol;
        bool direct;
        bool check_character;
    };
    const std::vector<Row> rows = {
        {3, 3, 2.02, 0.07, false, false},  {5, 5, 1.94, 0.07, false, false},
        {8, 8, 1.83, 0.07, true, false},   {6, 3, 1.89, 0.07, true, false},
        {9, 4, 1.75, 0.05, true, true},    {10, 4, 1.72, 0.05, true, true},
    };
    std::vector<double> gaps;
    for (const auto& row : rows) {
        const auto r = sl_gap(stack_of({{"GaAs", row.m}, {"AlAs", row.n}}));
        CHECK(std::abs(r.gap - row.gap) < row.tol);
        if (row.check_character)
            CHECK((r.character == GapCharacter::Direct) == row.direct);
        gaps.push_back(r.gap);
    }
    // ordering of the published table
    CHECK(gaps[0] > gaps[1]);  // (3,3) > (5,5)
    CHECK(gaps[1] > gaps[2]);  // (5,5) > (8,8)
    CHECK(gaps[4] > gaps[5]);  // (9,4) > (10,4)
}

TEST_CASE("gap search options") {
    const auto stack = stack_of({{"GaAs", 9}, {"AlAs", 4}});
    SlGapOptions opts;
    opts.axial_samples = 1;
    CHECK_THROWS_AS(sl_gap(stack, opts), ConfigError);

    // The in-plane edge points fold zone-boundary conduction states below the
    // zone-centre well states for every stack; keeping them available but off
    // by default is what lets the axial search track the confined levels.
    SlGapOptions with_edges;
    with_edges.include_inplane_edges = true;
    const auto wide = sl_gap(stack, with_edges);
    const auto axial = sl_gap(stack);
    CHECK(wide.gap <= axial.gap + 1e-12);
}

TEST_CASE("strain scaling is a sub-percent effect for the default materials") {
    const auto stack = stack_of({{"GaAs", 5}, {"AlAs", 5}});
    SlGapOptions plain;
    plain.sl.strain_scaling = false;
    const double with = sl_gap(stack).gap;
    const double without = sl_gap(stack, plain).gap;
    CHECK(std::abs(with - without) < 0.003 * with);
}

TEST_CASE("non-finite wave vector is rejected") {
    const auto stack = stack_of({{"GaAs", 2}, {"AlAs", 2}});
    CHECK_THROWS_AS(build_sl_hamiltonian(stack, {std::nan(""), 0, 0}), ConfigError);
}
