#include <doctest.h>

#include <cmath>
#include <limits>

#include "oiptb/hermitian.hpp"
#include "oiptb/types.hpp"
#include "support/helpers.hpp"

using namespace oiptb;

TEST_CASE("default material database carries the 300 K parameter sets") {
    const auto& gaas = default_material("GaAs");
    const auto& alas = default_material("AlAs");
    CHECK(gaas.oips.e_sa == doctest::Approx(-4.7642).epsilon(1e-12));
    CHECK(alas.oips.delta_c == doctest::Approx(0.024).epsilon(1e-12));
    // shared As anion
    CHECK(gaas.oips.delta_a == doctest::Approx(0.421));
    CHECK(alas.oips.delta_a == doctest::Approx(0.421));
    CHECK(gaas.lattice_constant == doctest::Approx(5.6533));
    CHECK(alas.lattice_constant == doctest::Approx(5.6611));
    CHECK(gaas.anion == "As");
    CHECK(alas.cation == "Al");
    CHECK_THROWS_AS(default_material("InSb"), ConfigError);
}

TEST_CASE("database is stable across calls") {
    const auto& first = default_materials();
    const auto& second = default_materials();
    CHECK(&first == &second);
    REQUIRE(first.size() == 2);
    for (std::size_t i = 0; i < first.size(); ++i) {
        for (const auto& f : oip_fields)
            CHECK(first[i].oips.*(f.member) == second[i].oips.*(f.member));
    }
}

TEST_CASE("validate_oips reports every violated invariant") {
    const OipSet valid = default_material("GaAs").oips;
    CHECK(validate_oips(valid).empty());

    OipSet bad_delta = valid;
    bad_delta.delta_a = -0.1;
    const auto report = validate_oips(bad_delta);
    REQUIRE(report.size() == 1);
    CHECK(report.front().find("delta_a") != std::string::npos);

    OipSet bad_finite = valid;
    bad_finite.e_pa = std::numeric_limits<double>::quiet_NaN();
    const auto report2 = validate_oips(bad_finite);
    REQUIRE(report2.size() == 1);
    CHECK(report2.front().find("e_pa") != std::string::npos);
    CHECK(report2.front().find("finite") != std::string::npos);
}

TEST_CASE("physical constants") {
    CHECK(constants::hbar2_over_m0 == 7.61996);
    CHECK(constants::hc_ev_um == 1.23984);
}

TEST_CASE("HermitianMatrix symmetrizes tolerable input and rejects the rest") {
    std::mt19937_64 rng(3);
    Eigen::MatrixXcd h = oiptb::testing::random_hermitian(6, rng);

    HermitianMatrix exact(h);
    CHECK(exact.hermiticity_deviation() == 0.0);
    CHECK(exact.dim() == 6);

    Eigen::MatrixXcd nudged = h;
    nudged(1, 2) += std::complex<double>(4e-13, -4e-13);
    HermitianMatrix fixed(nudged);
    CHECK(fixed.hermiticity_deviation() == 0.0);

    Eigen::MatrixXcd broken = h;
    broken(1, 2) += 1e-6;
    CHECK_THROWS_AS(HermitianMatrix{broken}, ConfigError);

    Eigen::MatrixXcd rect(2, 3);
    rect.setZero();
    CHECK_THROWS_AS(HermitianMatrix{rect}, ConfigError);
}
