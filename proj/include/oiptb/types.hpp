#ifndef OIPTB_TYPES_HPP
#define OIPTB_TYPES_HPP

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace oiptb {

// Error taxonomy. Config/usage problems map to CLI exit 2, numerical
// failures to exit 3.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
  public:
    using Error::Error;
};

class NumericalError : public Error {
  public:
    using Error::Error;
};

class ConstraintError : public Error {
  public:
    enum class Kind { Degenerate, Infeasible };
    ConstraintError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

  private:
    Kind kind_;
};

namespace constants {
// hbar^2/m0 in eV*A^2, so m*/m0 = hbar2_over_m0 / (d2E/dk2) with k in 1/A.
inline constexpr double hbar2_over_m0 = 7.61996;
// h*c in eV*um, for cutoff wavelength lambda = hc / Eg.
inline constexpr double hc_ev_um = 1.23984;
}  // namespace constants

// The 15 orbital interaction parameters of one binary compound: on-site
// energies (s, p, s* for anion/cation), two-center couplings, and the
// intra-atomic spin-orbit energies delta_a/delta_c. All in eV.
struct OipSet {
    double e_sa = 0.0;
    double e_sc = 0.0;
    double e_ssa = 0.0;
    double e_ssc = 0.0;
    double e_xayc = 0.0;
    double e_saxc = 0.0;
    double e_xasc = 0.0;
    double e_ssaxc = 0.0;
    double e_xassc = 0.0;
    double e_pa = 0.0;
    double e_pc = 0.0;
    double e_sasc = 0.0;
    double e_xaxc = 0.0;
    double delta_a = 0.0;
    double delta_c = 0.0;

    bool operator==(const OipSet&) const = default;
};

// Field table used by serialization, interpolation and the fitter.
struct OipField {
    const char* name;
    double OipSet::* member;
};

inline constexpr std::array<OipField, 15> oip_fields = {{
    {"e_sa", &OipSet::e_sa},
    {"e_sc", &OipSet::e_sc},
    {"e_ssa", &OipSet::e_ssa},
    {"e_ssc", &OipSet::e_ssc},
    {"e_xayc", &OipSet::e_xayc},
    {"e_saxc", &OipSet::e_saxc},
    {"e_xasc", &OipSet::e_xasc},
    {"e_ssaxc", &OipSet::e_ssaxc},
    {"e_xassc", &OipSet::e_xassc},
    {"e_pa", &OipSet::e_pa},
    {"e_pc", &OipSet::e_pc},
    {"e_sasc", &OipSet::e_sasc},
    {"e_xaxc", &OipSet::e_xaxc},
    {"delta_a", &OipSet::delta_a},
    {"delta_c", &OipSet::delta_c},
}};

// Lists every violated invariant; empty means valid.
std::vector<std::string> validate_oips(const OipSet& o);

struct Material {
    std::string name;
    OipSet oips;
    double lattice_constant = 0.0;  // Angstrom
    std::string anion;
    std::string cation;
};

// GaAs and AlAs with the 300 K parameter sets. Stable across calls.
const std::vector<Material>& default_materials();
const Material& default_material(const std::string& name);

// Reciprocal-space point in units of 2*pi/a (bulk) unless stated otherwise.
struct WaveVector {
    double kx = 0.0;
    double ky = 0.0;
    double kz = 0.0;
};

namespace kpoints {
inline constexpr WaveVector gamma{0.0, 0.0, 0.0};
inline constexpr WaveVector x_point{1.0, 0.0, 0.0};
inline constexpr WaveVector l_point{0.5, 0.5, 0.5};
}  // namespace kpoints

}  // namespace oiptb

#endif
