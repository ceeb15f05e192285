#ifndef OIPTB_ALLOY_HPP
#define OIPTB_ALLOY_HPP

#include "oiptb/superlattice.hpp"
#include "oiptb/types.hpp"

namespace oiptb {

// Virtual-crystal composition A_x B_(1-x) between two endpoint materials.
struct AlloySpec {
    double x = 0.0;  // fraction of `second`
    Material first;
    Material second;
};

// Component-wise linear interpolation of all 15 parameters.
OipSet vegard_oips(const AlloySpec& spec);

// Interpolated parameters plus lattice constant, with a composition-derived name.
Material vegard_material(const AlloySpec& spec);

// Periodic barrier/well stack along [001]; the barrier is an alloy of the
// well material's endpoints.
struct QwSpec {
    Material well;
    AlloySpec barrier;
    int well_monolayers = 0;
    int barrier_monolayers = 0;
};

struct QwGapOptions {
    int axial_samples = 17;
    // Verify that doubling the barrier moves the gap by < 1 meV.
    bool check_barrier_convergence = true;
    double convergence_tol_ev = 1e-3;
    SlOptions sl;
};

struct QwGapResult {
    GapReport report;
    bool convergence_checked = false;
    bool converged = true;
    double convergence_delta_ev = 0.0;
};

QwGapResult qw_gap(const QwSpec& spec, const QwGapOptions& opts = {});

struct SweepRow {
    int thickness_ml = 0;
    double x = 0.0;
    double gap_ev = 0.0;
    double cutoff_um = 0.0;
};

struct SweepOptions {
    int barrier_monolayers = 20;
    int axial_samples = 9;
    SlOptions sl;
};

// Well-thickness x composition grid of gaps and cutoff wavelengths.
std::vector<SweepRow> cutoff_sweep(const Material& well, const Material& barrier_endpoint,
                                   const std::vector<double>& x_values, int t_min, int t_max,
                                   const SweepOptions& opts = {});

}  // namespace oiptb

#endif
