#include "oiptb/alloy.hpp"

#include <cmath>
#include <sstream>

namespace oiptb {

OipSet vegard_oips(const AlloySpec& spec) {
    if (!(spec.x >= 0.0 && spec.x <= 1.0))
        throw ConfigError("vegard_oips: composition x must lie in [0, 1]");
    OipSet out;
    for (const auto& f : oip_fields)
        out.*(f.member) = (1.0 - spec.x) * (spec.first.oips.*(f.member)) +
                          spec.x * (spec.second.oips.*(f.member));
    return out;
}

Material vegard_material(const AlloySpec& spec) {
    Material m;
    m.oips = vegard_oips(spec);
    m.lattice_constant =
        (1.0 - spec.x) * spec.first.lattice_constant + spec.x * spec.second.lattice_constant;
    std::ostringstream name;
    name << spec.second.cation << spec.x << spec.first.cation << 1.0 - spec.x << spec.first.anion;
    m.name = name.str();
    m.anion = spec.first.anion;
    m.cation = spec.first.cation + "/" + spec.second.cation;
    return m;
}

static LayerStack qw_stack(const QwSpec& spec, int barrier_ml) {
    LayerStack stack;
    // Well material first so its lattice constant acts as the substrate.
    stack.layers.push_back({spec.well, spec.well_monolayers});
    stack.layers.push_back({vegard_material(spec.barrier), barrier_ml});
    return stack;
}

QwGapResult qw_gap(const QwSpec& spec, const QwGapOptions& opts) {
    if (spec.well_monolayers < 1 || spec.barrier_monolayers < 1)
        throw ConfigError("qw_gap: thicknesses must be >= 1 monolayer");
    SlGapOptions gopts;
    gopts.axial_samples = opts.axial_samples;
    gopts.sl = opts.sl;

    QwGapResult out;
    out.report = sl_gap(qw_stack(spec, spec.barrier_monolayers), gopts);
    if (opts.check_barrier_convergence) {
        const GapReport doubled = sl_gap(qw_stack(spec, 2 * spec.barrier_monolayers), gopts);
        out.convergence_checked = true;
        out.convergence_delta_ev = std::abs(doubled.gap - out.report.gap);
        out.converged = out.convergence_delta_ev < opts.convergence_tol_ev;
    }
    return out;
}

std::vector<SweepRow> cutoff_sweep(const Material& well, const Material& barrier_endpoint,
                                   const std::vector<double>& x_values, int t_min, int t_max,
                                   const SweepOptions& opts) {
    if (t_min < 1 || t_max < t_min) throw ConfigError("cutoff_sweep: invalid thickness range");
    if (x_values.empty()) throw ConfigError("cutoff_sweep: no compositions given");

    QwGapOptions gopts;
    gopts.axial_samples = opts.axial_samples;
    gopts.check_barrier_convergence = false;  // fixed barrier across the grid
    gopts.sl = opts.sl;

    std::vector<SweepRow> rows;
    rows.reserve(x_values.size() * static_cast<std::size_t>(t_max - t_min + 1));
    for (double x : x_values) {
        QwSpec spec;
        spec.well = well;
        spec.barrier = AlloySpec{x, well, barrier_endpoint};
        spec.barrier_monolayers = opts.barrier_monolayers;
        for (int t = t_min; t <= t_max; ++t) {
            spec.well_monolayers = t;
            const double gap = qw_gap(spec, gopts).report.gap;
            rows.push_back({t, x, gap, cutoff_wavelength(gap)});
        }
    }
    return rows;
}

}  // namespace oiptb
