#include "oiptb/constraints.hpp"

#include <cmath>
#include <string>

namespace oiptb {

namespace {
constexpr double kDegenerateTol = 1e-12;
}

double derive_e_pa(const ConstraintAnchors& a, Eq5Form form) {
    if (!a.e_so1) throw ConfigError("derive_e_pa: anchor e_so1 is required");
    const double denom = a.delta_a - a.delta_c;
    if (std::abs(denom) < kDegenerateTol)
        throw ConstraintError(ConstraintError::Kind::Degenerate,
                              "derive_e_pa: delta_a == delta_c makes the relation degenerate");
    const double last =
        form == Eq5Form::AsPrinted ? a.delta_a * a.delta / 3.0 : a.delta_a * a.delta_c / 3.0;
    const double num = *a.e_so1 * (a.delta_a - a.delta) - a.delta_a * a.delta +
                       (2.0 / 3.0) * a.delta_a * a.delta_a + last;
    return num / denom;
}

double derive_e_pc(double e_pa, const ConstraintAnchors& a) {
    const double denom = a.delta_a - a.delta;
    if (std::abs(denom) < kDegenerateTol)
        throw ConstraintError(ConstraintError::Kind::Degenerate,
                              "derive_e_pc: delta_a == delta makes the relation degenerate");
    const double num = a.delta * a.delta +
                       a.delta * (e_pa - (2.0 / 3.0) * a.delta_a - (2.0 / 3.0) * a.delta_c) +
                       a.delta_a * a.delta_c / 3.0 - e_pa * a.delta_c;
    return num / denom;
}

double derive_e_xaxc(double e_pa, double e_pc, double delta_a, double delta_c) {
    const double radicand = (e_pa + delta_a / 3.0) * (e_pc + delta_c / 3.0);
    if (radicand < 0.0)
        throw ConstraintError(ConstraintError::Kind::Infeasible,
                              "derive_e_xaxc: negative radicand " + std::to_string(radicand));
    return std::sqrt(radicand);
}

double derive_e_sasc(double e_sa, double e_sc, double e_g) {
    const double radicand = e_g * e_g - e_g * (e_sa + e_sc) + e_sa * e_sc;
    if (radicand < 0.0)
        throw ConstraintError(ConstraintError::Kind::Infeasible,
                              "derive_e_sasc: negative radicand " + std::to_string(radicand));
    return -std::sqrt(radicand);
}

OipSet expand(const FreeParams& f, const ConstraintAnchors& a, const ExpandOptions& opts) {
    OipSet o;
    o.e_sa = f.e_sa;
    o.e_sc = f.e_sc;
    o.e_ssa = f.e_ssa;
    o.e_ssc = f.e_ssc;
    o.e_xayc = f.e_xayc;
    o.e_saxc = f.e_saxc;
    o.e_xasc = f.e_xasc;
    o.e_ssaxc = f.e_ssaxc;
    o.e_xassc = f.e_xassc;
    o.delta_a = a.delta_a;
    o.delta_c = a.delta_c;
    if (opts.use_eq5) {
        o.e_pa = derive_e_pa(a, opts.eq5_form);
    } else {
        if (!f.e_pa)
            throw ConfigError("expand: e_pa must be supplied as a gene when use_eq5 is off");
        o.e_pa = *f.e_pa;
    }
    o.e_pc = derive_e_pc(o.e_pa, a);
    o.e_xaxc = derive_e_xaxc(o.e_pa, o.e_pc, a.delta_a, a.delta_c);
    o.e_sasc = derive_e_sasc(o.e_sa, o.e_sc, a.e_g);
    return o;
}

}  // namespace oiptb
