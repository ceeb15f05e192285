#ifndef OIPTB_CONSTRAINTS_HPP
#define OIPTB_CONSTRAINTS_HPP

#include <optional>

#include "oiptb/types.hpp"

namespace oiptb {

// The nine free parameters left to the optimizer once the analytic
// zone-center conditions fix e_pa, e_pc, e_xaxc and e_sasc. When the
// spin-orbit-antibonding anchor is not used (use_eq5 = false), e_pa joins
// the gene list and must be supplied here.
struct FreeParams {
    double e_sa = 0.0;
    double e_sc = 0.0;
    double e_ssa = 0.0;
    double e_ssc = 0.0;
    double e_xayc = 0.0;
    double e_saxc = 0.0;
    double e_xasc = 0.0;
    double e_ssaxc = 0.0;
    double e_xassc = 0.0;
    std::optional<double> e_pa;
};

// Zone-center observables that pin the derived parameters: the fundamental
// gap e_g, the valence spin-orbit splitting delta, optionally the
// spin-orbit antibonding level e_so1, plus the fixed atomic delta_a/delta_c.
struct ConstraintAnchors {
    double e_g = 0.0;
    double delta = 0.0;
    std::optional<double> e_so1;
    double delta_a = 0.0;
    double delta_c = 0.0;
};

// Two published forms of the e_pa relation. AsPrinted reproduces the
// literature expression with (1/3)delta_a*delta as its last numerator term;
// SpectrallyConsistent uses (1/3)delta_a*delta_c, which is the exact
// inversion of the zone-center split-off conditions (the round-trip pin
// test passes only for this form). Default is the consistent form.
enum class Eq5Form { AsPrinted, SpectrallyConsistent };

struct ExpandOptions {
    bool use_eq5 = false;
    Eq5Form eq5_form = Eq5Form::SpectrallyConsistent;
};

double derive_e_pa(const ConstraintAnchors& a, Eq5Form form = Eq5Form::SpectrallyConsistent);
double derive_e_pc(double e_pa, const ConstraintAnchors& a);
double derive_e_xaxc(double e_pa, double e_pc, double delta_a, double delta_c);
double derive_e_sasc(double e_sa, double e_sc, double e_g);

// Full 15-parameter set. The derived entries satisfy exactly:
//   upper s-block eigenvalue at Gamma   = a.e_g
//   hh/lh level at Gamma                = 0
//   split-off level at Gamma            = -a.delta
OipSet expand(const FreeParams& f, const ConstraintAnchors& a, const ExpandOptions& opts = {});

}  // namespace oiptb

#endif
