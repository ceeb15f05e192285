#ifndef OIPTB_FITTING_HPP
#define OIPTB_FITTING_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oiptb/constraints.hpp"
#include "oiptb/properties.hpp"
#include "oiptb/superlattice.hpp"
#include "oiptb/types.hpp"

namespace oiptb {

struct FeatureTarget {
    std::optional<double> target;  // absent: feature excluded from the cost
    double weight = 1.0;
};

struct BulkTargetSet {
    std::string material_name;
    Material base;  // lattice constant + initial parameter values
    ConstraintAnchors anchors;
    std::map<BandFeature, FeatureTarget> targets;
};

struct SlTarget {
    LayerStack stack;
    double gap_ev = 0.0;
    double weight = 1e6;
};

struct CostSpec {
    std::vector<BulkTargetSet> bulk;  // one entry per fitted material
    std::vector<SlTarget> superlattices;
};

struct GeneBounds {
    std::string name;
    double low = 0.0;
    double high = 0.0;
};

struct FitConfig {
    int population = 10000;
    int generations = 453;
    unsigned long long seed = 1;
    double crossover_rate = 0.9;
    double mutation_rate = 0.1;
    double mutation_sigma_frac = 0.05;  // of each gene's range
    double elite_frac = 0.02;
    int tournament_size = 4;
    double bounds_frac = 0.6;  // +-fraction around the base value, sign-preserving
    bool use_eq5 = false;
    int sl_axial_samples = 3;  // kz grid for the in-loop gap evaluation
    int threads = 0;           // 0: hardware default
    SlOptions sl;

    std::vector<std::string> validate() const;

    bool operator==(const FitConfig&) const = default;
};

// Gene layout: per material, the nine free parameters in field order,
// followed by e_pa when use_eq5 is false. Materials concatenate in CostSpec
// order.
std::vector<GeneBounds> gene_bounds(const CostSpec& spec, const FitConfig& cfg);
std::vector<double> genome_from_materials(const CostSpec& spec, const FitConfig& cfg);
std::vector<OipSet> expand_genome(const std::vector<double>& genome, const CostSpec& spec,
                                  const FitConfig& cfg);

// Weighted absolute-error sum over all bulk features and the superlattice
// gap targets. Infeasible constraint expansions yield a large finite penalty
// (1e9 + distance to feasibility) instead of throwing, so the optimizer can
// traverse infeasible regions.
class CostEvaluator {
  public:
    CostEvaluator(CostSpec spec, FitConfig cfg);

    double operator()(const std::vector<double>& genome) const;

    // Superlattice gap of target index `i` for an already-expanded set.
    double sl_gap_for(const std::vector<OipSet>& oips, std::size_t i) const;

    const CostSpec& spec() const { return spec_; }
    const FitConfig& config() const { return cfg_; }

  private:
    CostSpec spec_;
    FitConfig cfg_;
    std::vector<std::vector<WaveVector>> sl_kpoints_;  // cached per target
};

double cost(const std::vector<double>& genome, const CostSpec& spec, const FitConfig& cfg);

struct FitResult {
    std::vector<double> best_genome;
    std::vector<OipSet> best_oips;  // one per fitted material
    double best_cost = 0.0;
    std::vector<double> history;  // best cost per generation, non-increasing
    unsigned long long seed = 0;
    FitConfig config;

    bool operator==(const FitResult&) const = default;
};

// Real-coded GA: tournament selection, uniform crossover, Gaussian mutation,
// elitism; genes clamped to bounds and re-expanded through the constraint
// relations before every evaluation. Deterministic for a fixed seed at any
// thread count.
FitResult ga_fit(const CostSpec& spec, const FitConfig& cfg);

struct HoldoutEntry {
    std::string label;
    LayerStack stack;
    double experimental_gap_ev = 0.0;
};

struct HoldoutPrediction {
    std::string label;
    double predicted_ev = 0.0;
    double experimental_ev = 0.0;
    double percent_error = 0.0;
};

struct HoldoutReport {
    std::vector<HoldoutPrediction> predictions;
    double mape_percent = 0.0;
};

// Predict each holdout gap with fitted parameters; materials are matched to
// stack entries by name.
HoldoutReport evaluate_fit(const std::vector<Material>& fitted,
                           const std::vector<HoldoutEntry>& holdout,
                           const SlGapOptions& gap_opts = {});

}  // namespace oiptb

#endif
