#include "oiptb/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <thread>

namespace oiptb {

namespace {

constexpr double kPenaltyBase = 1e9;

int genes_per_material(const FitConfig& cfg) { return cfg.use_eq5 ? 9 : 10; }

FreeParams free_params_from_genes(const double* g, const FitConfig& cfg) {
    FreeParams f;
    f.e_sa = g[0];
    f.e_sc = g[1];
    f.e_ssa = g[2];
    f.e_ssc = g[3];
    f.e_xayc = g[4];
    f.e_saxc = g[5];
    f.e_xasc = g[6];
    f.e_ssaxc = g[7];
    f.e_xassc = g[8];
    if (!cfg.use_eq5) f.e_pa = g[9];
    return f;
}

void run_indexed(int n, int threads, const std::function<void(int)>& body) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min(threads, n));
    if (threads == 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (int i = t; i < n; i += threads) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

std::vector<std::string> FitConfig::validate() const {
    std::vector<std::string> problems;
    if (population < 2) problems.push_back("population must be >= 2");
    if (generations < 1) problems.push_back("generations must be >= 1");
    if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0))
        problems.push_back("crossover_rate must lie in [0, 1]");
    if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0))
        problems.push_back("mutation_rate must lie in [0, 1]");
    if (!(mutation_sigma_frac > 0.0)) problems.push_back("mutation_sigma_frac must be positive");
    if (!(elite_frac >= 0.0 && elite_frac < 1.0)) problems.push_back("elite_frac must lie in [0, 1)");
    if (tournament_size < 1) problems.push_back("tournament_size must be >= 1");
    if (!(bounds_frac > 0.0 && bounds_frac < 1.0))
        problems.push_back("bounds_frac must lie in (0, 1)");
    if (sl_axial_samples < 2) problems.push_back("sl_axial_samples must be >= 2");
    return problems;
}

std::vector<GeneBounds> gene_bounds(const CostSpec& spec, const FitConfig& cfg) {
    std::vector<GeneBounds> out;
    for (const auto& bulk : spec.bulk) {
        const OipSet& base = bulk.base.oips;
        const int ng = genes_per_material(cfg);
        for (int i = 0; i < ng; ++i) {
            const auto& field = i < 9 ? oip_fields[static_cast<std::size_t>(i)] : oip_fields[9];
            const double v = base.*(field.member);
            const double half = cfg.bounds_frac * (std::abs(v) > 0.0 ? std::abs(v) : 1.0);
            out.push_back({bulk.material_name + "." + field.name, v - half, v + half});
        }
    }
    return out;
}

std::vector<double> genome_from_materials(const CostSpec& spec, const FitConfig& cfg) {
    std::vector<double> g;
    for (const auto& bulk : spec.bulk) {
        const OipSet& base = bulk.base.oips;
        const int ng = genes_per_material(cfg);
        for (int i = 0; i < ng; ++i) {
            const auto& field = i < 9 ? oip_fields[static_cast<std::size_t>(i)] : oip_fields[9];
            g.push_back(base.*(field.member));
        }
    }
    return g;
}

std::vector<OipSet> expand_genome(const std::vector<double>& genome, const CostSpec& spec,
                                  const FitConfig& cfg) {
    const int ng = genes_per_material(cfg);
    if (genome.size() != spec.bulk.size() * static_cast<std::size_t>(ng))
        throw ConfigError("expand_genome: genome length mismatch");
    std::vector<OipSet> out;
    ExpandOptions opts{cfg.use_eq5, Eq5Form::SpectrallyConsistent};
    for (std::size_t i = 0; i < spec.bulk.size(); ++i) {
        const FreeParams f = free_params_from_genes(genome.data() + i * static_cast<std::size_t>(ng), cfg);
        out.push_back(expand(f, spec.bulk[i].anchors, opts));
    }
    return out;
}

CostEvaluator::CostEvaluator(CostSpec spec, FitConfig cfg)
    : spec_(std::move(spec)), cfg_(std::move(cfg)) {
    for (std::size_t t = 0; t < spec_.superlattices.size(); ++t) {
        std::vector<WaveVector> ks;
        for (int j = 0; j < cfg_.sl_axial_samples; ++j)
            ks.push_back({0.0, 0.0, static_cast<double>(j) / (cfg_.sl_axial_samples - 1)});
        sl_kpoints_.push_back(std::move(ks));
    }
}

double CostEvaluator::sl_gap_for(const std::vector<OipSet>& oips, std::size_t ti) const {
    LayerStack stack = spec_.superlattices[ti].stack;
    for (auto& layer : stack.layers) {
        bool found = false;
        for (std::size_t i = 0; i < spec_.bulk.size(); ++i) {
            if (layer.material.name == spec_.bulk[i].material_name) {
                layer.material.oips = oips[i];
                found = true;
                break;
            }
        }
        if (!found)
            throw ConfigError("superlattice target references unfitted material " +
                              layer.material.name);
    }
    const int n_valence = 4 * stack.total_monolayers();
    double vbm = 0.0;
    double cbm = 0.0;
    bool first = true;
    for (const auto& k : sl_kpoints_[ti]) {
        const auto e = sl_band_energies(stack, k, cfg_.sl);
        if (k.kz == 0.0) vbm = e[static_cast<std::size_t>(n_valence - 1)];
        const double c = e[static_cast<std::size_t>(n_valence)];
        if (first || c < cbm) cbm = c;
        first = false;
    }
    return cbm - vbm;
}

double CostEvaluator::operator()(const std::vector<double>& genome) const {
    const int ng = genes_per_material(cfg_);

    // Constraint expansion with an explicit penalty path: infeasible radicands
    // contribute their magnitude so the optimizer sees a gradient back to the
    // feasible region.
    std::vector<OipSet> oips;
    double infeasibility = 0.0;
    for (std::size_t i = 0; i < spec_.bulk.size(); ++i) {
        const double* g = genome.data() + i * static_cast<std::size_t>(ng);
        const FreeParams f = free_params_from_genes(g, cfg_);
        const ConstraintAnchors& a = spec_.bulk[i].anchors;
        double e_pa = 0.0;
        if (cfg_.use_eq5) {
            if (std::abs(a.delta_a - a.delta_c) < 1e-12 || !a.e_so1) {
                infeasibility += 1.0;
                continue;
            }
            e_pa = derive_e_pa(a, Eq5Form::SpectrallyConsistent);
        } else {
            e_pa = *f.e_pa;
        }
        if (std::abs(a.delta_a - a.delta) < 1e-12) {
            infeasibility += 1.0;
            continue;
        }
        const double e_pc = derive_e_pc(e_pa, a);
        const double r1 = (e_pa + a.delta_a / 3.0) * (e_pc + a.delta_c / 3.0);
        const double r2 = a.e_g * a.e_g - a.e_g * (f.e_sa + f.e_sc) + f.e_sa * f.e_sc;
        if (r1 < 0.0) infeasibility += -r1;
        if (r2 < 0.0) infeasibility += -r2;
        if (r1 < 0.0 || r2 < 0.0) continue;
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
        o.e_pa = e_pa;
        o.e_pc = e_pc;
        o.e_xaxc = std::sqrt(r1);
        o.e_sasc = -std::sqrt(r2);
        o.delta_a = a.delta_a;
        o.delta_c = a.delta_c;
        oips.push_back(o);
    }
    if (infeasibility > 0.0 || oips.size() != spec_.bulk.size())
        return kPenaltyBase + infeasibility;

    double total = 0.0;
    try {
        for (std::size_t i = 0; i < spec_.bulk.size(); ++i) {
            const auto features =
                extract_features(oips[i], spec_.bulk[i].base.lattice_constant);
            for (const auto& [feature, ft] : spec_.bulk[i].targets) {
                if (!ft.target) continue;
                total += ft.weight * std::abs(features.at(feature) - *ft.target);
            }
        }
        for (std::size_t t = 0; t < spec_.superlattices.size(); ++t) {
            const double gap = sl_gap_for(oips, t);
            total += spec_.superlattices[t].weight * std::abs(gap - spec_.superlattices[t].gap_ev);
        }
    } catch (const NumericalError&) {
        return kPenaltyBase;
    }
    return std::isfinite(total) ? total : kPenaltyBase;
}

double cost(const std::vector<double>& genome, const CostSpec& spec, const FitConfig& cfg) {
    return CostEvaluator(spec, cfg)(genome);
}

FitResult ga_fit(const CostSpec& spec, const FitConfig& cfg) {
    if (auto problems = cfg.validate(); !problems.empty())
        throw ConfigError("invalid fit config: " + problems.front());
    if (spec.bulk.empty()) throw ConfigError("ga_fit: no materials to fit");

    const CostEvaluator evaluate(spec, cfg);
    const auto bounds = gene_bounds(spec, cfg);
    const std::size_t n_genes = bounds.size();
    const int pop_size = cfg.population;

    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);

    auto clamp_gene = [&](double v, std::size_t gi) {
        return std::clamp(v, bounds[gi].low, bounds[gi].high);
    };

    std::vector<std::vector<double>> population(static_cast<std::size_t>(pop_size));
    for (auto& genome : population) {
        genome.resize(n_genes);
        for (std::size_t gi = 0; gi < n_genes; ++gi)
            genome[gi] = bounds[gi].low + unit(rng) * (bounds[gi].high - bounds[gi].low);
    }

    std::vector<double> costs(static_cast<std::size_t>(pop_size));
    auto evaluate_population = [&] {
        run_indexed(pop_size, cfg.threads,
                    [&](int i) { costs[static_cast<std::size_t>(i)] = evaluate(population[static_cast<std::size_t>(i)]); });
    };

    // Indices sorted by cost, ties broken by index so elitism is stable.
    auto ranking = [&] {
        std::vector<int> order(static_cast<std::size_t>(pop_size));
        for (int i = 0; i < pop_size; ++i) order[static_cast<std::size_t>(i)] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            const double ca = costs[static_cast<std::size_t>(a)];
            const double cb = costs[static_cast<std::size_t>(b)];
            return ca != cb ? ca < cb : a < b;
        });
        return order;
    };

    auto tournament = [&](std::uniform_int_distribution<int>& pick) {
        int best = pick(rng);
        for (int t = 1; t < cfg.tournament_size; ++t) {
            const int cand = pick(rng);
            if (costs[static_cast<std::size_t>(cand)] < costs[static_cast<std::size_t>(best)]) best = cand;
        }
        return best;
    };

    FitResult result;
    result.seed = cfg.seed;
    result.config = cfg;

    evaluate_population();
    auto order = ranking();
    std::vector<double> best_genome = population[static_cast<std::size_t>(order.front())];
    double best_cost = costs[static_cast<std::size_t>(order.front())];
    result.history.push_back(best_cost);

    const int n_elite = std::max(cfg.elite_frac > 0.0 ? 1 : 0,
                                 static_cast<int>(cfg.elite_frac * pop_size));
    std::uniform_int_distribution<int> pick(0, pop_size - 1);

    for (int gen = 1; gen <= cfg.generations; ++gen) {
        std::vector<std::vector<double>> next;
        next.reserve(static_cast<std::size_t>(pop_size));
        for (int e = 0; e < n_elite; ++e) next.push_back(population[static_cast<std::size_t>(order[static_cast<std::size_t>(e)])]);
        while (static_cast<int>(next.size()) < pop_size) {
            std::vector<double> child_a = population[static_cast<std::size_t>(tournament(pick))];
            std::vector<double> child_b = population[static_cast<std::size_t>(tournament(pick))];
            if (unit(rng) < cfg.crossover_rate) {
                for (std::size_t gi = 0; gi < n_genes; ++gi)
                    if (unit(rng) < 0.5) std::swap(child_a[gi], child_b[gi]);
            }
            for (auto* child : {&child_a, &child_b}) {
                for (std::size_t gi = 0; gi < n_genes; ++gi) {
                    if (unit(rng) < cfg.mutation_rate) {
                        const double range = bounds[gi].high - bounds[gi].low;
                        (*child)[gi] += gauss(rng) * cfg.mutation_sigma_frac * range;
                    }
                    (*child)[gi] = clamp_gene((*child)[gi], gi);
                }
            }
            next.push_back(std::move(child_a));
            if (static_cast<int>(next.size()) < pop_size) next.push_back(std::move(child_b));
        }
        population = std::move(next);
        evaluate_population();
        order = ranking();
        const double gen_best = costs[static_cast<std::size_t>(order.front())];
        if (gen_best < best_cost) {
            best_cost = gen_best;
            best_genome = population[static_cast<std::size_t>(order.front())];
        }
        result.history.push_back(best_cost);
    }

    result.best_genome = std::move(best_genome);
    result.best_cost = result.history.back();
    try {
        result.best_oips = expand_genome(result.best_genome, spec, cfg);
    } catch (const Error&) {
        result.best_oips.clear();  // penalty-level best; no feasible expansion
    }
    return result;
}

HoldoutReport evaluate_fit(const std::vector<Material>& fitted,
                           const std::vector<HoldoutEntry>& holdout,
                           const SlGapOptions& gap_opts) {
    HoldoutReport report;
    std::vector<double> predicted;
    std::vector<double> experimental;
    for (const auto& entry : holdout) {
        LayerStack stack = entry.stack;
        for (auto& layer : stack.layers) {
            for (const auto& m : fitted)
                if (m.name == layer.material.name) layer.material = m;
        }
        const GapReport gr = sl_gap(stack, gap_opts);
        HoldoutPrediction p;
        p.label = entry.label;
        p.predicted_ev = gr.gap;
        p.experimental_ev = entry.experimental_gap_ev;
        p.percent_error = entry.experimental_gap_ev != 0.0
                              ? 100.0 * std::abs(gr.gap - entry.experimental_gap_ev) /
                                    std::abs(entry.experimental_gap_ev)
                              : 0.0;
        report.predictions.push_back(p);
        predicted.push_back(gr.gap);
        experimental.push_back(entry.experimental_gap_ev);
    }
    report.mape_percent = mape(predicted, experimental).percent;
    return report;
}

}  // namespace oiptb
