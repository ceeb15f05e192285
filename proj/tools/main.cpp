// oiptb: band structures, superlattice/quantum-well gaps, and parameter
// fitting for sp3s* zinc-blende materials.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "oiptb/alloy.hpp"
#include "oiptb/bulk.hpp"
#include "oiptb/fitting.hpp"
#include "oiptb/io.hpp"
#include "oiptb/kpath.hpp"
#include "oiptb/properties.hpp"
#include "oiptb/superlattice.hpp"
#include "oiptb/version.hpp"

namespace fs = std::filesystem;
using namespace oiptb;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

std::string join_args(int argc, char** argv) {
    std::ostringstream ss;
    for (int i = 0; i < argc; ++i) ss << (i ? " " : "") << argv[i];
    return ss.str();
}

fs::path default_materials_dir(const char* argv0) {
    // Next to the binary (installed layout), else the working directory.
    const fs::path exe_dir = fs::absolute(fs::path(argv0)).parent_path();
    for (const auto& candidate :
         {exe_dir / "data" / "materials", exe_dir / ".." / "data" / "materials",
          fs::path("data") / "materials"}) {
        if (fs::exists(candidate)) return candidate;
    }
    return fs::path("data") / "materials";
}

int cmd_bands(const fs::path& material_file, const std::string& kpath_spec, int samples,
              const fs::path& out) {
    const Material m = io::load_material(material_file);
    const KPath path = KPath::parse(kpath_spec, samples);
    std::vector<std::array<double, 4>> kcols;
    std::vector<std::vector<double>> energies;
    for (const auto& p : path.sample()) {
        kcols.push_back({p.fraction, p.k.kx, p.k.ky, p.k.kz});
        energies.push_back(band_energies(m.oips, p.k, m.lattice_constant));
    }
    io::write_text(out, io::bands_csv(kcols, energies));
    std::cout << "wrote " << out.string() << " (" << kcols.size() << " k points)\n";
    return kExitOk;
}

int cmd_props(const fs::path& material_file, const std::string& targets_file, const fs::path& out) {
    const Material m = io::load_material(material_file);
    std::map<BandFeature, FeatureTarget> targets;
    if (!targets_file.empty()) targets = io::load_targets(targets_file).features;
    const auto computed = extract_features(m.oips, m.lattice_constant);
    io::write_text(out, io::property_report_json(m.name, computed, targets));
    std::cout << "wrote " << out.string() << "\n";
    return kExitOk;
}

int cmd_sl_gap(const fs::path& file_a, const fs::path& file_b, int m, int n, int axial_samples,
               bool no_strain, bool inplane_edges, const fs::path& out) {
    LayerStack stack;
    stack.layers.push_back({io::load_material(file_a), m});
    stack.layers.push_back({io::load_material(file_b), n});
    SlGapOptions opts;
    opts.axial_samples = axial_samples;
    opts.include_inplane_edges = inplane_edges;
    opts.sl.strain_scaling = !no_strain;
    const GapReport report = sl_gap(stack, opts);
    const auto cutoff =
        report.gap > 0.0 ? std::optional<double>(cutoff_wavelength(report.gap)) : std::nullopt;
    io::write_text(out, io::gap_report_json(report, cutoff,
                                            {{"structure", "(" + stack.layers[0].material.name +
                                                               ")" + std::to_string(m) + "/(" +
                                                               stack.layers[1].material.name + ")" +
                                                               std::to_string(n)}}));
    std::cout << "wrote " << out.string() << ": gap " << io::format_sig(report.gap) << " eV ("
              << to_string(report.character) << ")\n";
    return kExitOk;
}

int cmd_fit(const fs::path& config_file, const fs::path& out_dir, bool smoke, bool dry_run,
            std::optional<unsigned long long> seed_override, std::optional<int> threads_override,
            const std::string& command_line) {
    io::FitConfigFile loaded = io::load_fit_config(config_file);
    FitConfig& cfg = loaded.config;
    if (smoke) {
        cfg.population = 200;
        cfg.generations = 50;
        cfg.seed = 42;
    }
    if (seed_override) cfg.seed = *seed_override;
    if (threads_override) cfg.threads = *threads_override;
    if (auto problems = cfg.validate(); !problems.empty())
        throw ConfigError("invalid fit config: " + problems.front());

    // One evaluation timed at the base genome gives the runtime estimate.
    const CostEvaluator evaluate(loaded.spec, cfg);
    const auto base = genome_from_materials(loaded.spec, cfg);
    const auto t0 = std::chrono::steady_clock::now();
    evaluate(base);
    const double per_eval =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double est =
        per_eval * static_cast<double>(cfg.population) * static_cast<double>(cfg.generations + 1);
    std::cout << "config: population " << cfg.population << ", generations " << cfg.generations
              << ", seed " << cfg.seed << "\n";
    std::cout << "estimated runtime: " << io::format_sig(est / 60.0, 3) << " min ("
              << io::format_sig(per_eval * 1e3, 3) << " ms per evaluation, single thread)\n";
    if (dry_run) return kExitOk;

    const FitResult result = ga_fit(loaded.spec, cfg);
    fs::create_directories(out_dir);

    io::RunManifest manifest;
    manifest.command_line = command_line;
    manifest.config_digests[config_file.string()] = io::file_digest(config_file);
    manifest.seed = cfg.seed;
    manifest.tool_version = version;
    manifest.timestamp = iso_timestamp();

    const fs::path result_file = out_dir / "fit_result.json";
    io::write_text(result_file, io::fit_result_json(result, loaded.spec));
    manifest.outputs.push_back(result_file.string());

    std::vector<Material> fitted;
    for (std::size_t i = 0; i < result.best_oips.size(); ++i) {
        Material m = loaded.spec.bulk[i].base;
        m.oips = result.best_oips[i];
        fitted.push_back(m);
        std::string lower = m.name;
        for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        const fs::path mat_file = out_dir / ("fitted_" + lower + ".json");
        io::save_material(m, mat_file);
        manifest.outputs.push_back(mat_file.string());
    }

    if (!loaded.holdout.empty() && !fitted.empty()) {
        const HoldoutReport holdout = evaluate_fit(fitted, loaded.holdout);
        const fs::path holdout_file = out_dir / "holdout_report.json";
        io::write_text(holdout_file, io::holdout_report_json(holdout));
        manifest.outputs.push_back(holdout_file.string());
        std::cout << "holdout MAPE: " << io::format_sig(holdout.mape_percent, 3) << " %\n";
    }

    io::write_text(out_dir / "manifest.json", io::manifest_json(manifest));
    std::cout << "best cost " << io::format_sig(result.best_cost) << " after "
              << result.history.size() << " recorded generations\n";
    return kExitOk;
}

int cmd_qw_sweep(const std::vector<double>& xs, int t_min, int t_max, int barrier_ml,
                 int axial_samples, const fs::path& out) {
    SweepOptions opts;
    opts.barrier_monolayers = barrier_ml;
    opts.axial_samples = axial_samples;
    const auto rows = cutoff_sweep(default_material("GaAs"), default_material("AlAs"), xs, t_min,
                                   t_max, opts);
    io::write_text(out, io::sweep_csv(rows));
    std::cout << "wrote " << out.string() << " (" << rows.size() << " rows)\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sp3s* tight-binding band structures and parameter fitting"};
    app.set_version_flag("--version", version);
    app.require_subcommand(1);

    unsigned long long seed = 0;
    bool seed_set = false;
    int threads = 0;
    bool threads_set = false;
    app.add_option("--seed", seed, "Override the configured random seed")
        ->each([&](const std::string&) { seed_set = true; });
    app.add_option("--threads", threads, "Worker threads (0 = hardware)")
        ->each([&](const std::string&) { threads_set = true; });

    const fs::path materials_dir = default_materials_dir(argv[0]);

    auto* bands = app.add_subcommand("bands", "Bulk band energies along a k path, as CSV");
    std::string bands_material = "GaAs", bands_path = "L-G-X", bands_out = "bands.csv";
    int bands_samples = 40;
    bands->add_option("--material", bands_material, "Material file or database name");
    bands->add_option("--kpath", bands_path, "High-symmetry path, e.g. L-G-X");
    bands->add_option("--samples", bands_samples, "Samples per path segment (>= 2)");
    bands->add_option("--out", bands_out, "Output CSV file");

    auto* props = app.add_subcommand("props", "Bulk property report, as JSON");
    std::string props_material = "GaAs", props_targets, props_out = "props.json";
    props->add_option("--material", props_material, "Material file or database name");
    props->add_option("--targets", props_targets, "Targets file with weights");
    props->add_option("--out", props_out, "Output JSON file");

    auto* slgap = app.add_subcommand("sl-gap", "Superlattice gap for an (A)m/(B)n period");
    std::string sl_a = "GaAs", sl_b = "AlAs", sl_out = "sl_gap.json";
    int sl_m = 0, sl_n = 0, sl_axial = 33;
    bool sl_no_strain = false, sl_inplane = false;
    slgap->add_option("--material-a", sl_a, "First (substrate) material");
    slgap->add_option("--material-b", sl_b, "Second material");
    slgap->add_option("-m", sl_m, "Monolayers of material A")->required();
    slgap->add_option("-n", sl_n, "Monolayers of material B")->required();
    slgap->add_option("--axial-samples", sl_axial, "Axial k samples");
    slgap->add_flag("--no-strain", sl_no_strain, "Disable bond-length coupling scaling");
    slgap->add_flag("--inplane-edges", sl_inplane, "Also sample in-plane zone-edge points");
    slgap->add_option("--out", sl_out, "Output JSON file");

    auto* fit = app.add_subcommand("fit", "Optimize parameters against bulk + superlattice targets");
    std::string fit_config, fit_out_dir = "fit_out";
    bool fit_smoke = false, fit_dry = false;
    fit->add_option("--config", fit_config, "Fit configuration JSON")->required();
    fit->add_option("--out-dir", fit_out_dir, "Output directory");
    fit->add_flag("--smoke", fit_smoke, "Reduced-scale run (population 200, 50 generations, seed 42)");
    fit->add_flag("--dry-run", fit_dry, "Validate config and report the runtime estimate only");

    auto* sweep = app.add_subcommand("qw-sweep", "Quantum-well cutoff-wavelength sweep, as CSV");
    std::vector<double> sweep_x = {0.1, 0.2, 0.3, 0.4};
    int sweep_tmin = 3, sweep_tmax = 40, sweep_barrier = 20, sweep_axial = 9;
    std::string sweep_out = "qw_sweep.csv";
    sweep->add_option("--x", sweep_x, "Barrier compositions")->delimiter(',');
    sweep->add_option("--t-min", sweep_tmin, "Minimum well thickness (ML)");
    sweep->add_option("--t-max", sweep_tmax, "Maximum well thickness (ML)");
    sweep->add_option("--barrier-ml", sweep_barrier, "Barrier thickness (ML)");
    sweep->add_option("--axial-samples", sweep_axial, "Axial k samples per cell");
    sweep->add_option("--out", sweep_out, "Output CSV file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (bands->parsed()) {
            if (bands_samples < 2) {
                std::cerr << "error: --samples must be at least 2\n";
                return kExitUsage;
            }
            return cmd_bands(io::resolve_material_path(bands_material, materials_dir), bands_path,
                             bands_samples, bands_out);
        }
        if (props->parsed())
            return cmd_props(io::resolve_material_path(props_material, materials_dir), props_targets,
                             props_out);
        if (slgap->parsed()) {
            if (sl_m < 1 || sl_n < 1) {
                std::cerr << "error: monolayer counts must be >= 1\n";
                return kExitUsage;
            }
            return cmd_sl_gap(io::resolve_material_path(sl_a, materials_dir),
                              io::resolve_material_path(sl_b, materials_dir), sl_m, sl_n, sl_axial,
                              sl_no_strain, sl_inplane, sl_out);
        }
        if (fit->parsed())
            return cmd_fit(fit_config, fit_out_dir, fit_smoke, fit_dry,
                           seed_set ? std::optional<unsigned long long>(seed) : std::nullopt,
                           threads_set ? std::optional<int>(threads) : std::nullopt,
                           join_args(argc, argv));
        if (sweep->parsed())
            return cmd_qw_sweep(sweep_x, sweep_tmin, sweep_tmax, sweep_barrier, sweep_axial,
                                sweep_out);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConstraintError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}
