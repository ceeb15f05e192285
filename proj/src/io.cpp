#include "oiptb/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace oiptb::io {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json parse_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ConfigError("cannot open file: " + file.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("malformed JSON in " + file.string() + ": " + e.what());
    }
}

void reject_unknown_keys(const json& obj, const std::vector<std::string>& allowed,
                         const std::string& context) {
    for (const auto& [key, _] : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw ConfigError("unknown key \"" + key + "\" in " + context);
    }
}

double require_number(const json& obj, const std::string& key, const std::string& context) {
    if (!obj.contains(key)) throw ConfigError("missing key \"" + key + "\" in " + context);
    if (!obj[key].is_number()) throw ConfigError("key \"" + key + "\" in " + context + " must be a number");
    return obj[key].get<double>();
}

}  // namespace

Material load_material(const std::filesystem::path& file) {
    const json j = parse_file(file);
    reject_unknown_keys(j, {"name", "lattice_constant_angstrom", "oips", "anion", "cation"},
                        file.string());
    Material m;
    if (!j.contains("name") || !j["name"].is_string())
        throw ConfigError("material file " + file.string() + " needs a string \"name\"");
    m.name = j["name"].get<std::string>();
    m.lattice_constant = require_number(j, "lattice_constant_angstrom", file.string());
    if (!(m.lattice_constant > 0.0))
        throw ConfigError("lattice_constant_angstrom must be positive in " + file.string());
    if (!j.contains("oips") || !j["oips"].is_object())
        throw ConfigError("material file " + file.string() + " needs an \"oips\" object");
    const json& oips = j["oips"];
    std::vector<std::string> allowed;
    for (const auto& f : oip_fields) allowed.push_back(f.name);
    reject_unknown_keys(oips, allowed, file.string() + " oips");
    for (const auto& f : oip_fields) m.oips.*(f.member) = require_number(oips, f.name, file.string() + " oips");
    if (j.contains("anion")) m.anion = j["anion"].get<std::string>();
    if (j.contains("cation")) m.cation = j["cation"].get<std::string>();
    if (auto report = validate_oips(m.oips); !report.empty())
        throw ConfigError("invalid parameters in " + file.string() + ": " + report.front());
    return m;
}

void save_material(const Material& m, const std::filesystem::path& file) {
    ordered_json j;
    j["name"] = m.name;
    j["lattice_constant_angstrom"] = m.lattice_constant;
    ordered_json oips;
    for (const auto& f : oip_fields) oips[f.name] = m.oips.*(f.member);
    j["oips"] = oips;
    if (!m.anion.empty()) j["anion"] = m.anion;
    if (!m.cation.empty()) j["cation"] = m.cation;
    write_text(file, j.dump(2) + "\n");
}

std::filesystem::path resolve_material_path(const std::string& arg,
                                            const std::filesystem::path& default_dir) {
    if (std::filesystem::exists(arg)) return arg;
    std::filesystem::path dir = default_dir;
    if (const char* env = std::getenv("OIPTB_MATERIALS_DIR")) dir = env;
    std::string lower = arg;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    const auto candidate = dir / (lower + ".json");
    if (std::filesystem::exists(candidate)) return candidate;
    throw ConfigError("cannot resolve material \"" + arg + "\" (no such file, and " +
                      candidate.string() + " does not exist)");
}

TargetsFile load_targets(const std::filesystem::path& file) {
    const json j = parse_file(file);
    reject_unknown_keys(j, {"material", "features"}, file.string());
    TargetsFile t;
    if (j.contains("material")) t.material_name = j["material"].get<std::string>();
    if (!j.contains("features") || !j["features"].is_object())
        throw ConfigError("targets file " + file.string() + " needs a \"features\" object");
    for (const auto& [label, entry] : j["features"].items()) {
        const auto feature = parse_feature_label(label);
        if (!feature) throw ConfigError("unknown feature label \"" + label + "\" in " + file.string());
        reject_unknown_keys(entry, {"target", "weight"}, file.string() + " feature " + label);
        FeatureTarget ft;
        if (entry.contains("target") && !entry["target"].is_null())
            ft.target = entry["target"].get<double>();
        if (entry.contains("weight")) ft.weight = entry["weight"].get<double>();
        t.features[*feature] = ft;
    }
    return t;
}

static LayerStack stack_from_json(const json& layers, const std::filesystem::path& base_dir,
                                  const std::vector<Material>& known,
                                  const std::string& context) {
    LayerStack stack;
    for (const auto& l : layers) {
        reject_unknown_keys(l, {"material", "monolayers"}, context);
        const std::string name = l.at("material").get<std::string>();
        const int ml = l.at("monolayers").get<int>();
        const Material* found = nullptr;
        for (const auto& m : known)
            if (m.name == name) found = &m;
        if (found) {
            stack.layers.push_back({*found, ml});
        } else {
            stack.layers.push_back({load_material(resolve_material_path(name, base_dir)), ml});
        }
    }
    return stack;
}

FitConfigFile load_fit_config(const std::filesystem::path& file) {
    const json j = parse_file(file);
    const auto base_dir = file.parent_path();
    reject_unknown_keys(j,
                        {"population", "generations", "seed", "crossover_rate", "mutation_rate",
                         "mutation_sigma_frac", "elite_frac", "tournament_size", "bounds_frac",
                         "use_eq5", "sl_axial_samples", "threads", "strain_scaling", "materials",
                         "superlattice_targets", "holdout_superlattices"},
                        file.string());
    FitConfigFile out;
    FitConfig& cfg = out.config;
    auto get = [&](const char* key, auto deflt) {
        using T = decltype(deflt);
        return j.contains(key) ? j[key].get<T>() : deflt;
    };
    cfg.population = get("population", cfg.population);
    cfg.generations = get("generations", cfg.generations);
    cfg.seed = get("seed", cfg.seed);
    cfg.crossover_rate = get("crossover_rate", cfg.crossover_rate);
    cfg.mutation_rate = get("mutation_rate", cfg.mutation_rate);
    cfg.mutation_sigma_frac = get("mutation_sigma_frac", cfg.mutation_sigma_frac);
    cfg.elite_frac = get("elite_frac", cfg.elite_frac);
    cfg.tournament_size = get("tournament_size", cfg.tournament_size);
    cfg.bounds_frac = get("bounds_frac", cfg.bounds_frac);
    cfg.use_eq5 = get("use_eq5", cfg.use_eq5);
    cfg.sl_axial_samples = get("sl_axial_samples", cfg.sl_axial_samples);
    cfg.threads = get("threads", cfg.threads);
    cfg.sl.strain_scaling = get("strain_scaling", cfg.sl.strain_scaling);

    if (!j.contains("materials") || !j["materials"].is_array() || j["materials"].empty())
        throw ConfigError("fit config " + file.string() + " needs a non-empty \"materials\" array");
    std::vector<Material> loaded;
    for (const auto& spec : j["materials"]) {
        reject_unknown_keys(spec, {"material_file", "targets_file", "anchors"}, file.string());
        BulkTargetSet bulk;
        const auto mat_path = base_dir / spec.at("material_file").get<std::string>();
        bulk.base = load_material(mat_path);
        bulk.material_name = bulk.base.name;
        const auto targets = load_targets(base_dir / spec.at("targets_file").get<std::string>());
        bulk.targets = targets.features;
        const json& anchors = spec.at("anchors");
        reject_unknown_keys(anchors, {"e_g", "delta", "e_so1"}, file.string() + " anchors");
        bulk.anchors.e_g = require_number(anchors, "e_g", file.string() + " anchors");
        bulk.anchors.delta = require_number(anchors, "delta", file.string() + " anchors");
        if (anchors.contains("e_so1") && !anchors["e_so1"].is_null())
            bulk.anchors.e_so1 = anchors["e_so1"].get<double>();
        bulk.anchors.delta_a = bulk.base.oips.delta_a;
        bulk.anchors.delta_c = bulk.base.oips.delta_c;
        loaded.push_back(bulk.base);
        out.spec.bulk.push_back(std::move(bulk));
    }
    if (j.contains("superlattice_targets")) {
        for (const auto& t : j["superlattice_targets"]) {
            reject_unknown_keys(t, {"layers", "gap_ev", "weight"}, file.string());
            SlTarget target;
            target.stack = stack_from_json(t.at("layers"), base_dir, loaded, file.string());
            target.gap_ev = require_number(t, "gap_ev", file.string());
            if (t.contains("weight")) target.weight = t["weight"].get<double>();
            out.spec.superlattices.push_back(std::move(target));
        }
    }
    if (j.contains("holdout_superlattices")) {
        for (const auto& h : j["holdout_superlattices"]) {
            reject_unknown_keys(h, {"label", "layers", "gap_ev"}, file.string());
            HoldoutEntry entry;
            entry.label = h.contains("label") ? h["label"].get<std::string>() : "";
            entry.stack = stack_from_json(h.at("layers"), base_dir, loaded, file.string());
            entry.experimental_gap_ev = require_number(h, "gap_ev", file.string());
            out.holdout.push_back(std::move(entry));
        }
    }
    return out;
}

std::string format_sig(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

std::string property_report_json(const std::string& material_name,
                                 const std::map<BandFeature, double>& computed,
                                 const std::map<BandFeature, FeatureTarget>& targets) {
    ordered_json features;
    std::vector<double> pred, targ;
    for (BandFeature f : all_band_features()) {
        ordered_json row;
        const double value = computed.at(f);
        row["computed"] = value;
        const auto it = targets.find(f);
        if (it != targets.end() && it->second.target) {
            row["target"] = *it->second.target;
            row["weight"] = it->second.weight;
            row["abs_error"] = std::abs(value - *it->second.target);
            pred.push_back(value);
            targ.push_back(*it->second.target);
        } else {
            row["target"] = nullptr;
            row["weight"] = it != targets.end() ? json(it->second.weight) : json(nullptr);
            row["abs_error"] = nullptr;
        }
        features[feature_label(f)] = row;
    }
    ordered_json j;
    j["material"] = material_name;
    j["features"] = features;
    if (!targ.empty()) {
        const MapeResult m = mape(pred, targ);
        j["mape_percent"] = m.percent;
        j["mape_features_used"] = m.n_used;
    } else {
        j["mape_percent"] = nullptr;
    }
    return j.dump(2) + "\n";
}

std::string gap_report_json(const GapReport& report, std::optional<double> cutoff_um,
                            const std::map<std::string, std::string>& extra) {
    ordered_json j;
    for (const auto& [k, v] : extra) j[k] = v;
    j["gap_ev"] = report.gap;
    j["character"] = to_string(report.character);
    j["cbm_location"] = report.cbm_location;
    j["vbm_energy_ev"] = report.vbm_energy;
    if (cutoff_um)
        j["cutoff_um"] = *cutoff_um;
    else
        j["cutoff_um"] = nullptr;
    return j.dump(2) + "\n";
}

static ordered_json config_json(const FitConfig& cfg) {
    ordered_json c;
    c["population"] = cfg.population;
    c["generations"] = cfg.generations;
    c["seed"] = cfg.seed;
    c["crossover_rate"] = cfg.crossover_rate;
    c["mutation_rate"] = cfg.mutation_rate;
    c["mutation_sigma_frac"] = cfg.mutation_sigma_frac;
    c["elite_frac"] = cfg.elite_frac;
    c["tournament_size"] = cfg.tournament_size;
    c["bounds_frac"] = cfg.bounds_frac;
    c["use_eq5"] = cfg.use_eq5;
    c["sl_axial_samples"] = cfg.sl_axial_samples;
    c["threads"] = cfg.threads;
    c["strain_scaling"] = cfg.sl.strain_scaling;
    return c;
}

std::string fit_result_json(const FitResult& result, const CostSpec& spec) {
    ordered_json j;
    j["config"] = config_json(result.config);
    j["seed"] = result.seed;
    j["best_cost"] = result.best_cost;
    j["cost_history"] = result.history;
    ordered_json genomes;
    const auto bounds = gene_bounds(spec, result.config);
    for (std::size_t i = 0; i < bounds.size() && i < result.best_genome.size(); ++i)
        genomes[bounds[i].name] = result.best_genome[i];
    j["best_genes"] = genomes;
    ordered_json oips = ordered_json::object();
    for (std::size_t i = 0; i < result.best_oips.size(); ++i) {
        ordered_json o;
        for (const auto& f : oip_fields) o[f.name] = result.best_oips[i].*(f.member);
        oips[spec.bulk[i].material_name] = o;
    }
    j["fitted_oips"] = oips;
    return j.dump(2) + "\n";
}

std::string holdout_report_json(const HoldoutReport& report) {
    ordered_json rows = ordered_json::array();
    for (const auto& p : report.predictions) {
        ordered_json r;
        r["label"] = p.label;
        r["predicted_ev"] = p.predicted_ev;
        r["experimental_ev"] = p.experimental_ev;
        r["percent_error"] = p.percent_error;
        rows.push_back(r);
    }
    ordered_json j;
    j["predictions"] = rows;
    j["mape_percent"] = report.mape_percent;
    return j.dump(2) + "\n";
}

std::string bands_csv(const std::vector<std::array<double, 4>>& kcols,
                      const std::vector<std::vector<double>>& energies) {
    std::ostringstream out;
    out << "k_index,k_frac,kx,ky,kz";
    const std::size_t nb = energies.empty() ? 0 : energies.front().size();
    for (std::size_t b = 1; b <= nb; ++b) out << ",e" << b;
    out << "\n";
    for (std::size_t i = 0; i < kcols.size(); ++i) {
        out << i;
        for (double v : kcols[i]) out << "," << format_sig(v);
        for (double e : energies[i]) out << "," << format_sig(e);
        out << "\n";
    }
    return out.str();
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "thickness_ml,x,gap_ev,cutoff_um\n";
    for (const auto& r : rows)
        out << r.thickness_ml << "," << format_sig(r.x) << "," << format_sig(r.gap_ev) << ","
            << format_sig(r.cutoff_um) << "\n";
    return out.str();
}

std::string digest_hex(const std::string& bytes) {
    // FNV-1a, 64-bit
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string file_digest(const std::filesystem::path& file) { return digest_hex(read_text(file)); }

std::string manifest_json(const RunManifest& m) {
    ordered_json j;
    j["command_line"] = m.command_line;
    ordered_json digests;
    for (const auto& [path, digest] : m.config_digests) digests[path] = digest;
    j["config_digests"] = digests;
    j["seed"] = m.seed;
    j["tool_version"] = m.tool_version;
    j["timestamp"] = m.timestamp;
    j["outputs"] = m.outputs;
    return j.dump(2) + "\n";
}

void write_text(const std::filesystem::path& file, const std::string& text) {
    if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
    std::ofstream out(file, std::ios::binary);
    if (!out) throw ConfigError("cannot write file: " + file.string());
    out << text;
}

std::string read_text(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw ConfigError("cannot read file: " + file.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace oiptb::io
