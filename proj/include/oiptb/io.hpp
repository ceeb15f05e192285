#ifndef OIPTB_IO_HPP
#define OIPTB_IO_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oiptb/alloy.hpp"
#include "oiptb/fitting.hpp"
#include "oiptb/properties.hpp"
#include "oiptb/types.hpp"

namespace oiptb::io {

// Material files: one JSON object with keys `name`,
// `lattice_constant_angstrom` and `oips` (the 15 field names). Unknown keys
// are rejected with an error naming the key.
Material load_material(const std::filesystem::path& file);
void save_material(const Material& m, const std::filesystem::path& file);

// Resolve a CLI material argument: an existing path wins; otherwise
// `<name>.json` (lower-cased) is looked up in the database directory
// (OIPTB_MATERIALS_DIR or `default_dir`).
std::filesystem::path resolve_material_path(const std::string& arg,
                                            const std::filesystem::path& default_dir);

// Targets file: {"material": ..., "features": {label: {"target": num|null, "weight": num}}}.
struct TargetsFile {
    std::string material_name;
    std::map<BandFeature, FeatureTarget> features;
};
TargetsFile load_targets(const std::filesystem::path& file);

struct FitConfigFile {
    FitConfig config;
    CostSpec spec;
    std::vector<HoldoutEntry> holdout;
};
FitConfigFile load_fit_config(const std::filesystem::path& file);

// Property report: feature label -> {computed, target, weight, abs_error},
// plus the overall MAPE over features with targets.
std::string property_report_json(const std::string& material_name,
                                 const std::map<BandFeature, double>& computed,
                                 const std::map<BandFeature, FeatureTarget>& targets);

std::string gap_report_json(const GapReport& report, std::optional<double> cutoff_um,
                            const std::map<std::string, std::string>& extra = {});

std::string fit_result_json(const FitResult& result, const CostSpec& spec);
std::string holdout_report_json(const HoldoutReport& report);

// CSV conventions: '.' decimal, ',' separator, LF endings, 6 significant digits.
std::string format_sig(double v, int digits = 6);
std::string bands_csv(const std::vector<std::array<double, 4>>& kcols,
                      const std::vector<std::vector<double>>& energies);
std::string sweep_csv(const std::vector<SweepRow>& rows);

// FNV-1a over the file bytes; stable digest for identical inputs.
std::string digest_hex(const std::string& bytes);
std::string file_digest(const std::filesystem::path& file);

struct RunManifest {
    std::string command_line;
    std::map<std::string, std::string> config_digests;  // path -> digest
    unsigned long long seed = 0;
    std::string tool_version;
    std::string timestamp;  // ISO 8601 UTC
    std::vector<std::string> outputs;
};

std::string manifest_json(const RunManifest& m);

void write_text(const std::filesystem::path& file, const std::string& text);
std::string read_text(const std::filesystem::path& file);

}  // namespace oiptb::io

#endif
