#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace fg {

/// One corpus run. `operation` names a registered op (augment_operations)
/// for run(), and is ignored by pair_emit(), which takes the variant
/// explicitly. Numeric op parameters travel in `params`; anything absent
/// falls back to the op's default.
struct PipelineConfig {
    std::uint64_t seed = 0;
    int jobs = 1;
    std::optional<std::pair<int, int>> resize;  // width, height
    bool center_crop = false;  // crop to grid divisibility instead of erroring
    std::string operation;
    std::map<std::string, double> params;
    std::string input;  // manifest CSV (detected by .csv suffix) or one image
    std::string output_dir;
};

struct RunItem {
    std::string path;    // input path
    std::string output;  // primary output file name inside output_dir
    std::uint64_t seed = 0;
    bool ok = false;
    std::string error;
};

struct RunReport {
    int total = 0;
    int succeeded = 0;
    int failed = 0;
    double elapsed_seconds = 0.0;
    std::vector<RunItem> items;
};

const std::vector<std::string>& augment_operations();
const std::vector<std::string>& pair_variants();

/// Applies config.operation to every item with per-item seed
/// derive_seed(config.seed, index). Writes PNG outputs (plus a
/// `<name>.perm.json` sidecar for the jigsaw ops) and run_report.json
/// into output_dir. Item failures are recorded, not thrown.
RunReport run(const PipelineConfig& config);

/// Emits view A and view B per item under `a/` and `b/` with matching
/// names. The views use seeds derive_seed(item_seed, 0) and
/// derive_seed(item_seed, 1), so they are independent of one another.
RunReport pair_emit(const PipelineConfig& config, const std::string& variant);

nlohmann::json run_report_to_json(const RunReport& report);

} // namespace fg
