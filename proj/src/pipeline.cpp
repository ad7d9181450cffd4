#include "fg/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "fg/augment.hpp"
#include "fg/dataset.hpp"
#include "fg/image_io.hpp"
#include "fg/resize.hpp"
#include "fg/smartcrop.hpp"

namespace fg {

namespace {

namespace fs = std::filesystem;

double fparam(const std::map<std::string, double>& p, const std::string& key, double fallback) {
    const auto it = p.find(key);
    return it == p.end() ? fallback : it->second;
}

int iparam(const std::map<std::string, double>& p, const std::string& key, int fallback) {
    return static_cast<int>(std::llround(fparam(p, key, fallback)));
}

SmartcropConfig smartcrop_config(const std::map<std::string, double>& p) {
    SmartcropConfig cfg;
    cfg.luma_r = fparam(p, "luma_r", cfg.luma_r);
    cfg.luma_g = fparam(p, "luma_g", cfg.luma_g);
    cfg.luma_b = fparam(p, "luma_b", cfg.luma_b);
    cfg.saturation_threshold = fparam(p, "saturation_threshold", cfg.saturation_threshold);
    cfg.saturation_weight = fparam(p, "saturation_weight", cfg.saturation_weight);
    cfg.stride_min = iparam(p, "stride_min", cfg.stride_min);
    cfg.stride_divisor = iparam(p, "stride_divisor", cfg.stride_divisor);
    cfg.min_dimension = iparam(p, "min_dimension", cfg.min_dimension);
    return cfg;
}

struct ViewResult {
    Image image;
    std::optional<GridPermutation> perm;
};

Image crop_for_grid(const Image& img, int n, const PipelineConfig& cfg) {
    return cfg.center_crop ? center_crop_divisible(img, n) : img;
}

/// View names: the registered op names plus "original", "jigsaw4" and
/// "jigsaw2" used by the pair recipes.
ViewResult apply_view(const std::string& view, const Image& img, std::uint64_t seed,
                      const PipelineConfig& cfg) {
    Rng rng(seed);
    const auto& p = cfg.params;
    if (view == "original") return {img, std::nullopt};
    if (view == "gamma") {
        GammaParams gp;
        gp.level_min = iparam(p, "level_min", gp.level_min);
        gp.level_max = iparam(p, "level_max", gp.level_max);
        return {gamma_transform(img, gp, rng), std::nullopt};
    }
    if (view == "coarse-dropout") {
        DropoutParams dp;
        dp.hole_count = iparam(p, "hole_count", dp.hole_count);
        dp.side_min = iparam(p, "side_min", dp.side_min);
        dp.side_max = iparam(p, "side_max", dp.side_max);
        return {coarse_dropout(img, dp, rng), std::nullopt};
    }
    if (view == "patch-swap") {
        PatchSwapParams sp;
        sp.patch_side = iparam(p, "patch_side", sp.patch_side);
        return {patch_swap(img, sp, rng), std::nullopt};
    }
    if (view == "random-jigsaw" || view == "jigsaw4" || view == "jigsaw2") {
        int n = iparam(p, "n", 3);
        if (view == "jigsaw4") n = 4;
        if (view == "jigsaw2") n = 2;
        auto r = random_jigsaw(crop_for_grid(img, n, cfg), n, rng);
        return {std::move(r.image), std::move(r.perm)};
    }
    if (view == "dcl-jigsaw") {
        DclParams dp;
        dp.n = iparam(p, "n", dp.n);
        dp.k = iparam(p, "k", dp.k);
        auto r = dcl_jigsaw(crop_for_grid(img, dp.n, cfg), dp, rng);
        return {std::move(r.image), std::move(r.perm)};
    }
    if (view == "smartcrop-overlay") {
        const SmartcropConfig sc = smartcrop_config(p);
        return {overlay_on_white(img, smart_crop(img, sc)), std::nullopt};
    }
    throw std::runtime_error("unknown operation: " + view);
}

fs::path tmp_sibling(const fs::path& final_path) {
    return final_path.parent_path() / (".tmp." + final_path.filename().string());
}

void atomic_save_image(const Image& img, const fs::path& final_path) {
    const fs::path tmp = tmp_sibling(final_path);
    save_image(img, tmp.string());
    fs::rename(tmp, final_path);
}

void atomic_write_text(const std::string& text, const fs::path& final_path) {
    const fs::path tmp = tmp_sibling(final_path);
    {
        std::ofstream os(tmp, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open file for writing: " + tmp.string());
        os << text;
        if (!os) throw std::runtime_error("I/O error writing: " + tmp.string());
    }
    fs::rename(tmp, final_path);
}

Manifest load_input(const std::string& input) {
    if (input.size() >= 4 && input.ends_with(".csv")) return read_manifest_csv(input);
    Manifest m;
    m.entries.push_back({input, "unlabeled", ""});
    return m;
}

/// Deterministic output stems: the input file's stem, with `_2`, `_3`, ...
/// appended on repeats in manifest order.
std::vector<std::string> output_stems(const Manifest& m) {
    std::map<std::string, int> used;
    std::vector<std::string> stems;
    stems.reserve(m.entries.size());
    for (const ManifestEntry& e : m.entries) {
        std::string stem = fs::path(e.path).stem().string();
        if (stem.empty()) stem = "item";
        const int count = ++used[stem];
        if (count > 1) stem += "_" + std::to_string(count);
        stems.push_back(stem);
    }
    return stems;
}

void for_each_parallel(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    if (count == 0) return;
    const auto threads = std::min<std::size_t>(std::max(jobs, 1), count);
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    for (std::thread& t : pool) t.join();
}

Image preprocess(const std::string& path, const PipelineConfig& cfg) {
    Image img = load_image(path);
    if (cfg.resize) img = resize(img, cfg.resize->first, cfg.resize->second);
    return img;
}

std::string perm_sidecar_json(const GridPermutation& perm) {
    return nlohmann::json(perm.mapping).dump() + "\n";
}

RunReport execute(const PipelineConfig& config,
                  const std::function<void(std::size_t, const ManifestEntry&, RunItem&)>& body) {
    const auto started = std::chrono::steady_clock::now();
    const Manifest manifest = load_input(config.input);

    RunReport report;
    report.total = static_cast<int>(manifest.entries.size());
    report.items.resize(manifest.entries.size());

    const std::vector<std::string> stems = output_stems(manifest);
    for (std::size_t i = 0; i < manifest.entries.size(); ++i) {
        report.items[i].path = manifest.entries[i].path;
        report.items[i].output = stems[i] + ".png";
        report.items[i].seed = derive_seed(config.seed, i);
    }

    for_each_parallel(manifest.entries.size(), config.jobs, [&](std::size_t i) {
        RunItem& item = report.items[i];
        try {
            body(i, manifest.entries[i], item);
            item.ok = true;
        } catch (const std::exception& e) {
            item.ok = false;
            item.error = e.what();
        }
    });

    for (const RunItem& item : report.items) (item.ok ? report.succeeded : report.failed)++;
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

    atomic_write_text(run_report_to_json(report).dump(2) + "\n",
                      fs::path(config.output_dir) / "run_report.json");
    return report;
}

} // namespace

const std::vector<std::string>& augment_operations() {
    static const std::vector<std::string> ops = {"gamma",         "coarse-dropout",
                                                 "patch-swap",    "random-jigsaw",
                                                 "dcl-jigsaw",    "smartcrop-overlay"};
    return ops;
}

const std::vector<std::string>& pair_variants() {
    static const std::vector<std::string> variants = {
        "original+gamma",      "original+dcl",
        "original+random-jigsaw", "jigsaw4x4+jigsaw2x2",
        "original+patchswap",  "original+coarsedropout",
        "original+smartcrop-overlay"};
    return variants;
}

RunReport run(const PipelineConfig& config) {
    const auto& ops = augment_operations();
    if (std::find(ops.begin(), ops.end(), config.operation) == ops.end())
        throw std::runtime_error("unknown operation: " + config.operation);

    fs::create_directories(config.output_dir);
    return execute(config, [&](std::size_t, const ManifestEntry& entry, RunItem& item) {
        const Image img = preprocess(entry.path, config);
        const ViewResult view = apply_view(config.operation, img, item.seed, config);
        const fs::path out = fs::path(config.output_dir) / item.output;
        atomic_save_image(view.image, out);
        if (view.perm) {
            fs::path sidecar = out;
            sidecar.replace_extension();
            atomic_write_text(perm_sidecar_json(*view.perm),
                              sidecar.string() + ".perm.json");
        }
    });
}

RunReport pair_emit(const PipelineConfig& config, const std::string& variant) {
    static const std::map<std::string, std::pair<std::string, std::string>> recipes = {
        {"original+gamma", {"original", "gamma"}},
        {"original+dcl", {"original", "dcl-jigsaw"}},
        {"original+random-jigsaw", {"original", "random-jigsaw"}},
        {"jigsaw4x4+jigsaw2x2", {"jigsaw4", "jigsaw2"}},
        {"original+patchswap", {"original", "patch-swap"}},
        {"original+coarsedropout", {"original", "coarse-dropout"}},
        {"original+smartcrop-overlay", {"original", "smartcrop-overlay"}}};
    const auto it = recipes.find(variant);
    if (it == recipes.end()) throw std::runtime_error("unknown pair variant: " + variant);
    const auto& [view_a, view_b] = it->second;

    fs::create_directories(fs::path(config.output_dir) / "a");
    fs::create_directories(fs::path(config.output_dir) / "b");
    return execute(config, [&](std::size_t, const ManifestEntry& entry, RunItem& item) {
        const Image img = preprocess(entry.path, config);
        const char* sides[2] = {"a", "b"};
        const std::string* views[2] = {&view_a, &view_b};
        for (int v = 0; v < 2; ++v) {
            const ViewResult view =
                apply_view(*views[v], img, derive_seed(item.seed, static_cast<std::uint64_t>(v)),
                           config);
            const fs::path out = fs::path(config.output_dir) / sides[v] / item.output;
            atomic_save_image(view.image, out);
            if (view.perm) {
                fs::path sidecar = out;
                sidecar.replace_extension();
                atomic_write_text(perm_sidecar_json(*view.perm),
                                  sidecar.string() + ".perm.json");
            }
        }
    });
}

nlohmann::json run_report_to_json(const RunReport& report) {
    nlohmann::json j;
    j["total"] = report.total;
    j["succeeded"] = report.succeeded;
    j["failed"] = report.failed;
    j["elapsed_seconds"] = report.elapsed_seconds;
    auto& items = j["items"] = nlohmann::json::array();
    for (const RunItem& item : report.items) {
        items.push_back({{"path", item.path},
                         {"output", item.output},
                         {"seed", item.seed},
                         {"ok", item.ok},
                         {"error", item.error}});
    }
    return j;
}

} // namespace fg
