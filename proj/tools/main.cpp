#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fg/augment.hpp"
#include "fg/dataset.hpp"
#include "fg/image_io.hpp"
#include "fg/jigsaw.hpp"
#include "fg/metrics.hpp"
#include "fg/ntxent.hpp"
#include "fg/pipeline.hpp"
#include "fg/resize.hpp"
#include "fg/rng.hpp"
#include "fg/smartcrop.hpp"
#include "fg/srkernels.hpp"

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Shared parsing helpers

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string::size_type start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

double parse_double(const std::string& s, const std::string& context) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error(context + ": not a number: `" + s + "`");
    }
}

int parse_int(const std::string& s, const std::string& context) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error(context + ": not an integer: `" + s + "`");
    }
}

std::pair<int, int> parse_resize(const std::string& spec) {
    const auto x = spec.find('x');
    if (x == std::string::npos || x == 0 || x + 1 >= spec.size())
        throw std::runtime_error("--resize expects WxH, got `" + spec + "`");
    const int w = parse_int(spec.substr(0, x), "--resize width");
    const int h = parse_int(spec.substr(x + 1), "--resize height");
    if (w < 1 || h < 1) throw std::runtime_error("--resize dimensions must be positive");
    return {w, h};
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

json read_json_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open file: " + path);
    json j;
    try {
        is >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_text_file(const std::string& text, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open file for writing: " + path);
    os << text;
    if (!os) throw std::runtime_error("I/O error writing: " + path);
}

// ---------------------------------------------------------------------------
// Tensor CSV: a `W,H,C` dimension line, then H lines of W*C values
// (row-major, channel-interleaved).

fg::Tensor3 read_tensor_csv(const std::string& path) {
    const auto lines = read_lines(path);
    if (lines.empty()) throw std::runtime_error("empty tensor file: " + path);
    const auto dims = split_fields(lines[0]);
    if (dims.size() != 3)
        throw std::runtime_error(path + ": first line must be W,H,C");
    const int w = parse_int(dims[0], path + " width");
    const int h = parse_int(dims[1], path + " height");
    const int c = parse_int(dims[2], path + " channels");
    if (w < 1 || h < 1 || c < 1) throw std::runtime_error(path + ": dims must be positive");
    if (static_cast<int>(lines.size()) != h + 1)
        throw std::runtime_error(path + ": expected " + std::to_string(h) + " data lines, got " +
                                 std::to_string(lines.size() - 1));
    fg::Tensor3 t(w, h, c);
    for (int y = 0; y < h; ++y) {
        const auto fields = split_fields(lines[1 + y]);
        if (static_cast<int>(fields.size()) != w * c)
            throw std::runtime_error(path + " line " + std::to_string(y + 2) + ": expected " +
                                     std::to_string(w * c) + " values");
        for (int i = 0; i < w * c; ++i)
            t.data[static_cast<std::size_t>(y) * w * c + i] =
                parse_double(fields[i], path + " line " + std::to_string(y + 2));
    }
    return t;
}

std::string tensor_to_csv(const fg::Tensor3& t) {
    std::string out = std::to_string(t.width) + "," + std::to_string(t.height) + "," +
                      std::to_string(t.channels) + "\n";
    char buf[64];
    for (int y = 0; y < t.height; ++y) {
        for (int i = 0; i < t.width * t.channels; ++i) {
            std::snprintf(buf, sizeof buf, "%.17g",
                          t.data[static_cast<std::size_t>(y) * t.width * t.channels + i]);
            if (i) out += ',';
            out += buf;
        }
        out += '\n';
    }
    return out;
}

// Embeddings CSV: no header, one vector per row, pairs adjacent.
fg::EmbeddingBatch read_embeddings_csv(const std::string& path) {
    const auto lines = read_lines(path);
    if (lines.empty()) throw std::runtime_error("empty embeddings file: " + path);
    std::vector<std::vector<double>> rows;
    for (std::size_t r = 0; r < lines.size(); ++r) {
        const auto fields = split_fields(lines[r]);
        std::vector<double> row;
        row.reserve(fields.size());
        for (const auto& f : fields)
            row.push_back(parse_double(f, path + " line " + std::to_string(r + 1)));
        if (!rows.empty() && row.size() != rows[0].size())
            throw std::runtime_error(path + ": ragged rows");
        rows.push_back(std::move(row));
    }
    fg::EmbeddingBatch batch;
    batch.vectors.resize(static_cast<Eigen::Index>(rows.size()),
                         static_cast<Eigen::Index>(rows[0].size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            batch.vectors(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                rows[r][c];
    return batch;
}

// ---------------------------------------------------------------------------
// Config file plumbing: a flat JSON object whose keys mirror the long
// option names. Explicit command-line flags win over config values.

struct Settings {
    json config = json::object();

    bool flag_given(const CLI::Option* opt) const { return opt && opt->count() > 0; }

    template <typename T>
    T pick(const CLI::Option* opt, const T& flag_value, const std::string& key,
           const T& fallback) const {
        if (flag_given(opt)) return flag_value;
        if (config.contains(key)) {
            try {
                return config.at(key).get<T>();
            } catch (const json::exception&) {
                throw std::runtime_error("config key `" + key + "` has the wrong type");
            }
        }
        return fallback;
    }
};

std::map<std::string, double> merge_params(const Settings& s,
                                           const std::vector<std::string>& cli_params) {
    std::map<std::string, double> params;
    if (s.config.contains("params")) {
        const json& p = s.config.at("params");
        if (!p.is_object()) throw std::runtime_error("config key `params` must be an object");
        for (const auto& [key, value] : p.items()) {
            if (!value.is_number())
                throw std::runtime_error("config param `" + key + "` must be a number");
            params[key] = value.get<double>();
        }
    }
    for (const std::string& kv : cli_params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::runtime_error("--param expects KEY=VALUE, got `" + kv + "`");
        params[kv.substr(0, eq)] = parse_double(kv.substr(eq + 1), "--param " + kv);
    }
    return params;
}

void print_item_log(const fg::RunReport& report) {
    for (const fg::RunItem& item : report.items) {
        if (item.ok)
            std::fprintf(stderr, "ok   %s -> %s\n", item.path.c_str(), item.output.c_str());
        else
            std::fprintf(stderr, "fail %s: %s\n", item.path.c_str(), item.error.c_str());
    }
}

fg::SmartcropConfig smartcrop_config_from_json(const json& j) {
    fg::SmartcropConfig cfg;
    if (j.contains("luma_r")) cfg.luma_r = j.at("luma_r").get<double>();
    if (j.contains("luma_g")) cfg.luma_g = j.at("luma_g").get<double>();
    if (j.contains("luma_b")) cfg.luma_b = j.at("luma_b").get<double>();
    if (j.contains("saturation_threshold"))
        cfg.saturation_threshold = j.at("saturation_threshold").get<double>();
    if (j.contains("saturation_weight"))
        cfg.saturation_weight = j.at("saturation_weight").get<double>();
    if (j.contains("scales")) cfg.scales = j.at("scales").get<std::vector<double>>();
    if (j.contains("stride_min")) cfg.stride_min = j.at("stride_min").get<int>();
    if (j.contains("stride_divisor")) cfg.stride_divisor = j.at("stride_divisor").get<int>();
    if (j.contains("min_dimension")) cfg.min_dimension = j.at("min_dimension").get<int>();
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deterministic self-supervised augmentation and loss toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 0;
    std::string config_path;
    int jobs = 1;
    std::string resize_spec;
    auto* seed_opt = app.add_option("--seed", seed, "Root seed (64-bit)");
    app.add_option("--config", config_path, "JSON config file; explicit flags win");
    auto* jobs_opt = app.add_option("--jobs", jobs, "Worker threads for corpus runs");
    auto* resize_opt = app.add_option("--resize", resize_spec, "Resize inputs to WxH first");

    // augment ---------------------------------------------------------------
    auto* cmd_augment = app.add_subcommand("augment", "Apply one operation to a corpus");
    std::string aug_op, aug_input, aug_out;
    std::vector<std::string> aug_params;
    bool aug_center_crop = false;
    auto* aug_op_opt = cmd_augment->add_option("--op", aug_op, "Operation name");
    auto* aug_input_opt = cmd_augment->add_option("--input", aug_input, "Manifest CSV or image");
    auto* aug_out_opt = cmd_augment->add_option("--out", aug_out, "Output directory");
    cmd_augment->add_option("--param", aug_params, "Operation parameter KEY=VALUE");
    auto* aug_cc_opt = cmd_augment->add_flag("--center-crop", aug_center_crop,
                                             "Center-crop to grid divisibility");

    // pair ------------------------------------------------------------------
    auto* cmd_pair = app.add_subcommand("pair", "Emit two augmented views per image");
    std::string pair_variant, pair_input, pair_out;
    std::vector<std::string> pair_params;
    bool pair_center_crop = false;
    auto* pair_variant_opt = cmd_pair->add_option("--variant", pair_variant, "Pair recipe");
    auto* pair_input_opt = cmd_pair->add_option("--input", pair_input, "Manifest CSV or image");
    auto* pair_out_opt = cmd_pair->add_option("--out", pair_out, "Output directory");
    cmd_pair->add_option("--param", pair_params, "Operation parameter KEY=VALUE");
    auto* pair_cc_opt = cmd_pair->add_flag("--center-crop", pair_center_crop,
                                           "Center-crop to grid divisibility");

    // permset ---------------------------------------------------------------
    auto* cmd_permset = app.add_subcommand("permset", "Generate a jigsaw permutation set");
    int ps_count = 100, ps_pool = 3000;
    std::string ps_out;
    auto* ps_count_opt = cmd_permset->add_option("--count", ps_count, "Set size");
    auto* ps_pool_opt =
        cmd_permset->add_option("--pool", ps_pool, "Candidates per step; 0 = exhaustive");
    cmd_permset->add_option("--out", ps_out, "Output JSON file (default stdout)");

    // jigsaw ----------------------------------------------------------------
    auto* cmd_jigsaw = app.add_subcommand("jigsaw", "Cut one image into labeled 3x3 tiles");
    std::string jig_image, jig_permset, jig_out;
    bool jig_center_crop = false;
    auto* jig_image_opt = cmd_jigsaw->add_option("--image", jig_image, "Input image");
    auto* jig_permset_opt =
        cmd_jigsaw->add_option("--permset", jig_permset, "Permutation set JSON");
    auto* jig_out_opt = cmd_jigsaw->add_option("--out", jig_out, "Output directory");
    auto* jig_cc_opt = cmd_jigsaw->add_flag("--center-crop", jig_center_crop,
                                            "Center-crop to divisibility by 3");

    // smartcrop ---------------------------------------------------------------
    auto* cmd_smartcrop = app.add_subcommand("smartcrop", "Locate the most detailed region");
    std::vector<std::string> sc_images;
    std::string sc_out, sc_config_path;
    cmd_smartcrop->add_option("images", sc_images, "Input image(s)");
    auto* sc_out_opt = cmd_smartcrop->add_option("--out", sc_out, "Output directory");
    cmd_smartcrop->add_option("--sc-config", sc_config_path, "Smartcrop constants JSON");

    // split -------------------------------------------------------------------
    auto* cmd_split = app.add_subcommand("split", "Stratified train/val split of a manifest");
    std::string sp_manifest, sp_out;
    double sp_fraction = 0.8;
    auto* sp_manifest_opt = cmd_split->add_option("--manifest", sp_manifest, "Manifest CSV");
    auto* sp_fraction_opt =
        cmd_split->add_option("--fraction", sp_fraction, "Train fraction (default 0.8)");
    auto* sp_out_opt = cmd_split->add_option("--out", sp_out, "Output manifest CSV");

    // class-weights -----------------------------------------------------------
    auto* cmd_weights = app.add_subcommand("class-weights", "Balanced class weights");
    std::string cw_manifest;
    auto* cw_manifest_opt = cmd_weights->add_option("--manifest", cw_manifest, "Manifest CSV");

    // metrics -----------------------------------------------------------------
    auto* cmd_metrics = app.add_subcommand("metrics", "Per-class precision/recall/F1");
    std::string mt_pairs, mt_json_out;
    auto* mt_pairs_opt =
        cmd_metrics->add_option("--pairs", mt_pairs, "CSV with header true,pred");
    cmd_metrics->add_option("--json-out", mt_json_out, "Also write the JSON report here");

    // ntxent ------------------------------------------------------------------
    auto* cmd_ntxent = app.add_subcommand("ntxent", "Contrastive batch loss");
    std::string nx_embeddings;
    double nx_tau = fg::kDefaultTau;
    auto* nx_embeddings_opt =
        cmd_ntxent->add_option("--embeddings", nx_embeddings, "CSV, pairs adjacent");
    auto* nx_tau_opt = cmd_ntxent->add_option("--tau", nx_tau, "Temperature (default 0.5)");

    // sr-loss -----------------------------------------------------------------
    auto* cmd_srloss = app.add_subcommand("sr-loss", "Super-resolution loss values");
    std::string sr_hr, sr_sr;
    int sr_factor = 4;
    double sr_adversarial = 0.0;
    bool sr_channel_mean = true, sr_feature_channel_mean = false;
    auto* sr_hr_opt = cmd_srloss->add_option("--hr", sr_hr, "Reference tensor CSV");
    auto* sr_sr_opt = cmd_srloss->add_option("--sr", sr_sr, "Reconstruction tensor CSV");
    auto* sr_factor_opt =
        cmd_srloss->add_option("--factor", sr_factor, "Upscaling factor r (default 4)");
    auto* sr_adv_opt = cmd_srloss->add_option("--adversarial", sr_adversarial,
                                              "Adversarial loss scalar (default 0)");
    auto* sr_cm_opt = cmd_srloss->add_flag("--channel-mean,!--no-channel-mean",
                                           sr_channel_mean,
                                           "Divide the pixel loss by C too (default on)");
    auto* sr_fcm_opt = cmd_srloss->add_flag(
        "--feature-channel-mean,!--no-feature-channel-mean", sr_feature_channel_mean,
        "Divide the feature loss by C too (default off)");

    // pixel-shuffle -------------------------------------------------------------
    auto* cmd_shuffle = app.add_subcommand("pixel-shuffle", "Periodic channel-to-space reshuffle");
    std::string px_input, px_out;
    int px_factor = 2;
    bool px_inverse = false;
    auto* px_input_opt = cmd_shuffle->add_option("--input", px_input, "Tensor CSV");
    cmd_shuffle->add_option("--out", px_out, "Output tensor CSV (default stdout)");
    auto* px_factor_opt =
        cmd_shuffle->add_option("--factor", px_factor, "Block size r (default 2)");
    cmd_shuffle->add_flag("--inverse", px_inverse, "Apply the inverse map");

    CLI11_PARSE(app, argc, argv);

    try {
        Settings s;
        if (!config_path.empty()) {
            s.config = read_json_file(config_path);
            if (!s.config.is_object())
                throw std::runtime_error("config file must hold a JSON object");
        }

        auto require = [&](const CLI::Option* opt, std::string& value, const std::string& key) {
            value = s.pick<std::string>(opt, value, key, "");
            if (value.empty())
                throw std::runtime_error("missing required option --" + key);
        };

        fg::PipelineConfig pipeline;
        pipeline.seed = s.pick<std::uint64_t>(seed_opt, seed, "seed", 0);
        pipeline.jobs = s.pick<int>(jobs_opt, jobs, "jobs", 1);
        const std::string resize = s.pick<std::string>(resize_opt, resize_spec, "resize", "");
        if (!resize.empty()) pipeline.resize = parse_resize(resize);

        if (cmd_augment->parsed()) {
            require(aug_op_opt, aug_op, "op");
            require(aug_input_opt, aug_input, "input");
            require(aug_out_opt, aug_out, "out");
            pipeline.operation = aug_op;
            pipeline.params = merge_params(s, aug_params);
            pipeline.center_crop =
                s.pick<bool>(aug_cc_opt, aug_center_crop, "center_crop", false);
            pipeline.input = aug_input;
            pipeline.output_dir = aug_out;
            const fg::RunReport report = fg::run(pipeline);
            print_item_log(report);
            std::cout << fg::run_report_to_json(report).dump(2) << "\n";
            return report.failed == 0 ? 0 : 1;
        }

        if (cmd_pair->parsed()) {
            require(pair_variant_opt, pair_variant, "variant");
            require(pair_input_opt, pair_input, "input");
            require(pair_out_opt, pair_out, "out");
            pipeline.params = merge_params(s, pair_params);
            pipeline.center_crop =
                s.pick<bool>(pair_cc_opt, pair_center_crop, "center_crop", false);
            pipeline.input = pair_input;
            pipeline.output_dir = pair_out;
            const fg::RunReport report = fg::pair_emit(pipeline, pair_variant);
            print_item_log(report);
            std::cout << fg::run_report_to_json(report).dump(2) << "\n";
            return report.failed == 0 ? 0 : 1;
        }

        if (cmd_permset->parsed()) {
            const int count = s.pick<int>(ps_count_opt, ps_count, "count", 100);
            const int pool = s.pick<int>(ps_pool_opt, ps_pool, "pool", 3000);
            fg::Rng rng(pipeline.seed);
            const fg::PermutationSet set = fg::generate_permutation_set(count, pool, rng);
            const std::string text = fg::permutation_set_to_json(set).dump(2) + "\n";
            if (ps_out.empty())
                std::cout << text;
            else
                write_text_file(text, ps_out);
            return 0;
        }

        if (cmd_jigsaw->parsed()) {
            require(jig_image_opt, jig_image, "image");
            require(jig_permset_opt, jig_permset, "permset");
            require(jig_out_opt, jig_out, "out");
            const fg::PermutationSet set =
                fg::permutation_set_from_json(read_json_file(jig_permset));
            fg::Image img = fg::load_image(jig_image);
            if (pipeline.resize) img = fg::resize(img, pipeline.resize->first,
                                                  pipeline.resize->second);
            if (s.pick<bool>(jig_cc_opt, jig_center_crop, "center_crop", false))
                img = fg::center_crop_divisible(img, 3);
            fg::Rng rng(pipeline.seed);
            const fg::JigsawSample sample = fg::make_jigsaw_sample(img, set, rng);
            std::filesystem::create_directories(jig_out);
            for (std::size_t i = 0; i < sample.tiles.size(); ++i)
                fg::save_image(sample.tiles[i], (std::filesystem::path(jig_out) /
                                                 ("tile_" + std::to_string(i) + ".png"))
                                                    .string());
            json label;
            label["label"] = sample.label;
            label["permutation"] = set.perms[static_cast<std::size_t>(sample.label)];
            write_text_file(label.dump(2) + "\n",
                            (std::filesystem::path(jig_out) / "label.json").string());
            std::cout << label.dump(2) << "\n";
            return 0;
        }

        if (cmd_smartcrop->parsed()) {
            if (sc_images.empty()) throw std::runtime_error("missing input image(s)");
            require(sc_out_opt, sc_out, "out");
            fg::SmartcropConfig cfg;
            if (!sc_config_path.empty())
                cfg = smartcrop_config_from_json(read_json_file(sc_config_path));
            std::filesystem::create_directories(sc_out);
            json all = json::array();
            for (const std::string& path : sc_images) {
                fg::Image img = fg::load_image(path);
                if (pipeline.resize)
                    img = fg::resize(img, pipeline.resize->first, pipeline.resize->second);
                const fg::CropCandidate crop = fg::smart_crop(img, cfg);
                json rect = {{"path", path},
                             {"x", crop.x},
                             {"y", crop.y},
                             {"side", crop.side},
                             {"score", crop.score}};
                const std::string stem = std::filesystem::path(path).stem().string();
                write_text_file(rect.dump(2) + "\n",
                                (std::filesystem::path(sc_out) / (stem + ".crop.json")).string());
                fg::save_image(fg::overlay_on_white(img, crop),
                               (std::filesystem::path(sc_out) / (stem + ".overlay.png")).string());
                all.push_back(std::move(rect));
            }
            std::cout << all.dump(2) << "\n";
            return 0;
        }

        if (cmd_split->parsed()) {
            require(sp_manifest_opt, sp_manifest, "manifest");
            require(sp_out_opt, sp_out, "out");
            const double fraction = s.pick<double>(sp_fraction_opt, sp_fraction, "fraction", 0.8);
            fg::Rng rng(pipeline.seed);
            const fg::Manifest tagged =
                fg::stratified_split(fg::read_manifest_csv(sp_manifest), fraction, rng);
            fg::write_manifest_csv(tagged, sp_out);
            std::map<std::string, std::pair<int, int>> per_class;
            int train = 0, val = 0;
            for (const fg::ManifestEntry& e : tagged.entries) {
                if (e.split == "train") {
                    ++train;
                    ++per_class[e.label].first;
                } else {
                    ++val;
                    ++per_class[e.label].second;
                }
            }
            json summary;
            summary["train"] = train;
            summary["val"] = val;
            auto& pc = summary["per_class"] = json::object();
            for (const auto& [label, counts] : per_class)
                pc[label] = {{"train", counts.first}, {"val", counts.second}};
            std::cout << summary.dump(2) << "\n";
            return 0;
        }

        if (cmd_weights->parsed()) {
            require(cw_manifest_opt, cw_manifest, "manifest");
            const auto weights = fg::class_weights(fg::read_manifest_csv(cw_manifest));
            json j = json::object();
            for (const auto& [label, w] : weights) j[label] = w;
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (cmd_metrics->parsed()) {
            require(mt_pairs_opt, mt_pairs, "pairs");
            const auto lines = read_lines(mt_pairs);
            if (lines.empty() || lines[0] != "true,pred")
                throw std::runtime_error("pairs file must start with header `true,pred`");
            std::vector<std::pair<std::string, std::string>> pairs;
            for (std::size_t i = 1; i < lines.size(); ++i) {
                const auto fields = split_fields(lines[i]);
                if (fields.size() != 2 || fields[0].empty() || fields[1].empty())
                    throw std::runtime_error("pairs line " + std::to_string(i + 1) +
                                             ": expected `true,pred`");
                pairs.emplace_back(fields[0], fields[1]);
            }
            const fg::EvalReport report = fg::evaluate(pairs);
            const json j = fg::eval_report_to_json(report);
            std::cout << j.dump(2) << "\n";
            std::cerr << fg::eval_report_table(report);
            if (!mt_json_out.empty()) write_text_file(j.dump(2) + "\n", mt_json_out);
            return 0;
        }

        if (cmd_ntxent->parsed()) {
            require(nx_embeddings_opt, nx_embeddings, "embeddings");
            const double tau = s.pick<double>(nx_tau_opt, nx_tau, "tau", fg::kDefaultTau);
            const fg::EmbeddingBatch batch = read_embeddings_csv(nx_embeddings);
            json j;
            j["tau"] = tau;
            j["batch_loss"] = fg::nt_xent_batch_loss(batch, tau);
            auto& pairs = j["pair_losses"] = json::array();
            for (int m = 0; m < batch.pair_count(); ++m) {
                const double lab = fg::nt_xent_pair_loss(batch, 2 * m, 2 * m + 1, tau);
                const double lba = fg::nt_xent_pair_loss(batch, 2 * m + 1, 2 * m, tau);
                pairs.push_back(
                    {{"l_ab", lab}, {"l_ba", lba}, {"mean", 0.5 * (lab + lba)}});
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (cmd_srloss->parsed()) {
            require(sr_hr_opt, sr_hr, "hr");
            require(sr_sr_opt, sr_sr, "sr");
            const int factor = s.pick<int>(sr_factor_opt, sr_factor, "factor", 4);
            const double adversarial =
                s.pick<double>(sr_adv_opt, sr_adversarial, "adversarial", 0.0);
            const bool channel_mean =
                s.pick<bool>(sr_cm_opt, sr_channel_mean, "channel_mean", true);
            const bool feature_channel_mean = s.pick<bool>(
                sr_fcm_opt, sr_feature_channel_mean, "feature_channel_mean", false);
            const fg::Tensor3 hr = read_tensor_csv(sr_hr);
            const fg::Tensor3 sr = read_tensor_csv(sr_sr);
            if (factor < 1 || hr.width % factor != 0 || hr.height % factor != 0)
                throw std::runtime_error("tensor dims must be divisible by --factor");
            const double content = fg::mse_content_loss(hr, sr, factor, hr.width / factor,
                                                        hr.height / factor, channel_mean);
            json j;
            j["mse_content"] = content;
            j["feature_content"] = fg::feature_content_loss(hr, sr, feature_channel_mean);
            j["adversarial"] = adversarial;
            j["perceptual"] = fg::perceptual_loss(content, adversarial);
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (cmd_shuffle->parsed()) {
            require(px_input_opt, px_input, "input");
            const int factor = s.pick<int>(px_factor_opt, px_factor, "factor", 2);
            const fg::Tensor3 in = read_tensor_csv(px_input);
            const fg::Tensor3 out =
                px_inverse ? fg::pixel_unshuffle(in, factor) : fg::pixel_shuffle(in, factor);
            const std::string text = tensor_to_csv(out);
            if (px_out.empty())
                std::cout << text;
            else
                write_text_file(text, px_out);
            return 0;
        }

        throw std::runtime_error("no subcommand selected");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
