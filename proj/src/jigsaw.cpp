#include "fg/jigsaw.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace fg {

namespace {

constexpr long kNineFactorial = 362880;

TilePermutation random_tile_permutation(Rng& rng) {
    TilePermutation p;
    std::iota(p.begin(), p.end(), 0);
    for (int i = 8; i > 0; --i) {
        const int j = static_cast<int>(rng.uniform_int(0, i));
        std::swap(p[i], p[j]);
    }
    return p;
}

void compute_statistics(PermutationSet& set) {
    const int m = static_cast<int>(set.perms.size());
    set.pairwise_hamming = Eigen::MatrixXi::Zero(m, m);
    long sum = 0;
    int min_h = 9;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const int h = hamming(set.perms[i], set.perms[j]);
            set.pairwise_hamming(i, j) = h;
            set.pairwise_hamming(j, i) = h;
            sum += h;
            min_h = std::min(min_h, h);
        }
    const long pairs = static_cast<long>(m) * (m - 1) / 2;
    set.mean_hamming = pairs > 0 ? static_cast<double>(sum) / static_cast<double>(pairs) : 0.0;
    set.min_hamming = pairs > 0 ? min_h : 0;
}

} // namespace

int hamming(const TilePermutation& a, const TilePermutation& b) {
    int h = 0;
    for (int i = 0; i < 9; ++i) h += a[i] != b[i];
    return h;
}

PermutationSet generate_permutation_set(int count, int candidate_pool, Rng& rng) {
    if (count < 2) throw std::invalid_argument("permutation set size must be >= 2");
    if (count > kNineFactorial)
        throw std::invalid_argument("permutation set size exceeds 9! = 362880");
    if (candidate_pool < 0) throw std::invalid_argument("candidate_pool must be >= 0");

    PermutationSet set;
    set.perms.reserve(count);
    set.perms.push_back(random_tile_permutation(rng));

    while (static_cast<int>(set.perms.size()) < count) {
        TilePermutation best{};
        int best_min = -1;
        long best_sum = -1;

        auto consider = [&](const TilePermutation& cand) {
            int dmin = 9;
            long dsum = 0;
            for (const TilePermutation& p : set.perms) {
                const int h = hamming(cand, p);
                dsum += h;
                if (h < dmin) {
                    dmin = h;
                    if (dmin < best_min) return;  // cannot win
                }
            }
            if (dmin < 1) return;  // duplicate of a chosen permutation
            if (dmin > best_min || (dmin == best_min && dsum > best_sum)) {
                best = cand;
                best_min = dmin;
                best_sum = dsum;
            }
        };

        if (candidate_pool == 0) {
            TilePermutation cand;
            std::iota(cand.begin(), cand.end(), 0);
            do {
                consider(cand);
            } while (std::next_permutation(cand.begin(), cand.end()));
        } else {
            for (int c = 0; c < candidate_pool; ++c) consider(random_tile_permutation(rng));
        }
        if (best_min < 1)
            throw std::runtime_error("no distinct candidate permutation found; "
                                     "increase candidate_pool");
        set.perms.push_back(best);
    }
    compute_statistics(set);
    return set;
}

JigsawSample make_jigsaw_sample(const Image& img, const PermutationSet& set, Rng& rng) {
    validate(img);
    if (set.perms.empty()) throw std::invalid_argument("empty permutation set");
    if (img.width % 3 != 0)
        throw std::invalid_argument("width " + std::to_string(img.width) +
                                    " not divisible by grid order 3");
    if (img.height % 3 != 0)
        throw std::invalid_argument("height " + std::to_string(img.height) +
                                    " not divisible by grid order 3");

    JigsawSample sample;
    sample.label = static_cast<int>(rng.uniform_int(0, static_cast<int>(set.perms.size()) - 1));
    const TilePermutation& perm = set.perms[sample.label];
    const int cw = img.width / 3, ch = img.height / 3;
    sample.tiles.reserve(9);
    for (int i = 0; i < 9; ++i) {
        const int src = perm[i];
        const int sx0 = (src % 3) * cw, sy0 = (src / 3) * ch;
        Image tile(cw, ch, img.channels);
        for (int y = 0; y < ch; ++y)
            for (int x = 0; x < cw; ++x)
                for (int c = 0; c < img.channels; ++c)
                    tile.at(x, y, c) = img.at(sx0 + x, sy0 + y, c);
        sample.tiles.push_back(std::move(tile));
    }
    return sample;
}

Image reassemble_jigsaw(const JigsawSample& sample, const PermutationSet& set) {
    if (sample.tiles.size() != 9) throw std::invalid_argument("expected 9 tiles");
    if (sample.label < 0 || sample.label >= static_cast<int>(set.perms.size()))
        throw std::invalid_argument("label out of range");
    const TilePermutation& perm = set.perms[sample.label];
    const Image& t0 = sample.tiles[0];
    Image out(t0.width * 3, t0.height * 3, t0.channels);
    for (int i = 0; i < 9; ++i) {
        const Image& tile = sample.tiles[i];
        if (tile.width != t0.width || tile.height != t0.height ||
            tile.channels != t0.channels)
            throw std::invalid_argument("tiles have mismatched shapes");
        const int dst = perm[i];
        const int dx0 = (dst % 3) * t0.width, dy0 = (dst / 3) * t0.height;
        for (int y = 0; y < t0.height; ++y)
            for (int x = 0; x < t0.width; ++x)
                for (int c = 0; c < t0.channels; ++c)
                    out.at(dx0 + x, dy0 + y, c) = tile.at(x, y, c);
    }
    return out;
}

nlohmann::json permutation_set_to_json(const PermutationSet& set) {
    nlohmann::json j;
    j["perms"] = set.perms;
    j["mean_hamming"] = set.mean_hamming;
    j["min_hamming"] = set.min_hamming;
    auto& m = j["pairwise_hamming"] = nlohmann::json::array();
    for (Eigen::Index r = 0; r < set.pairwise_hamming.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < set.pairwise_hamming.cols(); ++c)
            row.push_back(set.pairwise_hamming(r, c));
        m.push_back(std::move(row));
    }
    return j;
}

PermutationSet permutation_set_from_json(const nlohmann::json& j) {
    PermutationSet set;
    std::set<TilePermutation> seen;
    for (const auto& row : j.at("perms")) {
        TilePermutation p = row.get<TilePermutation>();
        TilePermutation sorted = p;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < 9; ++i)
            if (sorted[i] != i)
                throw std::invalid_argument("permutation set entry is not a bijection on [0,9)");
        if (!seen.insert(p).second)
            throw std::invalid_argument("permutation set entries must be distinct");
        set.perms.push_back(p);
    }
    if (set.perms.empty()) throw std::invalid_argument("empty permutation set");
    compute_statistics(set);
    return set;
}

} // namespace fg
