#include "fg/augment.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fg {

namespace {

constexpr int kPatchSwapAttempts = 1000;

bool squares_disjoint(int x1, int y1, int x2, int y2, int s) {
    return x1 + s <= x2 || x2 + s <= x1 || y1 + s <= y2 || y2 + s <= y1;
}

// Stable argsort: out[dst] = src index, sorted by ascending key.
std::vector<int> stable_argsort(const std::vector<double>& keys) {
    std::vector<int> idx(keys.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return keys[a] < keys[b]; });
    return idx;
}

} // namespace

Image gamma_transform(const Image& img, const GammaParams& params, Rng& rng) {
    validate(img);
    if (params.level_min < 1 || params.level_max > 1000 ||
        params.level_min > params.level_max)
        throw std::invalid_argument("gamma levels must satisfy 1 <= min <= max <= 1000");
    const auto level = rng.uniform_int(params.level_min, params.level_max);
    const double gamma = static_cast<double>(level) / 100.0;
    Image out = img;
    if (level == 100) return out;
    for (double& p : out.data) p = std::pow(p, gamma);
    return out;
}

Image coarse_dropout(const Image& img, const DropoutParams& params, Rng& rng) {
    validate(img);
    if (params.hole_count < 1)
        throw std::invalid_argument("hole_count must be >= 1");
    if (params.side_min < 1 || params.side_min > params.side_max)
        throw std::invalid_argument("dropout sides must satisfy 0 < min <= max");
    if (params.side_max > std::min(img.width, img.height))
        throw std::invalid_argument("dropout side_max " + std::to_string(params.side_max) +
                                    " exceeds image dimension");
    Image out = img;
    for (int h = 0; h < params.hole_count; ++h) {
        const int side = static_cast<int>(rng.uniform_int(params.side_min, params.side_max));
        const int x0 = static_cast<int>(rng.uniform_int(0, img.width - side));
        const int y0 = static_cast<int>(rng.uniform_int(0, img.height - side));
        for (int y = y0; y < y0 + side; ++y)
            for (int x = x0; x < x0 + side; ++x)
                for (int c = 0; c < img.channels; ++c) out.at(x, y, c) = 0.0;
    }
    return out;
}

Image patch_swap(const Image& img, const PatchSwapParams& params, Rng& rng) {
    validate(img);
    const int s = params.patch_side;
    if (s < 1) throw std::invalid_argument("patch_side must be >= 1");
    if (s > img.width || s > img.height)
        throw std::invalid_argument("image too small for patch side " + std::to_string(s));
    if (img.width < 2 * s && img.height < 2 * s)
        throw std::invalid_argument("image too small to place two disjoint patches of side " +
                                    std::to_string(s));

    const int x1 = static_cast<int>(rng.uniform_int(0, img.width - s));
    const int y1 = static_cast<int>(rng.uniform_int(0, img.height - s));
    int x2 = 0, y2 = 0;
    bool found = false;
    for (int attempt = 0; attempt < kPatchSwapAttempts; ++attempt) {
        x2 = static_cast<int>(rng.uniform_int(0, img.width - s));
        y2 = static_cast<int>(rng.uniform_int(0, img.height - s));
        if (squares_disjoint(x1, y1, x2, y2, s)) {
            found = true;
            break;
        }
    }
    if (!found)
        throw std::runtime_error("patch placement rejection budget exhausted");

    Image out = img;
    for (int y = 0; y < s; ++y)
        for (int x = 0; x < s; ++x)
            for (int c = 0; c < img.channels; ++c)
                std::swap(out.at(x1 + x, y1 + y, c), out.at(x2 + x, y2 + y, c));
    return out;
}

JigsawResult random_jigsaw(const Image& img, int n, Rng& rng) {
    partition(img, n);  // validates divisibility
    GridPermutation perm = identity_permutation(n);
    for (int i = n * n - 1; i > 0; --i) {
        const int j = static_cast<int>(rng.uniform_int(0, i));
        std::swap(perm.mapping[i], perm.mapping[j]);
    }
    return JigsawResult{apply_grid_permutation(img, perm), std::move(perm)};
}

DclPlan dcl_plan(int n, int k, Rng& rng) {
    if (n < 1) throw std::invalid_argument("grid order must be >= 1");
    if (k < 1 || k > n)
        throw std::invalid_argument("neighborhood radius k must satisfy 1 <= k <= n");

    DclPlan plan;
    plan.n = n;
    plan.k = k;
    const double kk = static_cast<double>(k);

    auto shuffled_axis = [&]() {
        std::vector<double> q(n);
        for (int i = 0; i < n; ++i) q[i] = i + rng.uniform(-kk, kk);
        return stable_argsort(q);
    };
    plan.row_perms.reserve(n);
    for (int j = 0; j < n; ++j) plan.row_perms.push_back(shuffled_axis());
    plan.col_perms.reserve(n);
    for (int i = 0; i < n; ++i) plan.col_perms.push_back(shuffled_axis());

    // Row pass then column pass, composed into one cell mapping.
    plan.composite.n = n;
    plan.composite.mapping.resize(static_cast<std::size_t>(n) * n);
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) {
            const int src_y = plan.col_perms[x][y];
            const int src_x = plan.row_perms[src_y][x];
            plan.composite.mapping[static_cast<std::size_t>(y) * n + x] = src_y * n + src_x;
        }
    return plan;
}

JigsawResult dcl_jigsaw(const Image& img, const DclParams& params, Rng& rng) {
    partition(img, params.n);
    DclPlan plan = dcl_plan(params.n, params.k, rng);
    return JigsawResult{apply_grid_permutation(img, plan.composite),
                        std::move(plan.composite)};
}

} // namespace fg
