#pragma once

#include <vector>

#include "fg/grid.hpp"
#include "fg/image.hpp"
#include "fg/rng.hpp"

namespace fg {

struct GammaParams {
    int level_min = 50;
    int level_max = 250;
};

struct DropoutParams {
    int hole_count = 8;
    int side_min = 10;
    int side_max = 25;
};

struct PatchSwapParams {
    int patch_side = 200;
};

struct DclParams {
    int n = 7;  // grid order
    int k = 2;  // neighborhood radius, 1 <= k <= n
};

/// Draws an integer level L in [level_min, level_max] and maps every
/// pixel p to p^(L/100). L = 100 is the identity.
Image gamma_transform(const Image& img, const GammaParams& params, Rng& rng);

/// Fills hole_count axis-aligned squares with 0.0. Each square's side is
/// drawn in [side_min, side_max] and its top-left corner uniformly among
/// positions keeping it inside the image.
Image coarse_dropout(const Image& img, const DropoutParams& params, Rng& rng);

/// Exchanges the contents of two disjoint patch_side x patch_side squares.
/// The second square is resampled until disjoint from the first; throws
/// after 1000 failed attempts.
Image patch_swap(const Image& img, const PatchSwapParams& params, Rng& rng);

struct JigsawResult {
    Image image;
    GridPermutation perm;
};

/// Shuffles the n x n cell grid by a Fisher-Yates permutation.
JigsawResult random_jigsaw(const Image& img, int n, Rng& rng);

/// Neighborhood-constrained shuffle plan: a per-row pass followed by a
/// per-column pass on the row-shuffled grid. All permutations use the
/// mapping[dst] = src convention and satisfy |mapping[i] - i| < 2k.
struct DclPlan {
    int n = 1;
    int k = 1;
    std::vector<std::vector<int>> row_perms;  // [row j][dst col] = src col
    std::vector<std::vector<int>> col_perms;  // [col i][dst row] = src row
    GridPermutation composite;
};

/// Builds the shuffle plan alone. Row j's keys are q_i = i + r with
/// r ~ U(-k, k), stable-sorted; then the same per column. Draw order:
/// rows 0..n-1 (n reals each), then columns 0..n-1.
DclPlan dcl_plan(int n, int k, Rng& rng);

/// Applies the DCL plan's composite permutation to the image grid.
JigsawResult dcl_jigsaw(const Image& img, const DclParams& params, Rng& rng);

} // namespace fg
