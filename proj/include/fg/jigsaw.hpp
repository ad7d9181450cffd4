#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "fg/image.hpp"
#include "fg/rng.hpp"

#include <nlohmann/json_fwd.hpp>

namespace fg {

using TilePermutation = std::array<int, 9>;

/// Count of positions where two tile permutations differ, in [0, 9].
int hamming(const TilePermutation& a, const TilePermutation& b);

/// Distinct length-9 permutations with their pairwise Hamming statistics.
struct PermutationSet {
    std::vector<TilePermutation> perms;
    Eigen::MatrixXi pairwise_hamming;  // symmetric, zero diagonal
    double mean_hamming = 0.0;         // over unordered distinct pairs
    int min_hamming = 0;
};

/// Greedy construction: start from one random permutation, then repeatedly
/// add the candidate with the largest minimum Hamming distance to the set,
/// ties broken by the largest mean, then by enumeration order.
/// candidate_pool = 0 scans all 9! permutations per step; otherwise each
/// step draws candidate_pool random candidates.
PermutationSet generate_permutation_set(int count, int candidate_pool, Rng& rng);

/// 3x3 tiles of one image in shuffled order: tiles[i] is the source tile
/// at cell perms[label][i] (row-major cells).
struct JigsawSample {
    std::vector<Image> tiles;
    int label = 0;
};

/// Draws a label uniformly and cuts the image accordingly. Requires both
/// dimensions divisible by 3.
JigsawSample make_jigsaw_sample(const Image& img, const PermutationSet& set, Rng& rng);

/// Puts the tiles back via the inverse permutation; pixel-exact.
Image reassemble_jigsaw(const JigsawSample& sample, const PermutationSet& set);

nlohmann::json permutation_set_to_json(const PermutationSet& set);
PermutationSet permutation_set_from_json(const nlohmann::json& j);

} // namespace fg
