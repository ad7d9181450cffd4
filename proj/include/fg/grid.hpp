#pragma once

#include <vector>

#include "fg/image.hpp"

namespace fg {

/// Uniform n x n tiling of an image.
struct RegionGrid {
    int n = 1;
    int cell_width = 0;
    int cell_height = 0;
};

/// Bijection on the n^2 cells of a RegionGrid, in row-major cell order.
/// Convention: output cell i holds input cell mapping[i].
struct GridPermutation {
    int n = 1;
    std::vector<int> mapping;
};

GridPermutation identity_permutation(int n);

/// Inverse under the mapping[dst] = src convention.
GridPermutation invert(const GridPermutation& perm);

/// True iff mapping is a bijection on [0, mapping.size()).
bool is_bijection(const std::vector<int>& mapping);

/// Throws std::invalid_argument if a dimension is not divisible by n,
/// naming the offending dimension.
RegionGrid partition(const Image& img, int n);

/// Rearranges the grid cells of img according to perm. The pixel multiset
/// is preserved exactly.
Image apply_grid_permutation(const Image& img, const GridPermutation& perm);

} // namespace fg
