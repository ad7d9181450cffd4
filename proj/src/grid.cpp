#include "fg/grid.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace fg {

GridPermutation identity_permutation(int n) {
    if (n < 1) throw std::invalid_argument("grid order must be >= 1");
    GridPermutation p;
    p.n = n;
    p.mapping.resize(static_cast<std::size_t>(n) * n);
    std::iota(p.mapping.begin(), p.mapping.end(), 0);
    return p;
}

GridPermutation invert(const GridPermutation& perm) {
    if (!is_bijection(perm.mapping))
        throw std::invalid_argument("grid permutation is not a bijection");
    GridPermutation inv;
    inv.n = perm.n;
    inv.mapping.resize(perm.mapping.size());
    for (std::size_t i = 0; i < perm.mapping.size(); ++i)
        inv.mapping[perm.mapping[i]] = static_cast<int>(i);
    return inv;
}

bool is_bijection(const std::vector<int>& mapping) {
    std::vector<bool> seen(mapping.size(), false);
    for (int v : mapping) {
        if (v < 0 || static_cast<std::size_t>(v) >= mapping.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

RegionGrid partition(const Image& img, int n) {
    validate(img);
    if (n < 1) throw std::invalid_argument("grid order must be >= 1");
    if (img.width % n != 0)
        throw std::invalid_argument("width " + std::to_string(img.width) +
                                    " not divisible by grid order " + std::to_string(n));
    if (img.height % n != 0)
        throw std::invalid_argument("height " + std::to_string(img.height) +
                                    " not divisible by grid order " + std::to_string(n));
    return RegionGrid{n, img.width / n, img.height / n};
}

Image apply_grid_permutation(const Image& img, const GridPermutation& perm) {
    const RegionGrid grid = partition(img, perm.n);
    if (perm.mapping.size() != static_cast<std::size_t>(perm.n) * perm.n ||
        !is_bijection(perm.mapping))
        throw std::invalid_argument("grid permutation is not a bijection");

    Image out(img.width, img.height, img.channels);
    const int n = perm.n;
    for (int dst = 0; dst < n * n; ++dst) {
        const int src = perm.mapping[dst];
        const int dx0 = (dst % n) * grid.cell_width;
        const int dy0 = (dst / n) * grid.cell_height;
        const int sx0 = (src % n) * grid.cell_width;
        const int sy0 = (src / n) * grid.cell_height;
        for (int y = 0; y < grid.cell_height; ++y)
            for (int x = 0; x < grid.cell_width; ++x)
                for (int c = 0; c < img.channels; ++c)
                    out.at(dx0 + x, dy0 + y, c) = img.at(sx0 + x, sy0 + y, c);
    }
    return out;
}

} // namespace fg
