#include "fg/smartcrop.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fg {

namespace {

Eigen::ArrayXXd luminance(const Image& img, const SmartcropConfig& cfg) {
    Eigen::ArrayXXd y(img.height, img.width);
    for (int r = 0; r < img.height; ++r)
        for (int c = 0; c < img.width; ++c)
            y(r, c) = img.channels == 1
                          ? img.at(c, r, 0)
                          : cfg.luma_r * img.at(c, r, 0) + cfg.luma_g * img.at(c, r, 1) +
                                cfg.luma_b * img.at(c, r, 2);
    return y;
}

} // namespace

Eigen::ArrayXXd laplace_edges(const Image& img, const SmartcropConfig& cfg) {
    validate(img);
    const Eigen::ArrayXXd y = luminance(img, cfg);
    const Eigen::Index h = y.rows(), w = y.cols();

    // Replicated-border padding, then the 4-neighbor Laplacian as shifted
    // block expressions.
    Eigen::ArrayXXd pad(h + 2, w + 2);
    pad.block(1, 1, h, w) = y;
    pad.block(0, 1, 1, w) = y.row(0);
    pad.block(h + 1, 1, 1, w) = y.row(h - 1);
    pad.col(0) = pad.col(1);
    pad.col(w + 1) = pad.col(w);

    // Summed center-minus-neighbor differences cancel exactly on constant
    // regions, keeping flat images at a true zero score.
    return ((y - pad.block(0, 1, h, w)) + (y - pad.block(2, 1, h, w)) +
            (y - pad.block(1, 0, h, w)) + (y - pad.block(1, 2, h, w)))
        .abs();
}

Eigen::ArrayXXd saturation_boost(const Image& img, const SmartcropConfig& cfg) {
    validate(img);
    Eigen::ArrayXXd out = Eigen::ArrayXXd::Zero(img.height, img.width);
    if (img.channels == 1) return out;
    for (int r = 0; r < img.height; ++r)
        for (int c = 0; c < img.width; ++c) {
            const double v0 = img.at(c, r, 0), v1 = img.at(c, r, 1), v2 = img.at(c, r, 2);
            const double s = std::max({v0, v1, v2}) - std::min({v0, v1, v2});
            out(r, c) = s > cfg.saturation_threshold ? s : 0.0;
        }
    return out;
}

SaliencyMaps saliency_maps(const Image& img, const SmartcropConfig& cfg) {
    return SaliencyMaps{laplace_edges(img, cfg), saturation_boost(img, cfg)};
}

std::vector<CropCandidate> candidate_crops(int width, int height,
                                           const SmartcropConfig& cfg) {
    const int short_side = std::min(width, height);
    if (short_side < cfg.min_dimension)
        throw std::invalid_argument("image smaller than " +
                                    std::to_string(cfg.min_dimension) + " px");
    std::vector<CropCandidate> out;
    for (double scale : cfg.scales) {
        const int side = static_cast<int>(std::lround(scale * short_side));
        if (side < 1 || side > short_side) continue;
        const int stride = std::max(cfg.stride_min, side / cfg.stride_divisor);
        for (int y = 0; y + side <= height; y += stride)
            for (int x = 0; x + side <= width; x += stride)
                out.push_back(CropCandidate{x, y, side, 0.0});
    }
    return out;
}

double score_crop(const CropCandidate& c, const SaliencyMaps& maps,
                  const SmartcropConfig& cfg) {
    if (c.side < 1 || c.x < 0 || c.y < 0 || c.x + c.side > maps.edge.cols() ||
        c.y + c.side > maps.edge.rows())
        throw std::invalid_argument("crop outside saliency maps");
    double sum = 0.0;
    for (int py = c.y; py < c.y + c.side; ++py)
        for (int px = c.x; px < c.x + c.side; ++px) {
            const double u = 2.0 * (px - c.x + 0.5) / c.side - 1.0;
            const double v = 2.0 * (py - c.y + 0.5) / c.side - 1.0;
            const double m = std::max(std::abs(u), std::abs(v));
            const double w = std::max(0.0, 1.0 - m * m);
            sum += (maps.edge(py, px) + cfg.saturation_weight * maps.saturation_boost(py, px)) * w;
        }
    return sum / (static_cast<double>(c.side) * c.side);
}

CropCandidate smart_crop(const Image& img, const SmartcropConfig& cfg) {
    const SaliencyMaps maps = saliency_maps(img, cfg);
    std::vector<CropCandidate> cands = candidate_crops(img.width, img.height, cfg);
    CropCandidate best;
    bool have = false;
    for (CropCandidate& c : cands) {
        c.score = score_crop(c, maps, cfg);
        const bool wins =
            !have || c.score > best.score ||
            (c.score == best.score &&
             (c.side > best.side ||
              (c.side == best.side && (c.y < best.y || (c.y == best.y && c.x < best.x)))));
        if (wins) {
            best = c;
            have = true;
        }
    }
    return best;
}

Image overlay_on_white(const Image& img, const CropCandidate& crop) {
    validate(img);
    if (crop.side < 1 || crop.x < 0 || crop.y < 0 || crop.x + crop.side > img.width ||
        crop.y + crop.side > img.height)
        throw std::invalid_argument("crop outside image");
    Image out(img.width, img.height, img.channels, 1.0);
    for (int y = crop.y; y < crop.y + crop.side; ++y)
        for (int x = crop.x; x < crop.x + crop.side; ++x)
            for (int c = 0; c < img.channels; ++c) out.at(x, y, c) = img.at(x, y, c);
    return out;
}

} // namespace fg
