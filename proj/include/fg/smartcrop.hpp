#pragma once

#include <Eigen/Dense>
#include <vector>

#include "fg/image.hpp"

namespace fg {

/// Square crop candidate with its importance score.
struct CropCandidate {
    int x = 0;
    int y = 0;
    int side = 0;
    double score = 0.0;
};

/// All smartcrop constants in one place; every field may be overridden
/// through the CLI's JSON config.
struct SmartcropConfig {
    double luma_r = 0.299;
    double luma_g = 0.587;
    double luma_b = 0.114;
    double saturation_threshold = 0.1;
    double saturation_weight = 0.3;
    std::vector<double> scales = {1.0, 0.9, 0.8, 0.7, 0.6, 0.5};
    int stride_min = 8;
    int stride_divisor = 8;
    int min_dimension = 64;
};

/// Per-pixel saliency, H rows x W cols.
struct SaliencyMaps {
    Eigen::ArrayXXd edge;
    Eigen::ArrayXXd saturation_boost;
};

/// |Laplacian| of the luminance plane, kernel [[0,-1,0],[-1,4,-1],[0,-1,0]],
/// clamp-to-edge borders.
Eigen::ArrayXXd laplace_edges(const Image& img, const SmartcropConfig& cfg = {});

/// Per-pixel chroma s = max(R,G,B) - min(R,G,B), zeroed below the
/// threshold. Grayscale input yields an all-zero map.
Eigen::ArrayXXd saturation_boost(const Image& img, const SmartcropConfig& cfg = {});

SaliencyMaps saliency_maps(const Image& img, const SmartcropConfig& cfg = {});

/// Sliding-window square candidates at sides round(scale * min(W, H)),
/// stride max(stride_min, side / stride_divisor) per axis.
std::vector<CropCandidate> candidate_crops(int width, int height,
                                           const SmartcropConfig& cfg = {});

/// Center-weighted importance: sum of (edge + w_sat * saturation) times
/// w(u,v) = max(0, 1 - max(|u|,|v|)^2) over the crop, divided by side^2.
double score_crop(const CropCandidate& c, const SaliencyMaps& maps,
                  const SmartcropConfig& cfg = {});

/// Highest-scoring candidate; ties broken by larger side, then smaller y,
/// then smaller x. Deterministic.
CropCandidate smart_crop(const Image& img, const SmartcropConfig& cfg = {});

/// Keeps the crop rectangle in place and paints everything else white.
Image overlay_on_white(const Image& img, const CropCandidate& crop);

} // namespace fg
