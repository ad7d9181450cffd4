#pragma once

#include <cstddef>
#include <vector>

namespace fg {

/// H x W x C pixel array: row-major, top-left origin, channel-interleaved.
/// Intensities live in [0,1]; 8-bit values exist only at the file boundary.
struct Image {
    int width = 0;
    int height = 0;
    int channels = 0;          // 1 (gray) or 3 (RGB)
    std::vector<double> data;  // size = width * height * channels

    Image() = default;
    Image(int w, int h, int c, double fill = 0.0);

    double& at(int x, int y, int c) {
        return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }
    double at(int x, int y, int c) const {
        return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }

    bool same_shape(const Image& o) const {
        return width == o.width && height == o.height && channels == o.channels;
    }
};

/// Throws std::invalid_argument unless the image has positive dimensions,
/// 1 or 3 channels, and a correctly sized data vector.
void validate(const Image& img);

/// Center crop to the largest width/height divisible by n.
Image center_crop_divisible(const Image& img, int n);

} // namespace fg
