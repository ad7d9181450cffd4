#include "fg/image.hpp"

#include <stdexcept>
#include <string>

namespace fg {

Image::Image(int w, int h, int c, double fill)
    : width(w), height(h), channels(c),
      data(static_cast<std::size_t>(w) * h * c, fill) {
    validate(*this);
}

void validate(const Image& img) {
    if (img.width <= 0 || img.height <= 0)
        throw std::invalid_argument("image has zero dimension");
    if (img.channels != 1 && img.channels != 3)
        throw std::invalid_argument("image must have 1 or 3 channels, got " +
                                    std::to_string(img.channels));
    const auto expected =
        static_cast<std::size_t>(img.width) * img.height * img.channels;
    if (img.data.size() != expected)
        throw std::invalid_argument("image data size does not match dimensions");
}

Image center_crop_divisible(const Image& img, int n) {
    validate(img);
    if (n < 1) throw std::invalid_argument("grid order must be >= 1");
    const int w = (img.width / n) * n;
    const int h = (img.height / n) * n;
    if (w == 0 || h == 0)
        throw std::invalid_argument("image smaller than one grid cell");
    if (w == img.width && h == img.height) return img;
    const int x0 = (img.width - w) / 2;
    const int y0 = (img.height - h) / 2;
    Image out(w, h, img.channels);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            for (int c = 0; c < img.channels; ++c)
                out.at(x, y, c) = img.at(x0 + x, y0 + y, c);
    return out;
}

} // namespace fg
