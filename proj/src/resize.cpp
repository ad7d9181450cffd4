#include "fg/resize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace fg {

namespace {

// Catmull-Rom cubic (a = -0.5). Unit support 2, interpolates linears exactly.
double cubic_weight(double t) {
    constexpr double a = -0.5;
    t = std::abs(t);
    if (t < 1.0) return ((a + 2.0) * t - (a + 3.0)) * t * t + 1.0;
    if (t < 2.0) return ((a * t - 5.0 * a) * t + 8.0 * a) * t - 4.0 * a;
    return 0.0;
}

double linear_weight(double t) {
    t = std::abs(t);
    return t < 1.0 ? 1.0 - t : 0.0;
}

struct Tap {
    int first;                    // leftmost source index before clamping
    std::vector<double> weights;  // one per source offset
};

// Center-aligned sample positions: src = (dst + 0.5) * in/out - 0.5.
std::vector<Tap> build_taps(int in_size, int out_size, bool cubic) {
    const double scale = static_cast<double>(in_size) / out_size;
    const int radius = cubic ? 2 : 1;
    std::vector<Tap> taps(out_size);
    for (int d = 0; d < out_size; ++d) {
        const double src = (d + 0.5) * scale - 0.5;
        const int base = static_cast<int>(std::floor(src));
        Tap tap;
        tap.first = base - radius + 1;
        tap.weights.resize(2 * radius);
        for (int i = 0; i < 2 * radius; ++i) {
            const double t = src - (tap.first + i);
            tap.weights[i] = cubic ? cubic_weight(t) : linear_weight(t);
        }
        taps[d] = std::move(tap);
    }
    return taps;
}

// One separable pass along x (horizontal = true) or y.
Image resample_axis(const Image& img, int out_size, bool horizontal, bool cubic) {
    const int in_size = horizontal ? img.width : img.height;
    if (out_size == in_size) return img;
    const auto taps = build_taps(in_size, out_size, cubic);

    Image out(horizontal ? out_size : img.width, horizontal ? img.height : out_size,
              img.channels);
    const int other = horizontal ? img.height : img.width;
    for (int o = 0; o < other; ++o)
        for (int d = 0; d < out_size; ++d) {
            const Tap& tap = taps[d];
            for (int c = 0; c < img.channels; ++c) {
                double acc = 0.0;
                for (std::size_t i = 0; i < tap.weights.size(); ++i) {
                    const int s = std::clamp(tap.first + static_cast<int>(i), 0, in_size - 1);
                    acc += tap.weights[i] *
                           (horizontal ? img.at(s, o, c) : img.at(o, s, c));
                }
                (horizontal ? out.at(d, o, c) : out.at(o, d, c)) = acc;
            }
        }
    return out;
}

void clamp_unit(Image& img) {
    for (double& v : img.data) v = std::clamp(v, 0.0, 1.0);
}

} // namespace

Image bicubic_downscale(const Image& img, int factor) {
    validate(img);
    if (factor < 1) throw std::invalid_argument("downscale factor must be >= 1");
    if (img.width % factor != 0)
        throw std::invalid_argument("width " + std::to_string(img.width) +
                                    " not divisible by factor " + std::to_string(factor));
    if (img.height % factor != 0)
        throw std::invalid_argument("height " + std::to_string(img.height) +
                                    " not divisible by factor " + std::to_string(factor));
    Image out = resample_axis(img, img.width / factor, true, true);
    out = resample_axis(out, img.height / factor, false, true);
    clamp_unit(out);
    return out;
}

Image resize(const Image& img, int out_width, int out_height) {
    validate(img);
    if (out_width < 1 || out_height < 1)
        throw std::invalid_argument("resize target must be positive");
    Image out = resample_axis(img, out_width, true, out_width < img.width);
    out = resample_axis(out, out_height, false, out_height < img.height);
    clamp_unit(out);
    return out;
}

} // namespace fg
