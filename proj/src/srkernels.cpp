#include "fg/srkernels.hpp"

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace fg {

Tensor3::Tensor3(int w, int h, int c, double fill)
    : width(w), height(h), channels(c),
      data(static_cast<std::size_t>(w) * h * c, fill) {
    validate(*this);
}

void validate(const Tensor3& t) {
    if (t.width <= 0 || t.height <= 0 || t.channels <= 0)
        throw std::invalid_argument("tensor dimensions must be positive");
    const auto expected = static_cast<std::size_t>(t.width) * t.height * t.channels;
    if (t.data.size() != expected)
        throw std::invalid_argument("tensor data size does not match dimensions");
}

Tensor3 pixel_shuffle(const Tensor3& t, int r) {
    validate(t);
    if (r < 1) throw std::invalid_argument("upscale factor must be >= 1");
    if (t.channels % (r * r) != 0)
        throw std::invalid_argument("channel count " + std::to_string(t.channels) +
                                    " not divisible by r^2 = " + std::to_string(r * r));
    const int out_c = t.channels / (r * r);
    Tensor3 out(t.width * r, t.height * r, out_c);
    for (int y = 0; y < t.height; ++y)
        for (int x = 0; x < t.width; ++x)
            for (int ch = 0; ch < out_c; ++ch)
                for (int dy = 0; dy < r; ++dy)
                    for (int dx = 0; dx < r; ++dx)
                        out.at(x * r + dx, y * r + dy, ch) =
                            t.at(x, y, ch * r * r + dy * r + dx);
    return out;
}

Tensor3 pixel_unshuffle(const Tensor3& t, int r) {
    validate(t);
    if (r < 1) throw std::invalid_argument("upscale factor must be >= 1");
    if (t.width % r != 0)
        throw std::invalid_argument("width " + std::to_string(t.width) +
                                    " not divisible by factor " + std::to_string(r));
    if (t.height % r != 0)
        throw std::invalid_argument("height " + std::to_string(t.height) +
                                    " not divisible by factor " + std::to_string(r));
    Tensor3 out(t.width / r, t.height / r, t.channels * r * r);
    for (int y = 0; y < out.height; ++y)
        for (int x = 0; x < out.width; ++x)
            for (int ch = 0; ch < t.channels; ++ch)
                for (int dy = 0; dy < r; ++dy)
                    for (int dx = 0; dx < r; ++dx)
                        out.at(x, y, ch * r * r + dy * r + dx) =
                            t.at(x * r + dx, y * r + dy, ch);
    return out;
}

namespace {

double squared_difference_sum(const Tensor3& a, const Tensor3& b) {
    const Eigen::Map<const Eigen::ArrayXd> va(a.data.data(),
                                              static_cast<Eigen::Index>(a.data.size()));
    const Eigen::Map<const Eigen::ArrayXd> vb(b.data.data(),
                                              static_cast<Eigen::Index>(b.data.size()));
    return (va - vb).square().sum();
}

} // namespace

double mse_content_loss(const Tensor3& hr, const Tensor3& sr, int r, int lr_width,
                        int lr_height, bool channel_mean) {
    validate(hr);
    validate(sr);
    if (r < 1 || lr_width < 1 || lr_height < 1)
        throw std::invalid_argument("factor and LR dims must be positive");
    if (hr.width != r * lr_width || hr.height != r * lr_height)
        throw std::invalid_argument("HR dims must equal (r*lr_width, r*lr_height)");
    if (sr.width != hr.width || sr.height != hr.height || sr.channels != hr.channels)
        throw std::invalid_argument("HR/SR shape mismatch");
    double denom = static_cast<double>(r) * r * lr_width * lr_height;
    if (channel_mean) denom *= hr.channels;
    return squared_difference_sum(hr, sr) / denom;
}

double feature_content_loss(const Tensor3& phi_hr, const Tensor3& phi_sr,
                            bool channel_mean) {
    validate(phi_hr);
    validate(phi_sr);
    if (phi_sr.width != phi_hr.width || phi_sr.height != phi_hr.height ||
        phi_sr.channels != phi_hr.channels)
        throw std::invalid_argument("feature map shape mismatch");
    double denom = static_cast<double>(phi_hr.width) * phi_hr.height;
    if (channel_mean) denom *= phi_hr.channels;
    return squared_difference_sum(phi_hr, phi_sr) / denom;
}

double perceptual_loss(double content, double adversarial) {
    return content + 1e-3 * adversarial;
}

} // namespace fg
