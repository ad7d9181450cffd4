#pragma once

#include <cstddef>
#include <vector>

namespace fg {

/// W x H x C value tensor, row-major and channel-interleaved like Image
/// but with an unconstrained channel count.
struct Tensor3 {
    int width = 0;
    int height = 0;
    int channels = 0;
    std::vector<double> data;

    Tensor3() = default;
    Tensor3(int w, int h, int c, double fill = 0.0);

    double& at(int x, int y, int ch) {
        return data[(static_cast<std::size_t>(y) * width + x) * channels + ch];
    }
    double at(int x, int y, int ch) const {
        return data[(static_cast<std::size_t>(y) * width + x) * channels + ch];
    }
};

void validate(const Tensor3& t);

/// (W, H, C*r^2) -> (W*r, H*r, C):
/// out(x*r + dx, y*r + dy, ch) = in(x, y, ch*r^2 + dy*r + dx).
/// Preserves the element multiset.
Tensor3 pixel_shuffle(const Tensor3& t, int r);

/// Exact inverse of pixel_shuffle's index map.
Tensor3 pixel_unshuffle(const Tensor3& t, int r);

/// Pixel-space content loss between an original and a reconstruction of
/// dims (r*lr_width, r*lr_height): squared differences summed over all
/// positions and channels, divided by r^2 * lr_width * lr_height — times
/// the channel count too when channel_mean is set (the default).
double mse_content_loss(const Tensor3& hr, const Tensor3& sr, int r, int lr_width,
                        int lr_height, bool channel_mean = true);

/// Feature-space content loss between two feature maps of equal shape:
/// squared differences summed over positions and channels, divided by
/// W*H. channel_mean additionally divides by C (off by default).
double feature_content_loss(const Tensor3& phi_hr, const Tensor3& phi_sr,
                            bool channel_mean = false);

/// content + 1e-3 * adversarial.
double perceptual_loss(double content, double adversarial);

} // namespace fg
