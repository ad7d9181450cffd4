#pragma once

#include "fg/image.hpp"

namespace fg {

/// Separable bicubic resampling (Catmull-Rom, a = -0.5) with clamp-to-edge
/// borders. Both dimensions must be divisible by factor; the output is
/// clamped to [0,1].
Image bicubic_downscale(const Image& img, int factor = 4);

/// Resizes to an arbitrary target: per axis, the bicubic kernel when that
/// axis shrinks and bilinear when it grows (copy when unchanged). Sample
/// positions are center-aligned. Output clamped to [0,1].
Image resize(const Image& img, int out_width, int out_height);

} // namespace fg
