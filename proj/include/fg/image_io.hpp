#pragma once

#include <string>

#include "fg/image.hpp"

namespace fg {

/// Reads a PNG (8-bit gray/RGB) or binary PPM (P6) file. Intensities are
/// mapped to [0,1] by dividing by 255. The format is detected from the
/// file's magic bytes, not its extension.
Image load_image(const std::string& path);

/// Writes PNG or PPM depending on the extension (.png / .ppm). Values are
/// clamped to [0,1] and quantized by round-half-up to 8 bits, so a
/// load(save(img)) round trip is within 1/255 per channel.
void save_image(const Image& img, const std::string& path);

} // namespace fg
