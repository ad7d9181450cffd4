#include "fg/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <memory>
#include <stdexcept>
#include <vector>

namespace fg {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

std::string lower_ext(const std::string& path) {
    const auto slash = path.find_last_of('/');
    const auto dot = path.find_last_of('.');
    if (dot == std::string::npos) return {};
    if (slash != std::string::npos && dot < slash) return {};
    std::string ext = path.substr(dot);
    for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return ext;
}

std::uint8_t quantize(double v) {
    v = std::clamp(v, 0.0, 1.0);
    return static_cast<std::uint8_t>(std::lround(v * 255.0));
}

Image from_bytes(int w, int h, int c, const std::vector<std::uint8_t>& bytes) {
    Image img(w, h, c);
    for (std::size_t i = 0; i < bytes.size(); ++i)
        img.data[i] = bytes[i] / 255.0;
    return img;
}

// --- PNG ---

Image load_png(const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) throw std::runtime_error("cannot open file: " + path);

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw std::runtime_error("png init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw std::runtime_error("png init failed");
    }
    std::vector<std::uint8_t> bytes;
    std::vector<png_bytep> rows;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw std::runtime_error("unsupported format: failed to decode PNG: " + path);
    }
    png_init_io(png, fp.get());
    png_read_info(png, info);

    const png_uint_32 w = png_get_image_width(png, info);
    const png_uint_32 h = png_get_image_height(png, info);
    const int color = png_get_color_type(png, info);
    const int depth = png_get_bit_depth(png, info);

    // Coerce everything to 8-bit gray or RGB.
    if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color == PNG_COLOR_TYPE_GRAY && depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    if (depth == 16) png_set_strip_16(png);
    if (color & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
    png_read_update_info(png, info);

    const int channels = png_get_channels(png, info);
    if (w == 0 || h == 0) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw std::runtime_error("zero-dimension image: " + path);
    }
    if (channels != 1 && channels != 3) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw std::runtime_error("unsupported format: PNG must decode to gray or RGB: " + path);
    }

    const std::size_t stride = static_cast<std::size_t>(w) * channels;
    bytes.resize(stride * h);
    rows.resize(h);
    for (png_uint_32 y = 0; y < h; ++y) rows[y] = bytes.data() + y * stride;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    return from_bytes(static_cast<int>(w), static_cast<int>(h), channels, bytes);
}

void save_png(const Image& img, const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp) throw std::runtime_error("cannot open file for writing: " + path);

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw std::runtime_error("png init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw std::runtime_error("png init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw std::runtime_error("failed to write PNG: " + path);
    }
    png_init_io(png, fp.get());
    const int color = img.channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB;
    png_set_IHDR(png, info, img.width, img.height, 8, color, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);

    const std::size_t stride = static_cast<std::size_t>(img.width) * img.channels;
    std::vector<std::uint8_t> row(stride);
    for (int y = 0; y < img.height; ++y) {
        for (std::size_t i = 0; i < stride; ++i)
            row[i] = quantize(img.data[static_cast<std::size_t>(y) * stride + i]);
        png_write_row(png, row.data());
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

// --- binary PPM (P6) ---

// Reads one whitespace-delimited header token, skipping '#' comments.
std::string ppm_token(std::istream& is) {
    std::string tok;
    int ch;
    while ((ch = is.get()) != EOF) {
        if (ch == '#') {
            while ((ch = is.get()) != EOF && ch != '\n') {
            }
            continue;
        }
        if (std::isspace(ch)) {
            if (!tok.empty()) break;
            continue;
        }
        tok.push_back(static_cast<char>(ch));
    }
    return tok;
}

int ppm_int(std::istream& is) {
    const std::string tok = ppm_token(is);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw std::runtime_error("unsupported format: bad PPM header");
    return std::stoi(tok);
}

Image load_ppm(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open file: " + path);
    if (ppm_token(is) != "P6")
        throw std::runtime_error("unsupported format: not a P6 PPM: " + path);
    const int w = ppm_int(is);
    const int h = ppm_int(is);
    const int maxval = ppm_int(is);
    if (w <= 0 || h <= 0) throw std::runtime_error("zero-dimension image: " + path);
    if (maxval != 255)
        throw std::runtime_error("unsupported format: PPM maxval must be 255: " + path);
    // The single whitespace byte after maxval was already consumed by the
    // token reader; pixel data starts here.
    std::vector<std::uint8_t> bytes(static_cast<std::size_t>(w) * h * 3);
    is.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (static_cast<std::size_t>(is.gcount()) != bytes.size())
        throw std::runtime_error("unsupported format: truncated PPM: " + path);
    return from_bytes(w, h, 3, bytes);
}

void save_ppm(const Image& img, const std::string& path) {
    if (img.channels != 3)
        throw std::runtime_error("PPM (P6) requires a 3-channel image: " + path);
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open file for writing: " + path);
    os << "P6\n" << img.width << " " << img.height << "\n255\n";
    std::vector<std::uint8_t> bytes(img.data.size());
    for (std::size_t i = 0; i < img.data.size(); ++i) bytes[i] = quantize(img.data[i]);
    os.write(reinterpret_cast<const char*>(bytes.data()),
             static_cast<std::streamsize>(bytes.size()));
    if (!os) throw std::runtime_error("I/O error writing: " + path);
}

} // namespace

Image load_image(const std::string& path) {
    std::ifstream probe(path, std::ios::binary);
    if (!probe) throw std::runtime_error("cannot open file: " + path);
    unsigned char magic[8] = {};
    probe.read(reinterpret_cast<char*>(magic), 8);
    const auto got = probe.gcount();
    probe.close();

    static const unsigned char png_sig[8] = {137, 80, 78, 71, 13, 10, 26, 10};
    if (got >= 8 && std::equal(png_sig, png_sig + 8, magic)) {
        Image img = load_png(path);
        validate(img);
        return img;
    }
    if (got >= 2 && magic[0] == 'P' && magic[1] == '6') {
        Image img = load_ppm(path);
        validate(img);
        return img;
    }
    throw std::runtime_error("unsupported format: " + path);
}

void save_image(const Image& img, const std::string& path) {
    validate(img);
    const std::string ext = lower_ext(path);
    if (ext == ".png")
        save_png(img, path);
    else if (ext == ".ppm")
        save_ppm(img, path);
    else
        throw std::runtime_error("unsupported output format (use .png or .ppm): " + path);
}

} // namespace fg
