#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "fg/rng.hpp"
#include "fg/smartcrop.hpp"

namespace {

fg::Image gray_image(int w, int h, double fill = 0.0) { return fg::Image(w, h, 1, fill); }

fg::Image random_gray(int w, int h, std::uint64_t seed) {
    fg::Rng rng(seed);
    fg::Image img(w, h, 1);
    for (double& v : img.data) v = rng.uniform(0.0, 1.0);
    return img;
}

// Straight-line scorer used as the oracle: same contract, plain loops.
double oracle_score(const fg::CropCandidate& c, const fg::SaliencyMaps& maps, double w_sat) {
    double sum = 0.0;
    for (int py = c.y; py < c.y + c.side; ++py)
        for (int px = c.x; px < c.x + c.side; ++px) {
            const double u = 2.0 * (px - c.x + 0.5) / c.side - 1.0;
            const double v = 2.0 * (py - c.y + 0.5) / c.side - 1.0;
            const double m = std::max(std::abs(u), std::abs(v));
            const double weight = std::max(0.0, 1.0 - m * m);
            sum += (maps.edge(py, px) + w_sat * maps.saturation_boost(py, px)) * weight;
        }
    return sum / (static_cast<double>(c.side) * c.side);
}

// Paints uniform noise into a square region so it carries edge detail.
void paint_blob(fg::Image& img, int x0, int y0, int side, std::uint64_t seed) {
    fg::Rng rng(seed);
    for (int y = y0; y < y0 + side; ++y)
        for (int x = x0; x < x0 + side; ++x)
            for (int c = 0; c < img.channels; ++c) img.at(x, y, c) = rng.uniform(0.0, 1.0);
}

} // namespace

TEST_CASE("laplace of a constant image is zero everywhere") {
    const Eigen::ArrayXXd lap = fg::laplace_edges(gray_image(16, 12, 0.7));
    CHECK(lap.abs().maxCoeff() == 0.0);
}

TEST_CASE("laplace of a single bright pixel matches the hand convolution") {
    fg::Image img = gray_image(11, 11, 0.0);
    img.at(5, 5, 0) = 1.0;
    const Eigen::ArrayXXd lap = fg::laplace_edges(img);
    CHECK(lap(5, 5) == 4.0);   // |4 * 1 - 0|
    CHECK(lap(5, 4) == 1.0);   // each 4-neighbor sees |-1|
    CHECK(lap(5, 6) == 1.0);
    CHECK(lap(4, 5) == 1.0);
    CHECK(lap(6, 5) == 1.0);
    CHECK(lap(4, 4) == 0.0);   // diagonals are outside the kernel
    CHECK(lap(0, 0) == 0.0);
}

TEST_CASE("laplace uses the rec601 luminance of rgb inputs") {
    fg::Image img(5, 5, 3, 0.0);
    img.at(2, 2, 0) = 1.0;  // pure red: Y = 0.299
    const Eigen::ArrayXXd lap = fg::laplace_edges(img);
    CHECK(lap(2, 2) == doctest::Approx(4.0 * 0.299).epsilon(1e-12));
    CHECK(lap(2, 1) == doctest::Approx(0.299).epsilon(1e-12));
}

TEST_CASE("laplace of a linear ramp vanishes in the interior") {
    fg::Image img = gray_image(20, 10);
    for (int y = 0; y < 10; ++y)
        for (int x = 0; x < 20; ++x) img.at(x, y, 0) = 0.02 * x + 0.01 * y;
    const Eigen::ArrayXXd lap = fg::laplace_edges(img);
    for (int y = 1; y < 9; ++y)
        for (int x = 1; x < 19; ++x) REQUIRE(lap(y, x) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("saturation boost thresholds chroma and ignores gray") {
    fg::Image img(3, 1, 3, 0.0);
    // Pixel 0: chroma 0.05, below the 0.1 threshold.
    img.at(0, 0, 0) = 0.50;
    img.at(0, 0, 1) = 0.45;
    img.at(0, 0, 2) = 0.48;
    // Pixel 1: chroma 0.4.
    img.at(1, 0, 0) = 0.6;
    img.at(1, 0, 1) = 0.2;
    img.at(1, 0, 2) = 0.3;
    // Pixel 2: neutral gray.
    img.at(2, 0, 0) = img.at(2, 0, 1) = img.at(2, 0, 2) = 0.8;

    const Eigen::ArrayXXd sat = fg::saturation_boost(img);
    CHECK(sat(0, 0) == 0.0);
    CHECK(sat(0, 1) == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(sat(0, 2) == 0.0);

    CHECK(fg::saturation_boost(gray_image(4, 4, 0.5)).abs().maxCoeff() == 0.0);
}

TEST_CASE("candidate crops enumerate scales and strides") {
    const auto cands = fg::candidate_crops(128, 64, {});
    // Short side 64; every scale stride is max(8, side/8) = 8.
    // side 64: y has 1 position, x has 9 (0..64 step 8).
    int full_side = 0;
    for (const auto& c : cands)
        if (c.side == 64) {
            ++full_side;
            REQUIRE(c.y == 0);
            REQUIRE(c.x % 8 == 0);
            REQUIRE(c.x <= 64);
        }
    CHECK(full_side == 9);

    // Independent recount across all configured scales.
    std::size_t expected = 0;
    for (double scale : std::vector<double>{1.0, 0.9, 0.8, 0.7, 0.6, 0.5}) {
        const int side = static_cast<int>(std::lround(scale * 64));
        const int stride = std::max(8, side / 8);
        std::size_t ny = 0, nx = 0;
        for (int y = 0; y + side <= 64; y += stride) ++ny;
        for (int x = 0; x + side <= 128; x += stride) ++nx;
        expected += ny * nx;
    }
    CHECK(cands.size() == expected);

    CHECK_THROWS_WITH_AS(fg::candidate_crops(63, 200, {}), doctest::Contains("64"),
                         std::invalid_argument);
}

TEST_CASE("score_crop matches the plain-loop oracle") {
    fg::Rng rng(12);
    fg::SaliencyMaps maps;
    maps.edge = Eigen::ArrayXXd(40, 50);
    maps.saturation_boost = Eigen::ArrayXXd(40, 50);
    for (Eigen::Index r = 0; r < 40; ++r)
        for (Eigen::Index c = 0; c < 50; ++c) {
            maps.edge(r, c) = rng.uniform(0.0, 2.0);
            maps.saturation_boost(r, c) = rng.uniform(0.0, 1.0);
        }
    const fg::SmartcropConfig cfg;
    for (const fg::CropCandidate& c :
         {fg::CropCandidate{0, 0, 40, 0}, fg::CropCandidate{10, 5, 30, 0},
          fg::CropCandidate{49, 39, 1, 0}}) {
        CHECK(fg::score_crop(c, maps, cfg) ==
              doctest::Approx(oracle_score(c, maps, cfg.saturation_weight)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(fg::score_crop(fg::CropCandidate{20, 0, 40, 0}, maps, cfg),
                    std::invalid_argument);
}

TEST_CASE("score_crop is linear in the saliency maps") {
    fg::Rng rng(13);
    fg::SaliencyMaps maps;
    maps.edge = Eigen::ArrayXXd(30, 30);
    maps.saturation_boost = Eigen::ArrayXXd::Zero(30, 30);
    for (Eigen::Index r = 0; r < 30; ++r)
        for (Eigen::Index c = 0; c < 30; ++c) maps.edge(r, c) = rng.uniform(0.0, 1.0);

    fg::SaliencyMaps scaled;
    scaled.edge = maps.edge * 3.5;
    scaled.saturation_boost = maps.saturation_boost * 3.5;
    const fg::CropCandidate c{4, 7, 20, 0};
    CHECK(fg::score_crop(c, scaled, {}) ==
          doctest::Approx(3.5 * fg::score_crop(c, maps, {})).epsilon(1e-12));
}

TEST_CASE("detail at the crop center outranks the same detail at its corner") {
    fg::SaliencyMaps maps;
    maps.edge = Eigen::ArrayXXd::Zero(64, 64);
    maps.saturation_boost = Eigen::ArrayXXd::Zero(64, 64);
    const fg::CropCandidate c{0, 0, 64, 0};
    maps.edge(32, 32) = 1.0;
    const double centered = fg::score_crop(c, maps, {});
    maps.edge(32, 32) = 0.0;
    maps.edge(0, 0) = 1.0;
    const double cornered = fg::score_crop(c, maps, {});
    CHECK(centered > cornered);
}

TEST_CASE("a constant square image crops to the full frame") {
    const fg::CropCandidate crop = fg::smart_crop(gray_image(64, 64, 0.4));
    CHECK(crop.x == 0);
    CHECK(crop.y == 0);
    CHECK(crop.side == 64);
    CHECK(crop.score == 0.0);
}

TEST_CASE("tie-break prefers larger side, then smaller y, then smaller x") {
    // All-zero saliency ties every candidate at score 0.
    const fg::CropCandidate crop = fg::smart_crop(gray_image(128, 64, 0.9));
    CHECK(crop.side == 64);
    CHECK(crop.x == 0);
    CHECK(crop.y == 0);
}

TEST_CASE("the winning crop contains a lone textured blob") {
    fg::Image img = gray_image(160, 96, 0.5);
    paint_blob(img, 100, 40, 16, 77);
    const fg::CropCandidate crop = fg::smart_crop(img);
    CHECK(crop.x <= 100);
    CHECK(crop.y <= 40);
    CHECK(crop.x + crop.side >= 116);
    CHECK(crop.y + crop.side >= 56);
}

TEST_CASE("translating the blob by one stride translates the crop") {
    fg::Image a = gray_image(160, 96, 0.5);
    fg::Image b = gray_image(160, 96, 0.5);
    paint_blob(a, 40, 30, 16, 78);
    paint_blob(b, 48, 30, 16, 78);
    const fg::CropCandidate ca = fg::smart_crop(a);
    const fg::CropCandidate cb = fg::smart_crop(b);
    CHECK(cb.x == ca.x + 8);
    CHECK(cb.y == ca.y);
    CHECK(cb.side == ca.side);
}

TEST_CASE("smart_crop is deterministic") {
    const fg::Image img = random_gray(96, 96, 20);
    const fg::CropCandidate a = fg::smart_crop(img);
    const fg::CropCandidate b = fg::smart_crop(img);
    CHECK(a.x == b.x);
    CHECK(a.y == b.y);
    CHECK(a.side == b.side);
    CHECK(a.score == b.score);
}

TEST_CASE("overlay keeps the crop and whitens the rest") {
    const fg::Image img = random_gray(80, 70, 21);
    const fg::CropCandidate crop{10, 4, 64, 0.0};
    const fg::Image out = fg::overlay_on_white(img, crop);
    for (int y = 0; y < 70; ++y)
        for (int x = 0; x < 80; ++x) {
            const bool inside =
                x >= crop.x && x < crop.x + crop.side && y >= crop.y && y < crop.y + crop.side;
            REQUIRE(out.at(x, y, 0) == (inside ? img.at(x, y, 0) : 1.0));
        }
    CHECK_THROWS_AS(fg::overlay_on_white(img, fg::CropCandidate{30, 10, 64, 0.0}),
                    std::invalid_argument);
}
