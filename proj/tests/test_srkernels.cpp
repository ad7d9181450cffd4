#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "fg/rng.hpp"
#include "fg/srkernels.hpp"

namespace {

fg::Tensor3 random_tensor(int w, int h, int c, std::uint64_t seed) {
    fg::Rng rng(seed);
    fg::Tensor3 t(w, h, c);
    for (double& v : t.data) v = rng.uniform(-2.0, 2.0);
    return t;
}

// Index-map reference for pixel_shuffle written from the definition.
fg::Tensor3 ref_shuffle(const fg::Tensor3& t, int r) {
    fg::Tensor3 out(t.width * r, t.height * r, t.channels / (r * r));
    for (int oy = 0; oy < out.height; ++oy)
        for (int ox = 0; ox < out.width; ++ox)
            for (int ch = 0; ch < out.channels; ++ch)
                out.at(ox, oy, ch) =
                    t.at(ox / r, oy / r, ch * r * r + (oy % r) * r + (ox % r));
    return out;
}

double ref_sq_sum(const fg::Tensor3& a, const fg::Tensor3& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        const double d = a.data[i] - b.data[i];
        s += d * d;
    }
    return s;
}

bool same_multiset(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

} // namespace

TEST_CASE("tensor validation") {
    CHECK_THROWS_AS(fg::Tensor3(0, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(fg::Tensor3(2, 2, 0), std::invalid_argument);
    fg::Tensor3 neg;
    neg.width = 2;
    neg.height = -1;
    neg.channels = 1;
    CHECK_THROWS_AS(fg::validate(neg), std::invalid_argument);
    fg::Tensor3 t(2, 2, 1);
    t.data.pop_back();
    CHECK_THROWS_AS(fg::validate(t), std::invalid_argument);
}

TEST_CASE("pixel shuffle lays one position's channels out as a block") {
    fg::Tensor3 t(1, 1, 4);
    t.data = {10.0, 20.0, 30.0, 40.0};
    const fg::Tensor3 out = fg::pixel_shuffle(t, 2);
    REQUIRE(out.width == 2);
    REQUIRE(out.height == 2);
    REQUIRE(out.channels == 1);
    CHECK(out.at(0, 0, 0) == 10.0);
    CHECK(out.at(1, 0, 0) == 20.0);
    CHECK(out.at(0, 1, 0) == 30.0);
    CHECK(out.at(1, 1, 0) == 40.0);
}

TEST_CASE("pixel shuffle matches the reference map and preserves elements") {
    const int shapes[][3] = {{3, 2, 4}, {2, 5, 8}, {4, 4, 18}, {1, 1, 12}};
    const int rs[] = {1, 2};
    std::uint64_t seed = 300;
    for (const auto& s : shapes)
        for (int r : rs) {
            if (s[2] % (r * r) != 0) continue;
            const fg::Tensor3 t = random_tensor(s[0], s[1], s[2], seed++);
            const fg::Tensor3 out = fg::pixel_shuffle(t, r);
            const fg::Tensor3 ref = ref_shuffle(t, r);
            REQUIRE(out.width == s[0] * r);
            REQUIRE(out.height == s[1] * r);
            REQUIRE(out.channels == s[2] / (r * r));
            CHECK(out.data == ref.data);
            CHECK(same_multiset(out.data, t.data));
        }
    // r=3 on a channel count divisible by 9.
    const fg::Tensor3 t9 = random_tensor(2, 3, 9, seed);
    CHECK(fg::pixel_shuffle(t9, 3).data == ref_shuffle(t9, 3).data);
}

TEST_CASE("shuffle and unshuffle invert each other exactly") {
    const fg::Tensor3 t = random_tensor(3, 4, 8, 310);
    CHECK(fg::pixel_unshuffle(fg::pixel_shuffle(t, 2), 2).data == t.data);
    const fg::Tensor3 u = random_tensor(6, 4, 3, 311);
    CHECK(fg::pixel_shuffle(fg::pixel_unshuffle(u, 2), 2).data == u.data);
    const fg::Tensor3 id = random_tensor(5, 5, 3, 312);
    CHECK(fg::pixel_shuffle(id, 1).data == id.data);
    CHECK(fg::pixel_unshuffle(id, 1).data == id.data);
}

TEST_CASE("pixel shuffle validates factor and divisibility") {
    const fg::Tensor3 t = random_tensor(2, 2, 6, 320);
    CHECK_THROWS_AS(fg::pixel_shuffle(t, 0), std::invalid_argument);
    CHECK_THROWS_WITH_AS(fg::pixel_shuffle(t, 2), doctest::Contains("6"),
                         std::invalid_argument);
    const fg::Tensor3 odd = random_tensor(3, 2, 1, 321);
    CHECK_THROWS_WITH_AS(fg::pixel_unshuffle(odd, 2), doctest::Contains("width 3"),
                         std::invalid_argument);
    const fg::Tensor3 odd_h = random_tensor(2, 3, 1, 322);
    CHECK_THROWS_WITH_AS(fg::pixel_unshuffle(odd_h, 2), doctest::Contains("height 3"),
                         std::invalid_argument);
}

TEST_CASE("mse content loss on a constant difference") {
    const fg::Tensor3 hr(8, 8, 3, 1.0);
    const fg::Tensor3 sr(8, 8, 3, 0.5);
    // Per-element squared difference is 0.25.
    CHECK(fg::mse_content_loss(hr, sr, 4, 2, 2) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(fg::mse_content_loss(hr, sr, 4, 2, 2, false) ==
          doctest::Approx(0.75).epsilon(1e-15));
    CHECK(fg::mse_content_loss(hr, hr, 4, 2, 2) == 0.0);
}

TEST_CASE("mse content loss matches a plain loop oracle") {
    std::uint64_t seed = 330;
    for (int r : {1, 2, 4})
        for (int lw : {1, 3, 4})
            for (int lh : {2, 4}) {
                const int c = 1 + static_cast<int>(seed % 8);
                const fg::Tensor3 hr = random_tensor(r * lw, r * lh, c, seed++);
                const fg::Tensor3 sr = random_tensor(r * lw, r * lh, c, seed++);
                const double sq = ref_sq_sum(hr, sr);
                const double base = static_cast<double>(r) * r * lw * lh;
                CHECK(fg::mse_content_loss(hr, sr, r, lw, lh, true) ==
                      doctest::Approx(sq / (base * c)).epsilon(1e-12));
                CHECK(fg::mse_content_loss(hr, sr, r, lw, lh, false) ==
                      doctest::Approx(sq / base).epsilon(1e-12));
                CHECK(fg::mse_content_loss(hr, sr, r, lw, lh) ==
                      fg::mse_content_loss(sr, hr, r, lw, lh));
            }
}

TEST_CASE("mse content loss ignores a common spatial permutation") {
    const int w = 6, h = 4, c = 2;
    const fg::Tensor3 a = random_tensor(w, h, c, 340);
    const fg::Tensor3 b = random_tensor(w, h, c, 341);
    // Shuffle pixel positions identically in both tensors.
    std::vector<int> order(static_cast<std::size_t>(w) * h);
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    fg::Rng rng(342);
    for (std::size_t i = order.size() - 1; i > 0; --i)
        std::swap(order[i], order[rng.uniform_int(0, static_cast<int>(i))]);
    fg::Tensor3 pa(w, h, c), pb(w, h, c);
    for (int p = 0; p < w * h; ++p)
        for (int ch = 0; ch < c; ++ch) {
            const int q = order[static_cast<std::size_t>(p)];
            pa.at(p % w, p / w, ch) = a.at(q % w, q / w, ch);
            pb.at(p % w, p / w, ch) = b.at(q % w, q / w, ch);
        }
    CHECK(fg::mse_content_loss(pa, pb, 2, 3, 2) ==
          doctest::Approx(fg::mse_content_loss(a, b, 2, 3, 2)).epsilon(1e-12));
}

TEST_CASE("mse content loss validates shapes") {
    const fg::Tensor3 hr(8, 8, 3, 1.0);
    const fg::Tensor3 sr(8, 8, 3, 0.5);
    CHECK_THROWS_AS(fg::mse_content_loss(hr, sr, 4, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(fg::mse_content_loss(hr, sr, 0, 8, 8), std::invalid_argument);
    const fg::Tensor3 wrong(8, 8, 1, 0.5);
    CHECK_THROWS_AS(fg::mse_content_loss(hr, wrong, 4, 2, 2), std::invalid_argument);
}

TEST_CASE("feature content loss on hand values and against the oracle") {
    fg::Tensor3 a(2, 2, 1, 1.0);
    fg::Tensor3 b(2, 2, 1, 0.0);
    CHECK(fg::feature_content_loss(a, b) == doctest::Approx(1.0).epsilon(1e-15));

    const fg::Tensor3 pa = random_tensor(5, 3, 4, 350);
    const fg::Tensor3 pb = random_tensor(5, 3, 4, 351);
    const double sq = ref_sq_sum(pa, pb);
    CHECK(fg::feature_content_loss(pa, pb) == doctest::Approx(sq / 15.0).epsilon(1e-12));
    CHECK(fg::feature_content_loss(pa, pb, true) ==
          doctest::Approx(sq / 60.0).epsilon(1e-12));
    CHECK(fg::feature_content_loss(pa, pa) == 0.0);

    const fg::Tensor3 other = random_tensor(5, 3, 2, 352);
    CHECK_THROWS_AS(fg::feature_content_loss(pa, other), std::invalid_argument);
}

TEST_CASE("perceptual loss combines content and adversarial terms") {
    CHECK(fg::perceptual_loss(0.5, 100.0) == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(fg::perceptual_loss(0.0, 0.0) == 0.0);
    fg::Rng rng(360);
    for (int i = 0; i < 100; ++i) {
        const double c = rng.uniform(0.0, 10.0), a = rng.uniform(0.0, 1000.0);
        CHECK(fg::perceptual_loss(c, a) == c + 1e-3 * a);
    }
}
