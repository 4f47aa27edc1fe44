#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "qfe/hsv.hpp"
#include "test_util.hpp"

using qfe::HsvImage;
using qfe::Plane;
using qfe::RgbImage;

namespace {

RgbImage solid(double r, double g, double b) {
    RgbImage img(1, 1);
    img.r.v[0] = r;
    img.g.v[0] = g;
    img.b.v[0] = b;
    return img;
}

double circular_hue_diff(double a, double b) {
    const double d = std::fabs(a - b);
    return std::min(d, 360.0 - d);
}

}  // namespace

TEST_CASE("primary colors land on the hexcone corners") {
    const HsvImage red = qfe::rgb_to_hsv(solid(255, 0, 0));
    CHECK(red.h.v[0] == 0.0);
    CHECK(red.s.v[0] == 1.0);
    CHECK(red.v.v[0] == 1.0);

    const HsvImage green = qfe::rgb_to_hsv(solid(0, 255, 0));
    CHECK(green.h.v[0] == doctest::Approx(120.0).epsilon(1e-12));
    const HsvImage blue = qfe::rgb_to_hsv(solid(0, 0, 255));
    CHECK(blue.h.v[0] == doctest::Approx(240.0).epsilon(1e-12));

    const RgbImage back = qfe::hsv_to_rgb(green);
    CHECK(back.r.v[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(back.g.v[0] == doctest::Approx(255.0).epsilon(1e-12));
    CHECK(back.b.v[0] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("gray has zero saturation and survives the round trip") {
    const HsvImage hsv = qfe::rgb_to_hsv(solid(128, 128, 128));
    CHECK(hsv.h.v[0] == 0.0);
    CHECK(hsv.s.v[0] == 0.0);
    CHECK(hsv.v.v[0] == doctest::Approx(128.0 / 255.0).epsilon(1e-15));
    const RgbImage back = qfe::hsv_to_rgb(hsv);
    for (const Plane* p : {&back.r, &back.g, &back.b}) {
        CHECK(p->v[0] == doctest::Approx(128.0).epsilon(1e-12));
    }
}

TEST_CASE("random images survive rgb->hsv->rgb") {
    std::mt19937_64 rng(81);
    const RgbImage img = qfe_test::random_rgb(40, 40, rng);
    const RgbImage back = qfe::hsv_to_rgb(qfe::rgb_to_hsv(img));
    double worst = 0.0;
    for (size_t i = 0; i < img.r.size(); ++i) {
        worst = std::max(worst, std::fabs(img.r.v[i] - back.r.v[i]));
        worst = std::max(worst, std::fabs(img.g.v[i] - back.g.v[i]));
        worst = std::max(worst, std::fabs(img.b.v[i] - back.b.v[i]));
    }
    CHECK(worst <= 1e-9);
}

TEST_CASE("hue stays in range on random input") {
    std::mt19937_64 rng(82);
    const HsvImage hsv = qfe::rgb_to_hsv(qfe_test::random_rgb(32, 32, rng));
    for (size_t i = 0; i < hsv.h.size(); ++i) {
        CHECK(hsv.h.v[i] >= 0.0);
        CHECK(hsv.h.v[i] < 360.0);
        CHECK(hsv.s.v[i] >= 0.0);
        CHECK(hsv.s.v[i] <= 1.0);
        CHECK(hsv.v.v[i] >= 0.0);
        CHECK(hsv.v.v[i] <= 1.0);
    }
}

TEST_CASE("two-level value plane equalizes to exactly 0 and 1") {
    HsvImage hsv;
    hsv.h = Plane(10, 10, 30.0);
    hsv.s = Plane(10, 10, 0.5);
    hsv.v = Plane(10, 10, 0.2);
    for (int m = 0; m < 10; ++m) {
        for (int n = 0; n < 5; ++n) hsv.v.at(n, m) = 0.4;
    }
    const HsvImage eq = qfe::equalize_v(hsv);
    for (size_t i = 0; i < eq.v.size(); ++i) {
        const double expect = hsv.v.v[i] == 0.4 ? 1.0 : 0.0;
        CHECK(eq.v.v[i] == expect);
    }
}

TEST_CASE("equalize_v copies hue and saturation bitwise") {
    std::mt19937_64 rng(83);
    HsvImage hsv;
    hsv.h = qfe_test::random_plane(12, 18, rng, 0.0, 360.0);
    hsv.s = qfe_test::random_plane(12, 18, rng, 0.0, 1.0);
    hsv.v = qfe_test::random_plane(12, 18, rng, 0.0, 1.0);
    const HsvImage eq = qfe::equalize_v(hsv);
    CHECK(eq.h.v == hsv.h.v);
    CHECK(eq.s.v == hsv.s.v);
    CHECK(eq.v.v != hsv.v.v);
}

TEST_CASE("constant value plane is left untouched") {
    HsvImage hsv;
    hsv.h = Plane(6, 6, 200.0);
    hsv.s = Plane(6, 6, 0.3);
    hsv.v = Plane(6, 6, 0.7);
    const HsvImage eq = qfe::equalize_v(hsv);
    CHECK(eq.v.v == hsv.v.v);
}

TEST_CASE("equalizing twice moves values by less than one bin") {
    std::mt19937_64 rng(84);
    HsvImage hsv;
    hsv.h = Plane(50, 50, 0.0);
    hsv.s = Plane(50, 50, 0.0);
    hsv.v = qfe_test::random_plane(50, 50, rng, 0.0, 1.0);
    for (double& v : hsv.v.v) v = v * v;  // skew toward dark
    const HsvImage once = qfe::equalize_v(hsv);
    const HsvImage twice = qfe::equalize_v(once);
    double worst = 0.0;
    for (size_t i = 0; i < once.v.size(); ++i) {
        worst = std::max(worst, std::fabs(once.v.v[i] - twice.v.v[i]));
    }
    CHECK(worst <= 1.0 / 256.0 + 1e-12);
}

TEST_CASE("equalization linearizes the value distribution") {
    std::mt19937_64 rng(85);
    HsvImage hsv;
    hsv.h = Plane(100, 100, 0.0);
    hsv.s = Plane(100, 100, 0.0);
    hsv.v = qfe_test::random_plane(100, 100, rng, 0.0, 1.0);
    for (double& v : hsv.v.v) v = v * v;
    const HsvImage eq = qfe::equalize_v(hsv);

    auto frac_below = [](const Plane& p, double q) {
        size_t c = 0;
        for (double v : p.v) {
            if (v <= q) ++c;
        }
        return static_cast<double>(c) / p.size();
    };
    // skewed input piles up below the quartile point
    CHECK(frac_below(hsv.v, 0.25) > 0.45);
    for (double q : {0.25, 0.5, 0.75}) {
        CHECK(std::fabs(frac_below(eq.v, q) - q) < 0.08);
    }
}

TEST_CASE("value equalization preserves hue through the rgb pipeline") {
    std::mt19937_64 rng(86);
    const RgbImage img = qfe_test::random_rgb(24, 24, rng);
    const HsvImage before = qfe::rgb_to_hsv(img);
    const HsvImage after = qfe::rgb_to_hsv(qfe::hist_eq_v(img));
    for (size_t i = 0; i < before.h.size(); ++i) {
        if (before.s.v[i] < 0.05 || after.v.v[i] < 0.05) continue;
        CHECK(circular_hue_diff(before.h.v[i], after.h.v[i]) <= 1e-6);
        CHECK(after.s.v[i] == doctest::Approx(before.s.v[i]).epsilon(1e-9));
    }
}

TEST_CASE("bad bin counts are rejected") {
    HsvImage hsv;
    hsv.h = Plane(2, 2, 0.0);
    hsv.s = Plane(2, 2, 0.0);
    hsv.v = Plane(2, 2, 0.5);
    CHECK_THROWS_AS(qfe::equalize_v(hsv, 1), std::invalid_argument);
    CHECK_THROWS_AS(qfe::equalize_v(hsv, 0), std::invalid_argument);
    RgbImage img = solid(1, 2, 3);
    CHECK_THROWS_AS(qfe::hist_eq_rgb_naive(img, 1), std::invalid_argument);
}

TEST_CASE("naive per-channel equalization keeps gray gray but shifts color") {
    std::mt19937_64 rng(87);
    RgbImage gray(16, 16);
    const Plane g = qfe_test::random_plane(16, 16, rng, 0.0, 255.0);
    gray.r = g;
    gray.g = g;
    gray.b = g;
    const RgbImage eq = qfe::hist_eq_rgb_naive(gray);
    CHECK(eq.r.v == eq.g.v);
    CHECK(eq.g.v == eq.b.v);

    const RgbImage color = qfe_test::random_rgb(32, 32, rng);
    const RgbImage naive = qfe::hist_eq_rgb_naive(color);
    const RgbImage joint = qfe::hist_eq_v(color);
    double worst = 0.0;
    for (size_t i = 0; i < color.r.size(); ++i) {
        worst = std::max(worst, std::fabs(naive.r.v[i] - joint.r.v[i]));
        worst = std::max(worst, std::fabs(naive.g.v[i] - joint.g.v[i]));
        worst = std::max(worst, std::fabs(naive.b.v[i] - joint.b.v[i]));
    }
    CHECK(worst > 1.0);
}
