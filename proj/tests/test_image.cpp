#include <doctest.h>

#include <random>

#include "qfe/image.hpp"
#include "test_util.hpp"

using qfe::Plane;
using qfe::Quaternion;
using qfe::QuaternionImage;
using qfe::RgbImage;
using qfe::ScalarPolicy;

TEST_CASE("zero policy embeds channels on the imaginary axes") {
    RgbImage img(1, 2);
    img.r.at(0, 0) = 255;
    const QuaternionImage q = rgb_to_quaternion(img);
    CHECK(q.at(0, 0) == Quaternion{0, 255, 0, 0});
    CHECK(q.at(0, 1) == Quaternion{0, 0, 0, 0});
    for (const Quaternion& p : q.pix) CHECK(p.is_pure());
}

TEST_CASE("gray_mean policy fills the scalar part") {
    RgbImage img(1, 1);
    img.r.at(0, 0) = 30;
    img.g.at(0, 0) = 60;
    img.b.at(0, 0) = 90;
    const QuaternionImage q = rgb_to_quaternion(img, ScalarPolicy::GrayMean);
    CHECK(q.at(0, 0) == Quaternion{60, 30, 60, 90});
}

TEST_CASE("conversion round trip is exact") {
    std::mt19937_64 rng(41);
    const RgbImage img = qfe_test::random_rgb(5, 7, rng);
    const RgbImage back = quaternion_to_rgb(rgb_to_quaternion(img));
    CHECK(back.r.v == img.r.v);
    CHECK(back.g.v == img.g.v);
    CHECK(back.b.v == img.b.v);
}

TEST_CASE("clip clamps channels and drops the scalar part") {
    QuaternionImage q(1, 1);
    q.at(0, 0) = {12.3, -5, 100, 300};
    const RgbImage out = quaternion_to_rgb(q, true);
    CHECK(out.r.at(0, 0) == 0);
    CHECK(out.g.at(0, 0) == 100);
    CHECK(out.b.at(0, 0) == 255);

    const RgbImage raw = quaternion_to_rgb(q, false);
    CHECK(raw.r.at(0, 0) == -5);
    CHECK(raw.b.at(0, 0) == 300);
}

TEST_CASE("component planes index a, b, c, d") {
    QuaternionImage q(1, 1);
    q.at(0, 0) = {1, 2, 3, 4};
    CHECK(q.component(0).at(0, 0) == 1);
    CHECK(q.component(1).at(0, 0) == 2);
    CHECK(q.component(2).at(0, 0) == 3);
    CHECK(q.component(3).at(0, 0) == 4);
}

TEST_CASE("degenerate dimensions are rejected") {
    CHECK_THROWS_AS(Plane(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(Plane(4, -1), std::invalid_argument);
    CHECK_THROWS_AS(QuaternionImage(0, 0), std::invalid_argument);
}

TEST_CASE("frobenius distance is zero only between equal images") {
    std::mt19937_64 rng(42);
    const QuaternionImage a = qfe_test::random_qimage(4, 4, rng);
    QuaternionImage b = a;
    CHECK(qfe::frobenius_distance(a, b) == 0.0);
    b.at(2, 2) += Quaternion{0, 3, 0, 0};
    CHECK(qfe::frobenius_distance(a, b) == 3.0);
    CHECK_THROWS_AS(qfe::frobenius_distance(a, qfe_test::random_qimage(4, 5, rng)),
                    std::invalid_argument);
}
