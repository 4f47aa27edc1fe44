#include <doctest.h>

#include <numbers>
#include <random>

#include "qfe/quaternion.hpp"

using qfe::Axis;
using qfe::Quaternion;

namespace {

constexpr Quaternion kOne{1, 0, 0, 0};
constexpr Quaternion kI{0, 1, 0, 0};
constexpr Quaternion kJ{0, 0, 1, 0};
constexpr Quaternion kK{0, 0, 0, 1};

Quaternion random_q(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    return {dist(rng), dist(rng), dist(rng), dist(rng)};
}

}  // namespace

TEST_CASE("unit multiplication table") {
    CHECK(kI * kJ == kK);
    CHECK(kJ * kI == -kK);
    CHECK(kJ * kK == kI);
    CHECK(kK * kJ == -kI);
    CHECK(kK * kI == kJ);
    CHECK(kI * kK == -kJ);
    CHECK(kI * kI == -kOne);
    CHECK(kJ * kJ == -kOne);
    CHECK(kK * kK == -kOne);
    CHECK((kI * kJ) * kK == -kOne);
}

TEST_CASE("identity, componentwise arithmetic, conjugate") {
    const Quaternion q{1, 2, 3, 4};
    CHECK(kOne * q == q);
    CHECK(q * kOne == q);
    CHECK(q + Quaternion::zero() == q);
    CHECK(q - q == Quaternion::zero());
    CHECK(q * 2.0 == Quaternion{2, 4, 6, 8});
    CHECK(2.0 * q == Quaternion{2, 4, 6, 8});
    CHECK(q.conjugate() == Quaternion{1, -2, -3, -4});
    CHECK(q.conjugate().conjugate() == q);

    const Quaternion ones{1, 1, 1, 1};
    CHECK(ones * ones.conjugate() == Quaternion{4, 0, 0, 0});
    CHECK(q * q.conjugate() == Quaternion{q.norm(), 0, 0, 0});
}

TEST_CASE("norm and purity") {
    const Quaternion q{1, 2, 3, 4};
    CHECK(q.norm() == 30.0);
    CHECK(q.magnitude() == doctest::Approx(std::sqrt(30.0)));
    CHECK(Quaternion::zero().magnitude() == 0.0);
    CHECK(!q.is_pure());
    CHECK(kI.is_pure());
}

TEST_CASE("norm multiplicativity over random pairs") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 10000; ++it) {
        const Quaternion p = random_q(rng);
        const Quaternion q = random_q(rng);
        const double lhs = (p * q).magnitude();
        const double rhs = p.magnitude() * q.magnitude();
        CHECK(std::fabs(lhs - rhs) <= 1e-12 * (rhs + 1.0));
    }
}

TEST_CASE("associativity over random triples") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 2000; ++it) {
        const Quaternion p = random_q(rng);
        const Quaternion q = random_q(rng);
        const Quaternion r = random_q(rng);
        const Quaternion lhs = (p * q) * r;
        const Quaternion rhs = p * (q * r);
        CHECK((lhs - rhs).magnitude() <= 1e-12 * (lhs.magnitude() + 1.0));
    }
}

TEST_CASE("exp_unit kernel values") {
    using std::numbers::pi;
    CHECK(qfe::exp_unit(Axis::J, 0.0) == Quaternion{1, 0, 0, 0});

    const Quaternion jpi = qfe::exp_unit(Axis::J, pi);
    CHECK(jpi.a == doctest::Approx(-1.0));
    CHECK(std::fabs(jpi.c) <= 1e-15);

    const Quaternion khalf = qfe::exp_unit(Axis::K, pi / 2.0);
    CHECK(std::fabs(khalf.a) <= 1e-15);
    CHECK(khalf.d == doctest::Approx(-1.0));

    const Quaternion ihalf = qfe::exp_unit(Axis::I, pi / 3.0);
    CHECK(ihalf.magnitude() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("same-axis kernels compose by angle addition") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> angle(-6.0, 6.0);
    for (Axis axis : {Axis::I, Axis::J, Axis::K}) {
        for (int it = 0; it < 500; ++it) {
            const double t1 = angle(rng);
            const double t2 = angle(rng);
            const Quaternion prod = qfe::exp_unit(axis, t1) * qfe::exp_unit(axis, t2);
            const Quaternion sum = qfe::exp_unit(axis, t1 + t2);
            CHECK((prod - sum).magnitude() <= 1e-12);
        }
    }
}
