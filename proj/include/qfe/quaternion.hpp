#pragma once

#include <cmath>

namespace qfe {

/// Imaginary axis selector for unit-quaternion kernels.
enum class Axis { I, J, K };

/// Quaternion q = a + i*b + j*c + k*d with double components.
///
/// Multiplication follows i^2 = j^2 = k^2 = ijk = -1 (so ij = k = -ji,
/// jk = i = -kj, ki = j = -ik) and is therefore noncommutative.
/// norm() is the sum of squared components; magnitude() its square root.
struct Quaternion {
    double a = 0.0;  ///< scalar part
    double b = 0.0;  ///< i coefficient
    double c = 0.0;  ///< j coefficient
    double d = 0.0;  ///< k coefficient

    constexpr Quaternion() = default;
    constexpr Quaternion(double a_, double b_, double c_, double d_)
        : a(a_), b(b_), c(c_), d(d_) {}

    static constexpr Quaternion identity() { return {1.0, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion zero() { return {0.0, 0.0, 0.0, 0.0}; }

    constexpr bool operator==(const Quaternion&) const = default;

    constexpr Quaternion operator+(const Quaternion& q) const {
        return {a + q.a, b + q.b, c + q.c, d + q.d};
    }
    constexpr Quaternion operator-(const Quaternion& q) const {
        return {a - q.a, b - q.b, c - q.c, d - q.d};
    }
    constexpr Quaternion operator-() const { return {-a, -b, -c, -d}; }

    constexpr Quaternion& operator+=(const Quaternion& q) {
        a += q.a; b += q.b; c += q.c; d += q.d;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& q) {
        a -= q.a; b -= q.b; c -= q.c; d -= q.d;
        return *this;
    }

    /// Hamilton product; order of the factors matters.
    constexpr Quaternion operator*(const Quaternion& q) const {
        return {a * q.a - b * q.b - c * q.c - d * q.d,
                a * q.b + b * q.a + c * q.d - d * q.c,
                a * q.c - b * q.d + c * q.a + d * q.b,
                a * q.d + b * q.c - c * q.b + d * q.a};
    }

    constexpr Quaternion operator*(double s) const { return {a * s, b * s, c * s, d * s}; }

    constexpr Quaternion conjugate() const { return {a, -b, -c, -d}; }

    /// Squared magnitude a^2 + b^2 + c^2 + d^2.
    constexpr double norm() const { return a * a + b * b + c * c + d * d; }

    double magnitude() const { return std::sqrt(norm()); }

    constexpr bool is_pure() const { return a == 0.0; }
};

constexpr Quaternion operator*(double s, const Quaternion& q) { return q * s; }

/// Unit quaternion cos(theta) - u*sin(theta) on the chosen imaginary axis u.
/// This is the building block of the transform kernels W^t; the inverse
/// kernels are obtained by negating theta.
inline Quaternion exp_unit(Axis axis, double theta) {
    const double co = std::cos(theta);
    const double si = std::sin(theta);
    switch (axis) {
        case Axis::I: return {co, -si, 0.0, 0.0};
        case Axis::J: return {co, 0.0, -si, 0.0};
        default:      return {co, 0.0, 0.0, -si};
    }
}

}  // namespace qfe
