#pragma once

#include <stdexcept>
#include <vector>

#include "qfe/quaternion.hpp"

namespace qfe {

/// Row-major grid of doubles, the basic pixel-plane container.
struct Plane {
    int rows = 0;
    int cols = 0;
    std::vector<double> v;

    Plane() = default;
    Plane(int rows_, int cols_, double fill = 0.0)
        : rows(rows_), cols(cols_), v(check_dims(rows_, cols_), fill) {}

    double& at(int r, int c) { return v[static_cast<size_t>(r) * cols + c]; }
    double at(int r, int c) const { return v[static_cast<size_t>(r) * cols + c]; }
    size_t size() const { return v.size(); }

    bool same_shape(const Plane& o) const { return rows == o.rows && cols == o.cols; }

    static size_t check_dims(int rows, int cols) {
        if (rows < 1 || cols < 1)
            throw std::invalid_argument("image dimensions must be positive");
        return static_cast<size_t>(rows) * static_cast<size_t>(cols);
    }
};

/// Real-valued RGB image; intensities stay floating point end to end so
/// enhancement results survive without premature quantization.
struct RgbImage {
    Plane r, g, b;
    double value_scale = 255.0;  ///< nominal channel range (255 for 8-bit sources)

    RgbImage() = default;
    RgbImage(int rows, int cols, double scale = 255.0)
        : r(rows, cols), g(rows, cols), b(rows, cols), value_scale(scale) {}

    int rows() const { return r.rows; }
    int cols() const { return r.cols; }
};

/// Color image held as one quaternion per pixel: scalar part plus
/// R, G, B on the i, j, k axes.
struct QuaternionImage {
    int rows = 0;
    int cols = 0;
    double value_scale = 255.0;
    std::vector<Quaternion> pix;

    QuaternionImage() = default;
    QuaternionImage(int rows_, int cols_, double scale = 255.0)
        : rows(rows_), cols(cols_), value_scale(scale),
          pix(Plane::check_dims(rows_, cols_)) {}

    Quaternion& at(int n, int m) { return pix[static_cast<size_t>(n) * cols + m]; }
    const Quaternion& at(int n, int m) const { return pix[static_cast<size_t>(n) * cols + m]; }

    /// Extract one component plane; idx 0..3 selects a, b, c, d.
    Plane component(int idx) const;
};

/// How the scalar part is filled when lifting RGB into quaternions.
enum class ScalarPolicy {
    Zero,      ///< pure quaternion image, a = 0
    GrayMean,  ///< a = (R + G + B) / 3
};

QuaternionImage rgb_to_quaternion(const RgbImage& img,
                                  ScalarPolicy policy = ScalarPolicy::Zero);

/// Drop the scalar part and take R, G, B from the i, j, k coefficients.
/// With clip set, channels are clamped to [0, value_scale].
RgbImage quaternion_to_rgb(const QuaternionImage& qimg, bool clip = false);

/// Frobenius norm of the componentwise difference of two quaternion images.
double frobenius_distance(const QuaternionImage& x, const QuaternionImage& y);
double frobenius_norm(const QuaternionImage& x);

}  // namespace qfe
