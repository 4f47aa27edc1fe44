#include "qfe/image.hpp"

#include <algorithm>
#include <cmath>

namespace qfe {

Plane QuaternionImage::component(int idx) const {
    Plane out(rows, cols);
    for (size_t i = 0; i < pix.size(); ++i) {
        const Quaternion& q = pix[i];
        out.v[i] = idx == 0 ? q.a : idx == 1 ? q.b : idx == 2 ? q.c : q.d;
    }
    return out;
}

QuaternionImage rgb_to_quaternion(const RgbImage& img, ScalarPolicy policy) {
    QuaternionImage out(img.rows(), img.cols(), img.value_scale);
    for (size_t i = 0; i < out.pix.size(); ++i) {
        const double r = img.r.v[i], g = img.g.v[i], b = img.b.v[i];
        const double a = policy == ScalarPolicy::GrayMean ? (r + g + b) / 3.0 : 0.0;
        out.pix[i] = {a, r, g, b};
    }
    return out;
}

RgbImage quaternion_to_rgb(const QuaternionImage& qimg, bool clip) {
    RgbImage out(qimg.rows, qimg.cols, qimg.value_scale);
    const double hi = qimg.value_scale;
    for (size_t i = 0; i < qimg.pix.size(); ++i) {
        const Quaternion& q = qimg.pix[i];
        if (clip) {
            out.r.v[i] = std::clamp(q.b, 0.0, hi);
            out.g.v[i] = std::clamp(q.c, 0.0, hi);
            out.b.v[i] = std::clamp(q.d, 0.0, hi);
        } else {
            out.r.v[i] = q.b;
            out.g.v[i] = q.c;
            out.b.v[i] = q.d;
        }
    }
    return out;
}

double frobenius_norm(const QuaternionImage& x) {
    double acc = 0.0;
    for (const Quaternion& q : x.pix) acc += q.norm();
    return std::sqrt(acc);
}

double frobenius_distance(const QuaternionImage& x, const QuaternionImage& y) {
    if (x.rows != y.rows || x.cols != y.cols)
        throw std::invalid_argument("quaternion image shapes differ");
    double acc = 0.0;
    for (size_t i = 0; i < x.pix.size(); ++i) acc += (x.pix[i] - y.pix[i]).norm();
    return std::sqrt(acc);
}

}  // namespace qfe
