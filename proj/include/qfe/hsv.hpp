#pragma once

#include "qfe/image.hpp"

namespace qfe {

// Hexcone model. H in degrees [0, 360) with gray pixels stored as 0;
// S and V in [0, 1].
struct HsvImage {
    Plane h;
    Plane s;
    Plane v;
    double value_scale = 255.0;

    int rows() const { return h.rows; }
    int cols() const { return h.cols; }
};

HsvImage rgb_to_hsv(const RgbImage& img);
RgbImage hsv_to_rgb(const HsvImage& img);

// Histogram equalization of the V plane only. H and S are copied through
// untouched. A constant V plane comes back unchanged.
HsvImage equalize_v(const HsvImage& img, int bins = 256);

// Convenience wrapper: RGB -> HSV -> equalize V -> RGB, clipped.
RgbImage hist_eq_v(const RgbImage& img, int bins = 256);

// Diagnostic only: independent per-channel equalization. Known to shift hue
// on generic color images; kept as the comparison failure case.
RgbImage hist_eq_rgb_naive(const RgbImage& img, int bins = 256);

}  // namespace qfe
