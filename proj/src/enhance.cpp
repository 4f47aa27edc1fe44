#include "qfe/enhance.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "qfe/fft.hpp"

namespace qfe {

AlphaParams AlphaParams::uniform(double alpha) {
    AlphaParams p;
    p.rgb = {alpha, alpha, alpha};
    p.validate();
    return p;
}

AlphaParams AlphaParams::channels(double ar, double ag, double ab) {
    AlphaParams p;
    p.rgb = {ar, ag, ab};
    p.validate();
    return p;
}

void AlphaParams::validate() const {
    for (double a : rgb) {
        if (!(a > 0.0 && a <= 1.0)) {
            throw std::invalid_argument("alpha must lie in (0, 1]");
        }
    }
}

void alpha_root_spectrum(QSpectrum& spectrum, double alpha, bool preserve_dc) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("alpha must lie in (0, 1]");
    }
    for (size_t i = 0; i < spectrum.coeff.size(); ++i) {
        if (preserve_dc && i == 0) continue;
        Quaternion& q = spectrum.coeff[i];
        const double mag = q.magnitude();
        if (mag == 0.0) continue;
        q = q * std::pow(mag, alpha - 1.0);
    }
}

static QuaternionEnhanceResult split_and_clip(const QuaternionImage& qimg) {
    QuaternionEnhanceResult out;
    out.rgb = quaternion_to_rgb(qimg, true);
    out.scalar_part = Plane(qimg.rows, qimg.cols);
    for (int n = 0; n < qimg.rows; ++n) {
        for (int m = 0; m < qimg.cols; ++m) {
            out.scalar_part.at(n, m) = qimg.at(n, m).a;
        }
    }
    return out;
}

QuaternionEnhanceResult enhance_qdft(const RgbImage& img, double alpha,
                                     ScalarPolicy policy, bool preserve_dc) {
    const QuaternionImage qimg = rgb_to_quaternion(img, policy);
    const QSpectrum spectrum = qdft_two_sided_fast(qimg);
    return enhance_qdft_spectrum(spectrum, alpha, preserve_dc);
}

QuaternionEnhanceResult enhance_qdft_spectrum(const QSpectrum& spectrum, double alpha,
                                              bool preserve_dc) {
    QSpectrum rooted = spectrum;
    alpha_root_spectrum(rooted, alpha, preserve_dc);
    return split_and_clip(iqdft_two_sided(rooted));
}

RgbImage enhance_dft_channelwise(const RgbImage& img, const AlphaParams& alpha,
                                 bool preserve_dc) {
    alpha.validate();
    const int rows = img.rows();
    const int cols = img.cols();
    RgbImage out = img;
    Plane* planes[3] = {&out.r, &out.g, &out.b};
    for (int ch = 0; ch < 3; ++ch) {
        const double a = alpha.rgb[static_cast<size_t>(ch)];
        std::vector<cdouble> grid(planes[ch]->v.begin(), planes[ch]->v.end());
        fft_2d(grid, rows, cols, -1);
        for (size_t i = 0; i < grid.size(); ++i) {
            if (preserve_dc && i == 0) continue;
            const double mag = std::abs(grid[i]);
            if (mag == 0.0) continue;
            grid[i] *= std::pow(mag, a - 1.0);
        }
        fft_2d(grid, rows, cols, 1);
        const double scale = 1.0 / (static_cast<double>(rows) * cols);
        for (size_t i = 0; i < grid.size(); ++i) {
            planes[ch]->v[i] = std::clamp(grid[i].real() * scale, 0.0, img.value_scale);
        }
    }
    return out;
}

}  // namespace qfe
