#pragma once

#include <array>

#include "qfe/image.hpp"
#include "qfe/qdft.hpp"

namespace qfe {

// Per-channel rooting exponents. All values must lie in (0, 1].
struct AlphaParams {
    std::array<double, 3> rgb{1.0, 1.0, 1.0};

    static AlphaParams uniform(double alpha);
    static AlphaParams channels(double ar, double ag, double ab);

    void validate() const;
    bool is_uniform() const { return rgb[0] == rgb[1] && rgb[1] == rgb[2]; }
};

// Scales every coefficient q -> |q|^(alpha-1) * q in place. Zero coefficients
// stay zero. With preserve_dc the (0,0) coefficient is left untouched.
void alpha_root_spectrum(QSpectrum& spectrum, double alpha, bool preserve_dc = false);

struct QuaternionEnhanceResult {
    RgbImage rgb;            // vector part of the reconstruction
    Plane scalar_part;       // scalar residue of the reconstruction
};

// Full quaternion pipeline: embed, transform, root, invert, split.
// Output channels are clipped to [0, value_scale].
QuaternionEnhanceResult enhance_qdft(const RgbImage& img, double alpha,
                                     ScalarPolicy policy = ScalarPolicy::Zero,
                                     bool preserve_dc = false);

// Same, starting from an already computed forward spectrum (the sweep reuses
// one transform across many alphas).
QuaternionEnhanceResult enhance_qdft_spectrum(const QSpectrum& spectrum, double alpha,
                                              bool preserve_dc = false);

// Channel-by-channel baseline: each channel gets its own complex 2-D DFT,
// magnitudes are rooted, phases kept, and the real part is taken back.
RgbImage enhance_dft_channelwise(const RgbImage& img, const AlphaParams& alpha,
                                 bool preserve_dc = false);

}  // namespace qfe
