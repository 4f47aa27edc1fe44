#pragma once

#include "qfe/image.hpp"

namespace qfe {

/// Two-sided quaternion spectrum, same dimensions as the source image.
/// Coefficient (p, s) is the pixel sum sandwiched between the j-axis row
/// kernel on the left and the k-axis column kernel on the right.
struct QSpectrum {
    int rows = 0;
    int cols = 0;
    double value_scale = 255.0;
    std::vector<Quaternion> coeff;

    QSpectrum() = default;
    QSpectrum(int rows_, int cols_, double scale = 255.0)
        : rows(rows_), cols(cols_), value_scale(scale),
          coeff(Plane::check_dims(rows_, cols_)) {}

    Quaternion& at(int p, int s) { return coeff[static_cast<size_t>(p) * cols + s]; }
    const Quaternion& at(int p, int s) const { return coeff[static_cast<size_t>(p) * cols + s]; }

    Plane component(int idx) const;
};

/// Which side of the pixel both kernels sit on in the one-sided variants.
enum class KernelSide { Left, Right };

/// Direct evaluation of the two-sided transform:
///   F(p,s) = sum_n W_j^{np} * [ sum_m f(n,m) * W_k^{ms} ],
/// with W_j^t = cos(2*pi*t/N) - j*sin(2*pi*t/N) and the k-axis analogue.
/// The bracket depends only on (n, s) and is computed once per pair;
/// summation order per output point matches the literal formula.
QSpectrum qdft_two_sided_naive(const QuaternionImage& f);

/// Same contract as qdft_two_sided_naive, evaluated through one complex
/// 2-D FFT per component plane and a reflected-index recombination.
QSpectrum qdft_two_sided_fast(const QuaternionImage& f);

/// Direct inverse, f(n,m) = (1/NM) sum_p W_j^{-np} [ sum_s F(p,s) W_k^{-ms} ];
/// all normalization lives here.
QuaternionImage iqdft_two_sided_naive(const QSpectrum& F);

/// Fast inverse with the same contract as iqdft_two_sided_naive.
QuaternionImage iqdft_two_sided(const QSpectrum& F);

/// One-sided variant: both single-axis kernels exp(-u*2*pi*np/N) and
/// exp(-u*2*pi*ms/M) multiply the pixel from the chosen side. Direct
/// evaluation only; exists so the placement-dependence of the transform
/// definitions can be demonstrated.
QSpectrum qdft_one_sided_naive(const QuaternionImage& f, Axis axis_unit, KernelSide side);

inline QSpectrum qdft_left_sided_naive(const QuaternionImage& f, Axis axis_unit) {
    return qdft_one_sided_naive(f, axis_unit, KernelSide::Left);
}
inline QSpectrum qdft_right_sided_naive(const QuaternionImage& f, Axis axis_unit) {
    return qdft_one_sided_naive(f, axis_unit, KernelSide::Right);
}

double frobenius_distance(const QSpectrum& x, const QSpectrum& y);
double frobenius_norm(const QSpectrum& x);

}  // namespace qfe
