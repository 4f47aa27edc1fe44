#include "qfe/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace qfe {
namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_pow2(size_t n) { return n != 0 && (n & (n - 1)) == 0; }

size_t next_pow2(size_t n) {
    size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// Iterative radix-2 Cooley-Tukey. Every twiddle is read from one table of
// directly evaluated roots of unity, which keeps the roundoff near machine
// precision instead of accumulating through repeated multiplication.
void fft_pow2(cdouble* x, size_t n, int sign) {
    if (n < 2) return;
    // bit-reversal permutation
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    std::vector<cdouble> roots(n / 2);
    const double base = sign * 2.0 * kPi / static_cast<double>(n);
    for (size_t k = 0; k < n / 2; ++k)
        roots[k] = std::polar(1.0, base * static_cast<double>(k));
    for (size_t len = 2; len <= n; len <<= 1) {
        const size_t half = len / 2;
        const size_t stride = n / len;
        for (size_t i = 0; i < n; i += len) {
            for (size_t k = 0; k < half; ++k) {
                const cdouble w = roots[k * stride];
                const cdouble u = x[i + k];
                const cdouble t = w * x[i + k + half];
                x[i + k] = u + t;
                x[i + k + half] = u - t;
            }
        }
    }
}

// Bluestein's algorithm: nk = (n^2 + k^2 - (k - n)^2) / 2 turns the DFT
// into a linear convolution with the chirp exp(sign*i*pi*t^2/n), which is
// evaluated circularly at a power-of-two length >= 2n - 1. t^2 is reduced
// mod 2n in integer arithmetic before the angle is formed.
void bluestein(std::vector<cdouble>& x, int sign) {
    const size_t n = x.size();
    const long long two_n = 2 * static_cast<long long>(n);
    std::vector<cdouble> chirp(n);
    for (size_t t = 0; t < n; ++t) {
        const long long sq = (static_cast<long long>(t) * static_cast<long long>(t)) % two_n;
        chirp[t] = std::polar(1.0, sign * kPi * static_cast<double>(sq) / static_cast<double>(n));
    }

    const size_t len = next_pow2(2 * n - 1);
    std::vector<cdouble> a(len, cdouble{0.0, 0.0});
    std::vector<cdouble> b(len, cdouble{0.0, 0.0});
    for (size_t t = 0; t < n; ++t) a[t] = x[t] * chirp[t];
    b[0] = std::conj(chirp[0]);
    for (size_t t = 1; t < n; ++t) b[t] = b[len - t] = std::conj(chirp[t]);

    fft_pow2(a.data(), len, -1);
    fft_pow2(b.data(), len, -1);
    for (size_t t = 0; t < len; ++t) a[t] *= b[t];
    fft_pow2(a.data(), len, +1);

    const double inv_len = 1.0 / static_cast<double>(len);
    for (size_t k = 0; k < n; ++k) x[k] = a[k] * inv_len * chirp[k];
}

}  // namespace

void fft(std::vector<cdouble>& x, int sign) {
    if (x.empty()) throw std::invalid_argument("fft of empty sequence");
    if (is_pow2(x.size())) {
        fft_pow2(x.data(), x.size(), sign);
    } else {
        bluestein(x, sign);
    }
}

void fft_2d(std::vector<cdouble>& grid, int rows, int cols, int sign) {
    if (rows < 1 || cols < 1 || grid.size() != static_cast<size_t>(rows) * cols)
        throw std::invalid_argument("fft_2d grid does not match its dimensions");
    std::vector<cdouble> tmp;
    tmp.resize(static_cast<size_t>(cols));
    for (int r = 0; r < rows; ++r) {
        tmp.assign(grid.begin() + static_cast<size_t>(r) * cols,
                   grid.begin() + static_cast<size_t>(r + 1) * cols);
        fft(tmp, sign);
        std::copy(tmp.begin(), tmp.end(), grid.begin() + static_cast<size_t>(r) * cols);
    }
    tmp.resize(static_cast<size_t>(rows));
    for (int c = 0; c < cols; ++c) {
        for (int r = 0; r < rows; ++r) tmp[r] = grid[static_cast<size_t>(r) * cols + c];
        fft(tmp, sign);
        for (int r = 0; r < rows; ++r) grid[static_cast<size_t>(r) * cols + c] = tmp[r];
    }
}

}  // namespace qfe
