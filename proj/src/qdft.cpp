#include "qfe/qdft.hpp"

#include <cmath>

#include "qfe/fft.hpp"

namespace qfe {
namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

// Kernel table W^t for t = 0..len-1 on the given axis; the exponent of a
// kernel application is reduced mod len before lookup, so angles never
// leave [0, 2*pi) and the trig stays fully accurate.
std::vector<Quaternion> kernel_table(Axis axis, int len, int sign) {
    std::vector<Quaternion> w(static_cast<size_t>(len));
    for (int t = 0; t < len; ++t)
        w[static_cast<size_t>(t)] = exp_unit(axis, sign * kTwoPi * t / len);
    return w;
}

size_t red(int a, int b, int len) {
    return static_cast<size_t>((static_cast<long long>(a) * b) % len);
}

// The four cos/sin sums of one real plane:
//   cc(p,s) = sum x(n,m) cosA cosB,  ss = sum x sinA sinB,
//   sc(p,s) = sum x sinA cosB,       cs = sum x cosA sinB,
// with A = 2*pi*np/N, B = 2*pi*ms/M. One complex 2-D DFT G of the plane
// carries all four: G(p,s) = (cc - ss) - i(sc + cs), and reflecting the
// second index (B -> -B) gives G(p,(M-s)%M) = (cc + ss) - i(sc - cs).
struct TrigSums {
    Plane cc, ss, sc, cs;
};

TrigSums trig_sums_2d(const Plane& x) {
    const int N = x.rows, M = x.cols;
    std::vector<cdouble> g(x.v.begin(), x.v.end());
    fft_2d(g, N, M, -1);

    TrigSums t{Plane(N, M), Plane(N, M), Plane(N, M), Plane(N, M)};
    for (int p = 0; p < N; ++p) {
        for (int s = 0; s < M; ++s) {
            const cdouble gd = g[static_cast<size_t>(p) * M + s];
            const cdouble gr = g[static_cast<size_t>(p) * M + (M - s) % M];
            t.cc.at(p, s) = 0.5 * (gd.real() + gr.real());
            t.ss.at(p, s) = 0.5 * (gr.real() - gd.real());
            t.sc.at(p, s) = -0.5 * (gd.imag() + gr.imag());
            t.cs.at(p, s) = 0.5 * (gr.imag() - gd.imag());
        }
    }
    return t;
}

// Expanding W_j^A * u * W_k^B for each basis unit u and collecting the
// component planes gives a fixed sign table. Forward kernels (cos - u sin):
//   u=1: cosAcosB + i sinAsinB - j sinAcosB - k cosAsinB
//   u=i: sinAsinB + i cosAcosB + j cosAsinB + k sinAcosB
//   u=j: sinAcosB - i cosAsinB + j cosAcosB - k sinAsinB
//   u=k: cosAsinB - i sinAcosB - j sinAsinB + k cosAcosB
// The inverse kernels (cos + u sin) flip the sign of every term with an
// odd number of sin factors.
void recombine(const TrigSums& a, const TrigSums& b, const TrigSums& c, const TrigSums& d,
               bool inverse, double scale, std::vector<Quaternion>& out) {
    const size_t n = out.size();
    const double f = inverse ? -1.0 : 1.0;  // inverse flips every single-sin term
    for (size_t i = 0; i < n; ++i) {
        const double qa = a.cc.v[i] + b.ss.v[i] + f * (c.sc.v[i] + d.cs.v[i]);
        const double qb = a.ss.v[i] + b.cc.v[i] - f * (c.cs.v[i] + d.sc.v[i]);
        const double qc = c.cc.v[i] - d.ss.v[i] + f * (b.cs.v[i] - a.sc.v[i]);
        const double qd = d.cc.v[i] - c.ss.v[i] + f * (b.sc.v[i] - a.cs.v[i]);
        out[i] = Quaternion{qa, qb, qc, qd} * scale;
    }
}

}  // namespace

Plane QSpectrum::component(int idx) const {
    Plane out(rows, cols);
    for (size_t i = 0; i < coeff.size(); ++i) {
        const Quaternion& q = coeff[i];
        out.v[i] = idx == 0 ? q.a : idx == 1 ? q.b : idx == 2 ? q.c : q.d;
    }
    return out;
}

QSpectrum qdft_two_sided_naive(const QuaternionImage& f) {
    const int N = f.rows, M = f.cols;
    const auto wj = kernel_table(Axis::J, N, +1);
    const auto wk = kernel_table(Axis::K, M, +1);

    // inner bracket, one quaternion per (n, s)
    std::vector<Quaternion> inner(static_cast<size_t>(N) * M);
    for (int n = 0; n < N; ++n) {
        for (int s = 0; s < M; ++s) {
            Quaternion acc{};
            for (int m = 0; m < M; ++m) acc += f.at(n, m) * wk[red(m, s, M)];
            inner[static_cast<size_t>(n) * M + s] = acc;
        }
    }

    QSpectrum F(N, M, f.value_scale);
    for (int p = 0; p < N; ++p) {
        for (int s = 0; s < M; ++s) {
            Quaternion acc{};
            for (int n = 0; n < N; ++n)
                acc += wj[red(n, p, N)] * inner[static_cast<size_t>(n) * M + s];
            F.at(p, s) = acc;
        }
    }
    return F;
}

QuaternionImage iqdft_two_sided_naive(const QSpectrum& F) {
    const int N = F.rows, M = F.cols;
    const auto wj = kernel_table(Axis::J, N, -1);
    const auto wk = kernel_table(Axis::K, M, -1);

    std::vector<Quaternion> inner(static_cast<size_t>(N) * M);
    for (int p = 0; p < N; ++p) {
        for (int m = 0; m < M; ++m) {
            Quaternion acc{};
            for (int s = 0; s < M; ++s) acc += F.at(p, s) * wk[red(m, s, M)];
            inner[static_cast<size_t>(p) * M + m] = acc;
        }
    }

    QuaternionImage f(N, M, F.value_scale);
    const double norm = 1.0 / (static_cast<double>(N) * M);
    for (int n = 0; n < N; ++n) {
        for (int m = 0; m < M; ++m) {
            Quaternion acc{};
            for (int p = 0; p < N; ++p)
                acc += wj[red(n, p, N)] * inner[static_cast<size_t>(p) * M + m];
            f.at(n, m) = acc * norm;
        }
    }
    return f;
}

QSpectrum qdft_two_sided_fast(const QuaternionImage& f) {
    const TrigSums a = trig_sums_2d(f.component(0));
    const TrigSums b = trig_sums_2d(f.component(1));
    const TrigSums c = trig_sums_2d(f.component(2));
    const TrigSums d = trig_sums_2d(f.component(3));
    QSpectrum F(f.rows, f.cols, f.value_scale);
    recombine(a, b, c, d, false, 1.0, F.coeff);
    return F;
}

QuaternionImage iqdft_two_sided(const QSpectrum& F) {
    const TrigSums a = trig_sums_2d(F.component(0));
    const TrigSums b = trig_sums_2d(F.component(1));
    const TrigSums c = trig_sums_2d(F.component(2));
    const TrigSums d = trig_sums_2d(F.component(3));
    QuaternionImage f(F.rows, F.cols, F.value_scale);
    const double norm = 1.0 / (static_cast<double>(F.rows) * F.cols);
    recombine(a, b, c, d, true, norm, f.pix);
    return f;
}

QSpectrum qdft_one_sided_naive(const QuaternionImage& f, Axis axis_unit, KernelSide side) {
    const int N = f.rows, M = f.cols;
    const auto wrow = kernel_table(axis_unit, N, +1);
    const auto wcol = kernel_table(axis_unit, M, +1);

    std::vector<Quaternion> inner(static_cast<size_t>(N) * M);
    for (int n = 0; n < N; ++n) {
        for (int s = 0; s < M; ++s) {
            Quaternion acc{};
            if (side == KernelSide::Left) {
                for (int m = 0; m < M; ++m) acc += wcol[red(m, s, M)] * f.at(n, m);
            } else {
                for (int m = 0; m < M; ++m) acc += f.at(n, m) * wcol[red(m, s, M)];
            }
            inner[static_cast<size_t>(n) * M + s] = acc;
        }
    }

    QSpectrum F(N, M, f.value_scale);
    for (int p = 0; p < N; ++p) {
        for (int s = 0; s < M; ++s) {
            Quaternion acc{};
            if (side == KernelSide::Left) {
                for (int n = 0; n < N; ++n)
                    acc += wrow[red(n, p, N)] * inner[static_cast<size_t>(n) * M + s];
            } else {
                for (int n = 0; n < N; ++n)
                    acc += inner[static_cast<size_t>(n) * M + s] * wrow[red(n, p, N)];
            }
            F.at(p, s) = acc;
        }
    }
    return F;
}

double frobenius_norm(const QSpectrum& x) {
    double acc = 0.0;
    for (const Quaternion& q : x.coeff) acc += q.norm();
    return std::sqrt(acc);
}

double frobenius_distance(const QSpectrum& x, const QSpectrum& y) {
    if (x.rows != y.rows || x.cols != y.cols)
        throw std::invalid_argument("spectrum shapes differ");
    double acc = 0.0;
    for (size_t i = 0; i < x.coeff.size(); ++i) acc += (x.coeff[i] - y.coeff[i]).norm();
    return std::sqrt(acc);
}

}  // namespace qfe
