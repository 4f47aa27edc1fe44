#include "qfe/hsv.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace qfe {

HsvImage rgb_to_hsv(const RgbImage& img) {
    HsvImage out;
    out.h = Plane(img.rows(), img.cols());
    out.s = Plane(img.rows(), img.cols());
    out.v = Plane(img.rows(), img.cols());
    out.value_scale = img.value_scale;
    const double inv = 1.0 / img.value_scale;
    for (size_t i = 0; i < img.r.v.size(); ++i) {
        const double r = img.r.v[i] * inv;
        const double g = img.g.v[i] * inv;
        const double b = img.b.v[i] * inv;
        const double mx = std::max({r, g, b});
        const double mn = std::min({r, g, b});
        const double delta = mx - mn;
        double h = 0.0;
        if (delta > 0.0) {
            if (mx == r) {
                h = 60.0 * ((g - b) / delta);
            } else if (mx == g) {
                h = 60.0 * ((b - r) / delta + 2.0);
            } else {
                h = 60.0 * ((r - g) / delta + 4.0);
            }
            if (h < 0.0) h += 360.0;
            if (h >= 360.0) h -= 360.0;
        }
        out.h.v[i] = h;
        out.s.v[i] = mx > 0.0 ? delta / mx : 0.0;
        out.v.v[i] = mx;
    }
    return out;
}

RgbImage hsv_to_rgb(const HsvImage& img) {
    RgbImage out;
    out.r = Plane(img.rows(), img.cols());
    out.g = Plane(img.rows(), img.cols());
    out.b = Plane(img.rows(), img.cols());
    out.value_scale = img.value_scale;
    for (size_t i = 0; i < img.h.v.size(); ++i) {
        const double h = img.h.v[i];
        const double s = img.s.v[i];
        const double v = img.v.v[i];
        const double c = v * s;
        const double hp = h / 60.0;
        const double x = c * (1.0 - std::fabs(std::fmod(hp, 2.0) - 1.0));
        double r = 0.0, g = 0.0, b = 0.0;
        switch (static_cast<int>(hp)) {
            case 0: r = c; g = x; break;
            case 1: r = x; g = c; break;
            case 2: g = c; b = x; break;
            case 3: g = x; b = c; break;
            case 4: r = x; b = c; break;
            default: r = c; b = x; break;
        }
        const double m = v - c;
        out.r.v[i] = (r + m) * img.value_scale;
        out.g.v[i] = (g + m) * img.value_scale;
        out.b.v[i] = (b + m) * img.value_scale;
    }
    return out;
}

HsvImage equalize_v(const HsvImage& img, int bins) {
    if (bins < 2) {
        throw std::invalid_argument("bins must be at least 2");
    }
    HsvImage out = img;
    std::vector<long long> hist(static_cast<size_t>(bins), 0);
    auto bin_of = [bins](double v) {
        const int b = static_cast<int>(v * bins);
        return static_cast<size_t>(std::clamp(b, 0, bins - 1));
    };
    for (double v : img.v.v) hist[bin_of(v)]++;

    std::vector<long long> cdf(hist.size(), 0);
    long long run = 0;
    for (size_t b = 0; b < hist.size(); ++b) {
        run += hist[b];
        cdf[b] = run;
    }
    const long long total = run;
    long long cdf_min = 0;
    for (long long c : cdf) {
        if (c > 0) {
            cdf_min = c;
            break;
        }
    }
    if (total <= cdf_min) {
        return out;
    }
    const double denom = static_cast<double>(total - cdf_min);
    for (size_t i = 0; i < out.v.v.size(); ++i) {
        const long long c = cdf[bin_of(img.v.v[i])];
        out.v.v[i] = static_cast<double>(c - cdf_min) / denom;
    }
    return out;
}

RgbImage hist_eq_v(const RgbImage& img, int bins) {
    RgbImage out = hsv_to_rgb(equalize_v(rgb_to_hsv(img), bins));
    for (Plane* p : {&out.r, &out.g, &out.b}) {
        for (double& v : p->v) v = std::clamp(v, 0.0, out.value_scale);
    }
    return out;
}

RgbImage hist_eq_rgb_naive(const RgbImage& img, int bins) {
    if (bins < 2) {
        throw std::invalid_argument("bins must be at least 2");
    }
    RgbImage out = img;
    for (Plane* p : {&out.r, &out.g, &out.b}) {
        std::vector<long long> hist(static_cast<size_t>(bins), 0);
        auto bin_of = [&](double v) {
            const int b = static_cast<int>(v / img.value_scale * bins);
            return static_cast<size_t>(std::clamp(b, 0, bins - 1));
        };
        for (double v : p->v) hist[bin_of(v)]++;
        std::vector<long long> cdf(hist.size(), 0);
        long long run = 0;
        for (size_t b = 0; b < hist.size(); ++b) {
            run += hist[b];
            cdf[b] = run;
        }
        long long cdf_min = 0;
        for (long long c : cdf) {
            if (c > 0) {
                cdf_min = c;
                break;
            }
        }
        if (run <= cdf_min) continue;
        const double denom = static_cast<double>(run - cdf_min);
        for (double& v : p->v) {
            const long long c = cdf[bin_of(v)];
            v = static_cast<double>(c - cdf_min) / denom * img.value_scale;
        }
    }
    return out;
}

}  // namespace qfe
