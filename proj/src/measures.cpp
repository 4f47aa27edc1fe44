#include "qfe/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qfe {

BlockGrid BlockGrid::fit(int rows, int cols, int L1, int L2) {
    if (L1 < 1 || L2 < 1) {
        throw std::invalid_argument("block size must be positive");
    }
    BlockGrid g;
    g.L1 = L1;
    g.L2 = L2;
    g.k1 = rows / L1;
    g.k2 = cols / L2;
    if (g.k1 < 1 || g.k2 < 1) {
        throw std::invalid_argument("image smaller than one block");
    }
    return g;
}

static double blockwise_log_ratio(const std::vector<const Plane*>& planes,
                                  const BlockGrid& g, double eps) {
    double total = 0.0;
    for (int k = 0; k < g.k1; ++k) {
        for (int l = 0; l < g.k2; ++l) {
            double mx = planes[0]->at(k * g.L1, l * g.L2);
            double mn = mx;
            for (const Plane* p : planes) {
                for (int n = k * g.L1; n < (k + 1) * g.L1; ++n) {
                    for (int m = l * g.L2; m < (l + 1) * g.L2; ++m) {
                        const double v = p->at(n, m);
                        mx = std::max(mx, v);
                        mn = std::min(mn, v);
                    }
                }
            }
            if (mx < eps) continue;
            total += 20.0 * std::log10(mx / std::max(mn, eps));
        }
    }
    return total / (static_cast<double>(g.k1) * g.k2);
}

MeasureReport eme(const Plane& channel, int L1, int L2, double eps) {
    if (!(eps > 0.0)) {
        throw std::invalid_argument("eps must be positive");
    }
    MeasureReport rep;
    rep.kind = MeasureKind::EME;
    rep.grid = BlockGrid::fit(channel.rows, channel.cols, L1, L2);
    rep.epsilon_used = eps;
    rep.value = blockwise_log_ratio({&channel}, rep.grid, eps);
    return rep;
}

MeasureReport ceme(const std::vector<const Plane*>& planes, int L1, int L2,
                   double eps, bool include_zero_scalar) {
    if (planes.empty()) {
        throw std::invalid_argument("ceme needs at least one plane");
    }
    if (!(eps > 0.0)) {
        throw std::invalid_argument("eps must be positive");
    }
    for (const Plane* p : planes) {
        if (!p->same_shape(*planes.front())) {
            throw std::invalid_argument("ceme planes must share one shape");
        }
    }
    std::vector<const Plane*> included;
    for (const Plane* p : planes) {
        const bool zero = std::all_of(p->v.begin(), p->v.end(),
                                      [](double v) { return v == 0.0; });
        if (zero && !include_zero_scalar) continue;
        included.push_back(p);
    }
    if (included.empty()) included.push_back(planes.front());

    MeasureReport rep;
    rep.kind = MeasureKind::CEME;
    rep.grid = BlockGrid::fit(planes.front()->rows, planes.front()->cols, L1, L2);
    rep.epsilon_used = eps;
    rep.value = blockwise_log_ratio(included, rep.grid, eps);
    return rep;
}

MeasureReport ceme_rgb(const RgbImage& img, int L1, int L2, double eps) {
    return ceme({&img.r, &img.g, &img.b}, L1, L2, eps);
}

}  // namespace qfe
