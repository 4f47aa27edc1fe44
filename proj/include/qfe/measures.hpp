#pragma once

#include <string>
#include <vector>

#include "qfe/image.hpp"

namespace qfe {

// Block layout over an N x M grid. Trailing rows/columns that do not fill a
// whole block are excluded.
struct BlockGrid {
    int L1 = 8;
    int L2 = 8;
    int k1 = 0;
    int k2 = 0;

    static BlockGrid fit(int rows, int cols, int L1, int L2);
};

enum class MeasureKind { EME, CEME };

struct MeasureReport {
    MeasureKind kind = MeasureKind::EME;
    double value = 0.0;
    BlockGrid grid;
    double epsilon_used = 1.0;
};

// Mean over blocks of 20*log10(blockMAX / max(blockMIN, eps)) for one
// channel. Blocks whose MAX falls below eps contribute 0.
MeasureReport eme(const Plane& channel, int L1 = 8, int L2 = 8, double eps = 1.0);

// Same log-ratio with MAX/MIN taken jointly over all included planes. An
// identically zero plane is dropped unless include_zero_scalar is set, so a
// pure-quaternion image does not pin every block minimum to 0.
MeasureReport ceme(const std::vector<const Plane*>& planes, int L1 = 8, int L2 = 8,
                   double eps = 1.0, bool include_zero_scalar = false);

MeasureReport ceme_rgb(const RgbImage& img, int L1 = 8, int L2 = 8, double eps = 1.0);

}  // namespace qfe
