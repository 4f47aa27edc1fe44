#pragma once

#include <array>
#include <ostream>
#include <string>
#include <vector>

#include "qfe/enhance.hpp"
#include "qfe/image.hpp"
#include "qfe/measures.hpp"

namespace qfe {

struct MeasureConfig {
    int L1 = 8;
    int L2 = 8;
    double eps = 1.0;
};

// Closed alpha range sampled as min, min+step, ... capped at max. The last
// point is clamped onto max so the endpoint is always included.
struct AlphaGrid {
    double min = 0.80;
    double max = 1.00;
    double step = 0.01;

    std::vector<double> points() const;
};

struct SweepResult {
    std::vector<double> alphas;
    std::vector<double> values;
    double best_alpha = 1.0;
    double best_value = 0.0;
};

// CEME of the quaternion-rooted image over the alpha grid. The forward
// transform is computed once and reused for every grid point. Ties go to the
// larger alpha.
SweepResult sweep_qdft(const RgbImage& img, const AlphaGrid& grid,
                       const MeasureConfig& measure = {},
                       ScalarPolicy policy = ScalarPolicy::Zero,
                       bool preserve_dc = false);

// Independent per-channel sweeps maximizing the enhanced channel's EME.
std::array<SweepResult, 3> sweep_dft_channelwise(const RgbImage& img, const AlphaGrid& grid,
                                                 const MeasureConfig& measure = {},
                                                 bool preserve_dc = false);

struct ComparisonRow {
    std::string method;
    double ceme = 0.0;
    std::vector<double> alphas;  // empty, one, or one per channel
    std::vector<double> emes;    // empty or one per channel
};

struct CompareConfig {
    AlphaGrid grid;
    MeasureConfig measure;
    int he_bins = 256;
    bool hist_eq = true;
    bool preserve_dc = false;
    ScalarPolicy policy = ScalarPolicy::Zero;
};

// Five rows: original, quaternion rooting, quaternion rooting + HE,
// channelwise rooting, channelwise rooting + HE. Alphas come from the sweeps.
// With hist_eq off the HE stages become identity.
std::vector<ComparisonRow> run_comparison(const RgbImage& img, const CompareConfig& cfg = {});

// CEME of an enhancement result, scalar residue included (unless zero).
MeasureReport ceme_of(const QuaternionEnhanceResult& res, const MeasureConfig& cfg);
MeasureReport ceme_of(const RgbImage& img, const MeasureConfig& cfg);

void write_sweep_csv(std::ostream& os, const SweepResult& sweep);
void write_channel_sweep_csv(std::ostream& os, const std::array<SweepResult, 3>& sweeps);
void write_comparison_csv(std::ostream& os, const std::vector<ComparisonRow>& rows);
std::string format_comparison_table(const std::vector<ComparisonRow>& rows);

}  // namespace qfe
