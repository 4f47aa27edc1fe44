#include "qfe/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "qfe/fft.hpp"
#include "qfe/hsv.hpp"
#include "qfe/qdft.hpp"

namespace qfe {

std::vector<double> AlphaGrid::points() const {
    if (!(min > 0.0 && max <= 1.0 && min <= max && step > 0.0)) {
        throw std::invalid_argument("alpha grid must satisfy 0 < min <= max <= 1, step > 0");
    }
    std::vector<double> pts;
    for (int i = 0;; ++i) {
        const double a = min + i * step;
        if (a > max + step * 1e-6) break;
        pts.push_back(std::min(a, max));
    }
    return pts;
}

MeasureReport ceme_of(const QuaternionEnhanceResult& res, const MeasureConfig& cfg) {
    // A pure input stays pure through rooting up to float noise; a noise-level
    // scalar plane would pin every block minimum at eps, so it only counts
    // once it carries real signal.
    constexpr double kResidueFloor = 1e-6;
    double peak = 0.0;
    for (double v : res.scalar_part.v) peak = std::max(peak, std::fabs(v));
    std::vector<const Plane*> planes;
    if (peak > kResidueFloor) planes.push_back(&res.scalar_part);
    planes.push_back(&res.rgb.r);
    planes.push_back(&res.rgb.g);
    planes.push_back(&res.rgb.b);
    return ceme(planes, cfg.L1, cfg.L2, cfg.eps);
}

MeasureReport ceme_of(const RgbImage& img, const MeasureConfig& cfg) {
    return ceme_rgb(img, cfg.L1, cfg.L2, cfg.eps);
}

static void pick_best(SweepResult& sweep) {
    sweep.best_alpha = sweep.alphas.front();
    sweep.best_value = sweep.values.front();
    for (size_t i = 1; i < sweep.alphas.size(); ++i) {
        if (sweep.values[i] >= sweep.best_value) {
            sweep.best_value = sweep.values[i];
            sweep.best_alpha = sweep.alphas[i];
        }
    }
}

SweepResult sweep_qdft(const RgbImage& img, const AlphaGrid& grid,
                       const MeasureConfig& measure, ScalarPolicy policy,
                       bool preserve_dc) {
    SweepResult sweep;
    sweep.alphas = grid.points();
    const QSpectrum spectrum = qdft_two_sided_fast(rgb_to_quaternion(img, policy));
    sweep.values.reserve(sweep.alphas.size());
    for (double a : sweep.alphas) {
        const QuaternionEnhanceResult res = enhance_qdft_spectrum(spectrum, a, preserve_dc);
        sweep.values.push_back(ceme_of(res, measure).value);
    }
    pick_best(sweep);
    return sweep;
}

std::array<SweepResult, 3> sweep_dft_channelwise(const RgbImage& img, const AlphaGrid& grid,
                                                 const MeasureConfig& measure,
                                                 bool preserve_dc) {
    const std::vector<double> alphas = grid.points();
    const int rows = img.rows();
    const int cols = img.cols();
    const Plane* channels[3] = {&img.r, &img.g, &img.b};
    std::array<SweepResult, 3> out;
    for (int ch = 0; ch < 3; ++ch) {
        std::vector<cdouble> spectrum(channels[ch]->v.begin(), channels[ch]->v.end());
        fft_2d(spectrum, rows, cols, -1);
        SweepResult& sweep = out[static_cast<size_t>(ch)];
        sweep.alphas = alphas;
        sweep.values.reserve(alphas.size());
        Plane enhanced(rows, cols);
        for (double a : alphas) {
            std::vector<cdouble> rooted = spectrum;
            for (size_t i = 0; i < rooted.size(); ++i) {
                if (preserve_dc && i == 0) continue;
                const double mag = std::abs(rooted[i]);
                if (mag == 0.0) continue;
                rooted[i] *= std::pow(mag, a - 1.0);
            }
            fft_2d(rooted, rows, cols, 1);
            const double scale = 1.0 / (static_cast<double>(rows) * cols);
            for (size_t i = 0; i < rooted.size(); ++i) {
                enhanced.v[i] = std::clamp(rooted[i].real() * scale, 0.0, img.value_scale);
            }
            sweep.values.push_back(eme(enhanced, measure.L1, measure.L2, measure.eps).value);
        }
        pick_best(sweep);
    }
    return out;
}

std::vector<ComparisonRow> run_comparison(const RgbImage& img, const CompareConfig& cfg) {
    std::vector<ComparisonRow> rows;
    rows.reserve(5);

    {
        ComparisonRow row;
        row.method = "original";
        row.ceme = ceme_of(img, cfg.measure).value;
        row.emes = {eme(img.r, cfg.measure.L1, cfg.measure.L2, cfg.measure.eps).value,
                    eme(img.g, cfg.measure.L1, cfg.measure.L2, cfg.measure.eps).value,
                    eme(img.b, cfg.measure.L1, cfg.measure.L2, cfg.measure.eps).value};
        rows.push_back(std::move(row));
    }

    const SweepResult qsweep = sweep_qdft(img, cfg.grid, cfg.measure, cfg.policy, cfg.preserve_dc);
    const QuaternionEnhanceResult qres =
        enhance_qdft(img, qsweep.best_alpha, cfg.policy, cfg.preserve_dc);
    {
        ComparisonRow row;
        row.method = "qdft-alpha";
        row.ceme = ceme_of(qres, cfg.measure).value;
        row.alphas = {qsweep.best_alpha};
        rows.push_back(std::move(row));
    }
    {
        ComparisonRow row;
        row.method = "qdft-alpha+he";
        QuaternionEnhanceResult res = qres;
        if (cfg.hist_eq) res.rgb = hist_eq_v(res.rgb, cfg.he_bins);
        row.ceme = ceme_of(res, cfg.measure).value;
        row.alphas = {qsweep.best_alpha};
        rows.push_back(std::move(row));
    }

    const std::array<SweepResult, 3> csweeps =
        sweep_dft_channelwise(img, cfg.grid, cfg.measure, cfg.preserve_dc);
    const AlphaParams calpha = AlphaParams::channels(
        csweeps[0].best_alpha, csweeps[1].best_alpha, csweeps[2].best_alpha);
    const RgbImage cres = enhance_dft_channelwise(img, calpha, cfg.preserve_dc);
    auto channel_emes = [&](const RgbImage& im) {
        return std::vector<double>{
            eme(im.r, cfg.measure.L1, cfg.measure.L2, cfg.measure.eps).value,
            eme(im.g, cfg.measure.L1, cfg.measure.L2, cfg.measure.eps).value,
            eme(im.b, cfg.measure.L1, cfg.measure.L2, cfg.measure.eps).value};
    };
    {
        ComparisonRow row;
        row.method = "dft-alpha";
        row.ceme = ceme_of(cres, cfg.measure).value;
        row.alphas = {calpha.rgb[0], calpha.rgb[1], calpha.rgb[2]};
        row.emes = channel_emes(cres);
        rows.push_back(std::move(row));
    }
    {
        ComparisonRow row;
        row.method = "dft-alpha+he";
        const RgbImage he = cfg.hist_eq ? hist_eq_v(cres, cfg.he_bins) : cres;
        row.ceme = ceme_of(he, cfg.measure).value;
        row.alphas = {calpha.rgb[0], calpha.rgb[1], calpha.rgb[2]};
        row.emes = channel_emes(he);
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_sweep_csv(std::ostream& os, const SweepResult& sweep) {
    os << "alpha,value\n" << std::setprecision(17);
    for (size_t i = 0; i < sweep.alphas.size(); ++i) {
        os << sweep.alphas[i] << ',' << sweep.values[i] << '\n';
    }
}

void write_channel_sweep_csv(std::ostream& os, const std::array<SweepResult, 3>& sweeps) {
    os << "alpha,eme_r,eme_g,eme_b\n" << std::setprecision(17);
    for (size_t i = 0; i < sweeps[0].alphas.size(); ++i) {
        os << sweeps[0].alphas[i] << ',' << sweeps[0].values[i] << ','
           << sweeps[1].values[i] << ',' << sweeps[2].values[i] << '\n';
    }
}

void write_comparison_csv(std::ostream& os, const std::vector<ComparisonRow>& rows) {
    os << "method,ceme,alpha,alpha_r,alpha_g,alpha_b,eme_r,eme_g,eme_b\n"
       << std::setprecision(17);
    for (const ComparisonRow& row : rows) {
        os << row.method << ',' << row.ceme << ',';
        if (row.alphas.size() == 1) os << row.alphas[0];
        os << ',';
        for (int c = 0; c < 3; ++c) {
            if (row.alphas.size() == 3) os << row.alphas[static_cast<size_t>(c)];
            os << ',';
        }
        for (int c = 0; c < 3; ++c) {
            if (row.emes.size() == 3) os << row.emes[static_cast<size_t>(c)];
            if (c < 2) os << ',';
        }
        os << '\n';
    }
}

std::string format_comparison_table(const std::vector<ComparisonRow>& rows) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(4);
    os << std::left << std::setw(16) << "method" << std::right << std::setw(10) << "ceme"
       << "  " << std::left << std::setw(20) << "alpha" << "eme (r, g, b)\n";
    for (const ComparisonRow& row : rows) {
        os << std::left << std::setw(16) << row.method << std::right << std::setw(10)
           << row.ceme << "  ";
        std::ostringstream alpha;
        alpha << std::fixed << std::setprecision(2);
        for (size_t i = 0; i < row.alphas.size(); ++i) {
            if (i) alpha << ", ";
            alpha << row.alphas[i];
        }
        if (row.alphas.empty()) alpha << "-";
        os << std::left << std::setw(20) << alpha.str();
        if (row.emes.size() == 3) {
            os << row.emes[0] << ", " << row.emes[1] << ", " << row.emes[2];
        } else {
            os << "-";
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace qfe
