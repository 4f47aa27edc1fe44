#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "qfe/enhance.hpp"
#include "qfe/hsv.hpp"
#include "qfe/image_io.hpp"
#include "qfe/measures.hpp"
#include "qfe/pipeline.hpp"

namespace {

constexpr int kExitArgs = 2;
constexpr int kExitIo = 3;
constexpr int kExitNumeric = 4;

struct BlockSpec {
    int L1 = 8;
    int L2 = 8;
};

BlockSpec parse_block(const std::string& text) {
    BlockSpec b;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%dx%d%c", &b.L1, &b.L2, &extra) != 2) {
        throw CLI::ValidationError("--block", "expected L1xL2, e.g. 8x8");
    }
    return b;
}

qfe::ScalarPolicy parse_policy(const std::string& name) {
    return name == "gray-mean" ? qfe::ScalarPolicy::GrayMean : qfe::ScalarPolicy::Zero;
}

qfe::ImageFormat parse_format(const std::string& name) {
    if (name == "png") return qfe::ImageFormat::Png;
    if (name == "bmp") return qfe::ImageFormat::Bmp;
    if (name == "tiff") return qfe::ImageFormat::Tiff;
    if (name == "jpg") return qfe::ImageFormat::Jpeg;
    return qfe::ImageFormat::Auto;
}

void write_text_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path tmp(path);
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out.write(content.data(), static_cast<std::streamsize>(content.size()))) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw qfe::IoError(qfe::IoErrorKind::WriteFailure, "failed to write: " + path);
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw qfe::IoError(qfe::IoErrorKind::WriteFailure,
                           "failed to move output into place: " + path);
    }
}

struct Options {
    std::string input;
    std::string output;
    std::string method = "qdft-alpha";
    double alpha = 1.0;
    double alpha_r = -1.0;
    double alpha_g = -1.0;
    double alpha_b = -1.0;
    bool hist_eq = false;
    bool no_hist_eq = false;
    bool rgb_naive_he = false;
    std::string block = "8x8";
    double eps = 1.0;
    double alpha_min = 0.80;
    double alpha_max = 1.00;
    double alpha_step = 0.01;
    bool preserve_dc = false;
    std::string scalar_policy = "zero";
    std::string csv_out;
    std::string format = "auto";
    std::string measure_kind = "ceme";
};

qfe::MeasureConfig measure_config(const Options& opt) {
    const BlockSpec b = parse_block(opt.block);
    return qfe::MeasureConfig{b.L1, b.L2, opt.eps};
}

int cmd_enhance(const Options& opt) {
    const qfe::RgbImage input = qfe::load_image(opt.input);
    const qfe::MeasureConfig mc = measure_config(opt);
    const qfe::ScalarPolicy policy = parse_policy(opt.scalar_policy);

    const double ar = opt.alpha_r >= 0.0 ? opt.alpha_r : opt.alpha;
    const double ag = opt.alpha_g >= 0.0 ? opt.alpha_g : opt.alpha;
    const double ab = opt.alpha_b >= 0.0 ? opt.alpha_b : opt.alpha;

    qfe::RgbImage enhanced;
    qfe::Plane scalar_residue;
    if (opt.method == "qdft-alpha") {
        qfe::QuaternionEnhanceResult res =
            qfe::enhance_qdft(input, opt.alpha, policy, opt.preserve_dc);
        enhanced = std::move(res.rgb);
        scalar_residue = std::move(res.scalar_part);
    } else {
        enhanced = qfe::enhance_dft_channelwise(
            input, qfe::AlphaParams::channels(ar, ag, ab), opt.preserve_dc);
        scalar_residue = qfe::Plane(input.rows(), input.cols());
    }
    if (opt.rgb_naive_he) {
        enhanced = qfe::hist_eq_rgb_naive(enhanced);
    } else if (opt.hist_eq) {
        enhanced = qfe::hist_eq_v(enhanced);
    }

    const double ceme_in = qfe::ceme_of(input, mc).value;
    qfe::QuaternionEnhanceResult measured;
    measured.rgb = enhanced;
    measured.scalar_part = scalar_residue;
    const double ceme_out = qfe::ceme_of(measured, mc).value;

    qfe::save_image(enhanced, opt.output, parse_format(opt.format));

    std::cout << std::fixed << std::setprecision(4);
    std::cout << "ceme original: " << ceme_in << '\n';
    std::cout << "ceme enhanced: " << ceme_out << '\n';
    return 0;
}

int cmd_sweep(const Options& opt) {
    const qfe::RgbImage input = qfe::load_image(opt.input);
    const qfe::MeasureConfig mc = measure_config(opt);
    const qfe::AlphaGrid grid{opt.alpha_min, opt.alpha_max, opt.alpha_step};

    std::ostringstream csv;
    std::ostringstream best;
    best << std::fixed << std::setprecision(2);
    if (opt.method == "qdft-alpha") {
        const qfe::SweepResult sweep = qfe::sweep_qdft(
            input, grid, mc, parse_policy(opt.scalar_policy), opt.preserve_dc);
        qfe::write_sweep_csv(csv, sweep);
        best << "best alpha: " << sweep.best_alpha << '\n';
    } else {
        const std::array<qfe::SweepResult, 3> sweeps =
            qfe::sweep_dft_channelwise(input, grid, mc, opt.preserve_dc);
        qfe::write_channel_sweep_csv(csv, sweeps);
        best << "best alpha r: " << sweeps[0].best_alpha
             << " g: " << sweeps[1].best_alpha
             << " b: " << sweeps[2].best_alpha << '\n';
    }
    if (opt.csv_out.empty()) {
        std::cout << csv.str();
    } else {
        write_text_atomic(opt.csv_out, csv.str());
    }
    std::cout << best.str();
    return 0;
}

int cmd_measure(const Options& opt) {
    const qfe::RgbImage input = qfe::load_image(opt.input);
    const qfe::MeasureConfig mc = measure_config(opt);
    std::cout << std::fixed << std::setprecision(4);
    if (opt.measure_kind == "eme") {
        const double r = qfe::eme(input.r, mc.L1, mc.L2, mc.eps).value;
        const double g = qfe::eme(input.g, mc.L1, mc.L2, mc.eps).value;
        const double b = qfe::eme(input.b, mc.L1, mc.L2, mc.eps).value;
        std::cout << "eme r: " << r << " g: " << g << " b: " << b << '\n';
    } else {
        const double value = qfe::ceme_of(input, mc).value;
        std::cout << "ceme: " << value << '\n';
    }
    return 0;
}

int cmd_compare(const Options& opt) {
    const qfe::RgbImage input = qfe::load_image(opt.input);
    qfe::CompareConfig cfg;
    cfg.grid = qfe::AlphaGrid{opt.alpha_min, opt.alpha_max, opt.alpha_step};
    cfg.measure = measure_config(opt);
    cfg.hist_eq = !opt.no_hist_eq;
    cfg.preserve_dc = opt.preserve_dc;
    cfg.policy = parse_policy(opt.scalar_policy);

    const std::vector<qfe::ComparisonRow> rows = qfe::run_comparison(input, cfg);
    if (!opt.csv_out.empty()) {
        std::ostringstream csv;
        qfe::write_comparison_csv(csv, rows);
        write_text_atomic(opt.csv_out, csv.str());
    }
    std::cout << qfe::format_comparison_table(rows);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Color image enhancement by quaternion spectral alpha-rooting"};
    app.require_subcommand(1);

    Options opt;
    const auto method_check = CLI::IsMember({"qdft-alpha", "dft-alpha"});
    const auto block_check = CLI::Validator(
        [](std::string& s) {
            parse_block(s);
            return std::string();
        },
        "L1xL2");
    const auto policy_check = CLI::IsMember({"zero", "gray-mean"});
    const auto format_check = CLI::IsMember({"auto", "png", "bmp", "tiff", "jpg"});

    CLI::App* enhance = app.add_subcommand("enhance", "Enhance one image and write the result");
    enhance->add_option("input", opt.input, "input image")->required();
    enhance->add_option("output", opt.output, "output image")->required();
    enhance->add_option("--method", opt.method, "qdft-alpha or dft-alpha")->check(method_check);
    enhance->add_option("--alpha", opt.alpha, "rooting exponent in (0,1]");
    enhance->add_option("--alpha-r", opt.alpha_r, "per-channel exponent (dft-alpha)");
    enhance->add_option("--alpha-g", opt.alpha_g, "per-channel exponent (dft-alpha)");
    enhance->add_option("--alpha-b", opt.alpha_b, "per-channel exponent (dft-alpha)");
    enhance->add_flag("--hist-eq", opt.hist_eq, "equalize the V channel afterwards");
    enhance->add_flag("--hist-eq-rgb-naive", opt.rgb_naive_he,
                      "diagnostic: per-channel equalization, shifts hues");
    enhance->add_option("--block", opt.block, "measure block size L1xL2")->check(block_check);
    enhance->add_option("--eps", opt.eps, "measure epsilon floor");
    enhance->add_flag("--preserve-dc", opt.preserve_dc, "leave the DC coefficient unrooted");
    enhance->add_option("--scalar-policy", opt.scalar_policy, "zero or gray-mean")
        ->check(policy_check);
    enhance->add_option("--format", opt.format, "output format override")->check(format_check);

    CLI::App* sweep = app.add_subcommand("sweep", "Scan alpha and report the best value");
    sweep->add_option("input", opt.input, "input image")->required();
    sweep->add_option("--method", opt.method, "qdft-alpha or dft-alpha")->check(method_check);
    sweep->add_option("--alpha-min", opt.alpha_min, "grid start");
    sweep->add_option("--alpha-max", opt.alpha_max, "grid end");
    sweep->add_option("--alpha-step", opt.alpha_step, "grid step");
    sweep->add_option("--block", opt.block, "measure block size L1xL2")->check(block_check);
    sweep->add_option("--eps", opt.eps, "measure epsilon floor");
    sweep->add_flag("--preserve-dc", opt.preserve_dc, "leave the DC coefficient unrooted");
    sweep->add_option("--scalar-policy", opt.scalar_policy, "zero or gray-mean")
        ->check(policy_check);
    sweep->add_option("--csv-out", opt.csv_out, "write the curve as CSV here");

    CLI::App* measure = app.add_subcommand("measure", "Print CEME or per-channel EME");
    measure->add_option("input", opt.input, "input image")->required();
    measure->add_option("--kind", opt.measure_kind, "ceme or eme")
        ->check(CLI::IsMember({"ceme", "eme"}));
    measure->add_option("--block", opt.block, "measure block size L1xL2")->check(block_check);
    measure->add_option("--eps", opt.eps, "measure epsilon floor");

    CLI::App* compare = app.add_subcommand("compare", "Five-row method comparison table");
    compare->add_option("input", opt.input, "input image")->required();
    compare->add_option("--alpha-min", opt.alpha_min, "grid start");
    compare->add_option("--alpha-max", opt.alpha_max, "grid end");
    compare->add_option("--alpha-step", opt.alpha_step, "grid step");
    compare->add_option("--block", opt.block, "measure block size L1xL2")->check(block_check);
    compare->add_option("--eps", opt.eps, "measure epsilon floor");
    compare->add_flag("--no-hist-eq", opt.no_hist_eq, "skip the equalized rows' HE stage");
    compare->add_flag("--preserve-dc", opt.preserve_dc, "leave the DC coefficient unrooted");
    compare->add_option("--scalar-policy", opt.scalar_policy, "zero or gray-mean")
        ->check(policy_check);
    compare->add_option("--csv-out", opt.csv_out, "write the table as CSV here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitArgs;
    }

    try {
        if (enhance->parsed()) return cmd_enhance(opt);
        if (sweep->parsed()) return cmd_sweep(opt);
        if (measure->parsed()) return cmd_measure(opt);
        return cmd_compare(opt);
    } catch (const qfe::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
