#include "qfe/image_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <vector>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

namespace qfe {

namespace fs = std::filesystem;

RgbImage load_image(const std::string& path) {
    std::error_code ec;
    if (!fs::exists(path, ec) || ec) {
        throw IoError(IoErrorKind::Unreadable, "cannot read input file: " + path);
    }
    cv::Mat raw = cv::imread(path, cv::IMREAD_UNCHANGED);
    if (raw.empty()) {
        throw IoError(IoErrorKind::DecodeFailure, "failed to decode image: " + path);
    }
    if (raw.depth() != CV_8U) {
        throw IoError(IoErrorKind::UnsupportedFormat,
                      "only 8-bit images are supported: " + path);
    }
    const int channels = raw.channels();
    if (channels != 1 && channels != 3 && channels != 4) {
        throw IoError(IoErrorKind::UnsupportedFormat,
                      "unsupported channel count: " + path);
    }
    if (channels == 4) {
        std::cerr << "warning: dropping alpha channel of " << path << '\n';
    }

    RgbImage img;
    img.r = Plane(raw.rows, raw.cols);
    img.g = Plane(raw.rows, raw.cols);
    img.b = Plane(raw.rows, raw.cols);
    for (int n = 0; n < raw.rows; ++n) {
        const uchar* row = raw.ptr<uchar>(n);
        for (int m = 0; m < raw.cols; ++m) {
            const uchar* px = row + m * channels;
            if (channels == 1) {
                img.r.at(n, m) = px[0];
                img.g.at(n, m) = px[0];
                img.b.at(n, m) = px[0];
            } else {
                img.b.at(n, m) = px[0];
                img.g.at(n, m) = px[1];
                img.r.at(n, m) = px[2];
            }
        }
    }
    return img;
}

static std::string extension_for(ImageFormat format, const std::string& path) {
    switch (format) {
        case ImageFormat::Png: return ".png";
        case ImageFormat::Bmp: return ".bmp";
        case ImageFormat::Tiff: return ".tiff";
        case ImageFormat::Jpeg: return ".jpg";
        case ImageFormat::Auto: break;
    }
    std::string ext = fs::path(path).extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (ext == ".png" || ext == ".bmp" || ext == ".tiff" || ext == ".tif" ||
        ext == ".jpg" || ext == ".jpeg") {
        return ext;
    }
    throw IoError(IoErrorKind::UnsupportedFormat,
                  "cannot infer output format from extension: " + path);
}

void save_image(const RgbImage& img, const std::string& path, ImageFormat format) {
    const std::string ext = extension_for(format, path);
    cv::Mat bgr(img.rows(), img.cols(), CV_8UC3);
    auto quantize = [&](double v) {
        return static_cast<uchar>(std::round(std::clamp(v, 0.0, img.value_scale)));
    };
    for (int n = 0; n < img.rows(); ++n) {
        cv::Vec3b* row = bgr.ptr<cv::Vec3b>(n);
        for (int m = 0; m < img.cols(); ++m) {
            row[m][0] = quantize(img.b.at(n, m));
            row[m][1] = quantize(img.g.at(n, m));
            row[m][2] = quantize(img.r.at(n, m));
        }
    }
    std::vector<uchar> buffer;
    if (!cv::imencode(ext, bgr, buffer)) {
        throw IoError(IoErrorKind::WriteFailure, "failed to encode image for: " + path);
    }
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out.write(reinterpret_cast<const char*>(buffer.data()),
                       static_cast<std::streamsize>(buffer.size()))) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw IoError(IoErrorKind::WriteFailure, "failed to write: " + path);
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError(IoErrorKind::WriteFailure, "failed to move output into place: " + path);
    }
}

}  // namespace qfe
