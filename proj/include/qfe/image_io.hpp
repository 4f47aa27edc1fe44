#pragma once

#include <stdexcept>
#include <string>

#include "qfe/image.hpp"

namespace qfe {

enum class IoErrorKind {
    Unreadable,         // file missing or not openable
    UnsupportedFormat,  // bit depth or channel layout outside 8-bit gray/RGB
    DecodeFailure,      // file opened but no codec could parse it
    WriteFailure,       // encode or filesystem write failed
};

class IoError : public std::runtime_error {
public:
    IoError(IoErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}
    IoErrorKind kind() const { return kind_; }

private:
    IoErrorKind kind_;
};

enum class ImageFormat { Auto, Png, Bmp, Tiff, Jpeg };

// Decodes an 8-bit RGB or grayscale file. Grayscale is promoted to RGB; an
// alpha channel is dropped with a warning on stderr.
RgbImage load_image(const std::string& path);

// Clips to [0, value_scale], rounds half away from zero, encodes, and moves
// the finished file into place so failures never leave partial output.
void save_image(const RgbImage& img, const std::string& path,
                ImageFormat format = ImageFormat::Auto);

}  // namespace qfe
