#pragma once

#include <variant>

#include "fastce/image.hpp"

namespace fastce {

using AnyImage = std::variant<GrayImage, ColorImage>;

/// Decode a binary PGM (P5) or PPM (P6) file with maxval 255.
/// Header comments (# ...) are skipped. Throws parse_error naming the
/// offending field on malformed input, io_error when the file cannot be read.
AnyImage read_image(const std::string& path);

/// Encode as binary PGM (P5). Round-trips bit-exactly through read_image.
void write_image(const GrayImage& img, const std::string& path);

/// Encode as binary PPM (P6).
void write_image(const ColorImage& img, const std::string& path);

void write_image(const AnyImage& img, const std::string& path);

/// HSV value channel: V(i,j) = max(R,G,B).
GrayImage extract_luminance(const ColorImage& img);

/// Replace the value channel keeping hue and saturation: each channel is
/// scaled by newV/V (rounded half-up, clamped); pixels with V==0 become
/// the gray (newV,newV,newV).
ColorImage recombine_luminance(const ColorImage& img, const GrayImage& new_v);

}  // namespace fastce
