#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fastce {

// Error taxonomy used across the library. The CLI maps these onto exit codes.
class param_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Single-channel image with B-bit pixels stored row-major.
struct GrayImage {
    int width = 0;
    int height = 0;
    int bit_depth = 8;
    std::vector<std::uint8_t> data;

    GrayImage() = default;
    GrayImage(int w, int h, int bits = 8)
        : width(w), height(h), bit_depth(bits),
          data(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 0) {
        if (w <= 0 || h <= 0)
            throw param_error("GrayImage: dimensions must be positive");
        if (bits < 1 || bits > 8)
            throw param_error("GrayImage: bit_depth must be in [1,8]");
    }

    std::uint8_t at(int i, int j) const {
        return data[static_cast<std::size_t>(i) * width + j];
    }
    std::uint8_t& at(int i, int j) {
        return data[static_cast<std::size_t>(i) * width + j];
    }
    std::size_t pixel_count() const { return data.size(); }
    int max_level() const { return (1 << bit_depth) - 1; }

    bool operator==(const GrayImage&) const = default;
};

/// Interleaved 8-bit RGB image, row-major.
struct ColorImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;  // r,g,b triples

    ColorImage() = default;
    ColorImage(int w, int h)
        : width(w), height(h),
          data(static_cast<std::size_t>(w) * static_cast<std::size_t>(h) * 3, 0) {
        if (w <= 0 || h <= 0)
            throw param_error("ColorImage: dimensions must be positive");
    }

    std::size_t pixel_count() const {
        return static_cast<std::size_t>(width) * height;
    }

    bool operator==(const ColorImage&) const = default;
};

}  // namespace fastce
