#pragma once

#include <cstdint>
#include <string>

#include "fastce/image.hpp"

namespace fastce {

enum class SyntheticKind {
    UniformNoise,
    TwoPeak,         // >= 80% of pixels in two narrow level bands
    SmoothGradient,  // horizontal ramp
    HdrPeaky,        // large smooth regions plus sharp histogram peaks
};

SyntheticKind synthetic_kind_from_name(const std::string& name);
const char* synthetic_kind_name(SyntheticKind kind);

/// Deterministic for a given (kind, width, height, seed).
GrayImage generate_synthetic(SyntheticKind kind, int width, int height,
                             std::uint64_t seed);

}  // namespace fastce
