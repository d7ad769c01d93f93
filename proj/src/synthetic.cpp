#include "fastce/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace fastce {

SyntheticKind synthetic_kind_from_name(const std::string& name) {
    if (name == "uniform-noise")
        return SyntheticKind::UniformNoise;
    if (name == "two-peak")
        return SyntheticKind::TwoPeak;
    if (name == "smooth-gradient")
        return SyntheticKind::SmoothGradient;
    if (name == "hdr-peaky")
        return SyntheticKind::HdrPeaky;
    throw param_error("unknown synthetic kind '" + name + "'");
}

const char* synthetic_kind_name(SyntheticKind kind) {
    switch (kind) {
        case SyntheticKind::UniformNoise: return "uniform-noise";
        case SyntheticKind::TwoPeak: return "two-peak";
        case SyntheticKind::SmoothGradient: return "smooth-gradient";
        case SyntheticKind::HdrPeaky: return "hdr-peaky";
    }
    throw param_error("unknown synthetic kind");
}

namespace {

std::uint8_t clamp_level(double v) {
    return static_cast<std::uint8_t>(
        std::clamp(static_cast<long>(std::floor(v + 0.5)), 0L, 255L));
}

}  // namespace

GrayImage generate_synthetic(SyntheticKind kind, int width, int height,
                             std::uint64_t seed) {
    GrayImage img(width, height);
    std::mt19937_64 rng(seed);

    switch (kind) {
        case SyntheticKind::UniformNoise: {
            std::uniform_int_distribution<int> level(0, 255);
            for (auto& p : img.data)
                p = static_cast<std::uint8_t>(level(rng));
            break;
        }
        case SyntheticKind::TwoPeak: {
            // 90% of mass in two bands of width 11 centered at 64 and 192.
            std::uniform_real_distribution<double> coin(0.0, 1.0);
            std::uniform_int_distribution<int> band(-5, 5);
            std::uniform_int_distribution<int> any(0, 255);
            for (auto& p : img.data) {
                const double c = coin(rng);
                if (c < 0.45)
                    p = static_cast<std::uint8_t>(64 + band(rng));
                else if (c < 0.90)
                    p = static_cast<std::uint8_t>(192 + band(rng));
                else
                    p = static_cast<std::uint8_t>(any(rng));
            }
            break;
        }
        case SyntheticKind::SmoothGradient: {
            for (int j = 0; j < width; ++j) {
                const double v =
                    width == 1 ? 0.0 : 255.0 * j / (width - 1);
                img.data[j] = clamp_level(v);
            }
            for (int i = 1; i < height; ++i)
                std::copy_n(img.data.begin(), width,
                            img.data.begin() + static_cast<std::size_t>(i) * width);
            break;
        }
        case SyntheticKind::HdrPeaky: {
            // Large near-constant bright region, a dark peak, and sparse noise.
            std::uniform_real_distribution<double> coin(0.0, 1.0);
            std::normal_distribution<double> bright(230.0, 1.5);
            std::normal_distribution<double> dark(25.0, 2.0);
            std::uniform_int_distribution<int> any(0, 255);
            for (auto& p : img.data) {
                const double c = coin(rng);
                if (c < 0.6)
                    p = clamp_level(bright(rng));
                else if (c < 0.9)
                    p = clamp_level(dark(rng));
                else
                    p = static_cast<std::uint8_t>(any(rng));
            }
            break;
        }
    }
    return img;
}

}  // namespace fastce
