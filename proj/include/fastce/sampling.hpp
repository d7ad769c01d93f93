#pragma once

#include <cstdint>
#include <vector>

#include "fastce/image.hpp"

namespace fastce {

/// Quantized gray-level histogram: bins[k] counts pixels with floor(p/delta)==k.
struct Histogram {
    std::vector<std::uint64_t> bins;  // length n_g
    int delta = 1;                    // quantization step, n_g * delta == 2^B
    std::uint64_t total = 0;

    int n_g() const { return static_cast<int>(bins.size()); }
};

/// Per-block quantized histograms of a non-overlapped partition, normalized so
/// the whole matrix sums to 1. Remainder pixels go to the last block per axis.
struct BlockHistogramMatrix {
    int rows = 0;  // N_b = blocks_y * blocks_x
    int cols = 0;  // N_g
    int blocks_y = 0;
    int blocks_x = 0;
    std::vector<double> entries;  // row-major rows x cols

    double at(int b, int k) const {
        return entries[static_cast<std::size_t>(b) * cols + k];
    }
    double& at(int b, int k) {
        return entries[static_cast<std::size_t>(b) * cols + k];
    }
};

/// Pure decimation: output(i,j) = x(s*i, s*j), size floor(M/s) x floor(N/s).
GrayImage spatial_downsample(const GrayImage& x, int s);

/// n_g must be a power of two dividing 2^B exactly.
Histogram histogram(const GrayImage& x, int n_g);

/// Blockwise histograms over a blocks_y x blocks_x partition of x.
BlockHistogramMatrix block_histograms(const GrayImage& x, int n_g, int blocks_y,
                                      int blocks_x);

/// Validates n_g for a given bit depth and returns delta = 2^B / n_g.
int quantization_step(int n_g, int bit_depth);

}  // namespace fastce
