#include "fastce/sampling.hpp"

namespace fastce {

int quantization_step(int n_g, int bit_depth) {
    const int levels = 1 << bit_depth;
    if (n_g < 2 || n_g > levels || (n_g & (n_g - 1)) != 0)
        throw param_error("n_g must be a power of two in [2, 2^B], got " +
                          std::to_string(n_g));
    return levels / n_g;
}

GrayImage spatial_downsample(const GrayImage& x, int s) {
    if (s < 1)
        throw param_error("spatial_downsample: step must be a positive integer");
    const int out_h = x.height / s;
    const int out_w = x.width / s;
    if (out_h < 1 || out_w < 1)
        throw param_error("spatial_downsample: step " + std::to_string(s) +
                          " collapses a " + std::to_string(x.height) + "x" +
                          std::to_string(x.width) + " image to zero size");
    GrayImage out(out_w, out_h, x.bit_depth);
    for (int i = 0; i < out_h; ++i) {
        const std::uint8_t* src =
            x.data.data() + static_cast<std::size_t>(i) * s * x.width;
        std::uint8_t* dst = out.data.data() + static_cast<std::size_t>(i) * out_w;
        for (int j = 0; j < out_w; ++j)
            dst[j] = src[static_cast<std::size_t>(j) * s];
    }
    return out;
}

Histogram histogram(const GrayImage& x, int n_g) {
    const int delta = quantization_step(n_g, x.bit_depth);
    Histogram h;
    h.bins.assign(n_g, 0);
    h.delta = delta;
    h.total = x.pixel_count();
    if (delta == 1) {
        for (std::uint8_t p : x.data)
            ++h.bins[p];
    } else {
        // delta is a power of two, so floor(p/delta) is a shift
        int shift = 0;
        while ((1 << shift) < delta)
            ++shift;
        for (std::uint8_t p : x.data)
            ++h.bins[p >> shift];
    }
    return h;
}

BlockHistogramMatrix block_histograms(const GrayImage& x, int n_g, int blocks_y,
                                      int blocks_x) {
    const int delta = quantization_step(n_g, x.bit_depth);
    if (blocks_y < 1 || blocks_x < 1 || blocks_y > x.height || blocks_x > x.width)
        throw param_error("block_histograms: grid " + std::to_string(blocks_y) +
                          "x" + std::to_string(blocks_x) +
                          " is degenerate for a " + std::to_string(x.height) +
                          "x" + std::to_string(x.width) + " image");

    int shift = 0;
    while ((1 << shift) < delta)
        ++shift;

    BlockHistogramMatrix m;
    m.rows = blocks_y * blocks_x;
    m.cols = n_g;
    m.blocks_y = blocks_y;
    m.blocks_x = blocks_x;
    m.entries.assign(static_cast<std::size_t>(m.rows) * n_g, 0.0);

    std::vector<std::uint32_t> counts(static_cast<std::size_t>(m.rows) * n_g, 0);
    const int base_h = x.height / blocks_y;
    const int base_w = x.width / blocks_x;
    for (int by = 0; by < blocks_y; ++by) {
        const int i0 = by * base_h;
        const int i1 = (by == blocks_y - 1) ? x.height : i0 + base_h;
        for (int bx = 0; bx < blocks_x; ++bx) {
            const int j0 = bx * base_w;
            const int j1 = (bx == blocks_x - 1) ? x.width : j0 + base_w;
            std::uint32_t* row =
                counts.data() + static_cast<std::size_t>(by * blocks_x + bx) * n_g;
            for (int i = i0; i < i1; ++i) {
                const std::uint8_t* src =
                    x.data.data() + static_cast<std::size_t>(i) * x.width;
                for (int j = j0; j < j1; ++j)
                    ++row[src[j] >> shift];
            }
        }
    }

    const double inv_total = 1.0 / static_cast<double>(x.pixel_count());
    for (std::size_t idx = 0; idx < counts.size(); ++idx)
        m.entries[idx] = counts[idx] * inv_total;
    return m;
}

}  // namespace fastce
