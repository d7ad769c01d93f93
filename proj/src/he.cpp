#include "fastce/he.hpp"

#include <cmath>

namespace fastce {

CdfCurve cdf(const Histogram& h) {
    if (h.total == 0)
        throw param_error("cdf: empty histogram");
    CdfCurve c;
    c.values.resize(h.bins.size());
    std::uint64_t acc = 0;
    const double inv_total = 1.0 / static_cast<double>(h.total);
    for (std::size_t k = 0; k < h.bins.size(); ++k) {
        acc += h.bins[k];
        c.values[k] = static_cast<double>(acc) * inv_total;
    }
    return c;
}

GrayImage he(const GrayImage& x) {
    if (x.pixel_count() == 0)
        throw param_error("he: empty image");
    const int levels = 1 << x.bit_depth;
    const Histogram h = histogram(x, levels);
    const CdfCurve c = cdf(h);

    CalibratedCurve lut;
    lut.lut.resize(levels);
    for (int v = 0; v < levels; ++v)
        lut.lut[v] = static_cast<std::uint8_t>(
            std::floor((levels - 1) * c.values[v] + 0.5));
    return apply_curve(x, lut);
}

CalibratedCurve fhe_curve(const GrayImage& x, int s, int n_g) {
    const GrayImage xs = spatial_downsample(x, s);
    const Histogram h = histogram(xs, n_g);
    const CdfCurve c = cdf(h);
    const int max_level = x.max_level();

    PartialCurve pc;
    pc.domain = DomainKind::BinIndexed;
    pc.points.resize(n_g);
    for (int k = 0; k < n_g; ++k)
        pc.points[k] = {k * h.delta, max_level * c.values[k]};
    return calibrate(pc, x.bit_depth);
}

GrayImage fhe(const GrayImage& x, int s, int n_g) {
    if (x.pixel_count() == 0)
        throw param_error("fhe: empty image");
    return apply_curve(x, fhe_curve(x, s, n_g));
}

}  // namespace fastce
