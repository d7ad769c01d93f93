#include "fastce/mapping.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

namespace fastce {

namespace {

std::uint8_t to_level(double y, int max_level) {
    const long rounded = static_cast<long>(std::floor(y + 0.5));
    return static_cast<std::uint8_t>(
        std::clamp(rounded, 0L, static_cast<long>(max_level)));
}

void check_curve(const PartialCurve& curve) {
    if (curve.points.empty())
        throw param_error("calibrate: empty curve");
    for (std::size_t i = 1; i < curve.points.size(); ++i)
        if (curve.points[i].x <= curve.points[i - 1].x)
            throw param_error("calibrate: input levels must be strictly increasing");
}

}  // namespace

CalibratedCurve calibrate(const PartialCurve& curve, int bit_depth) {
    check_curve(curve);
    const int levels = 1 << bit_depth;
    const int max_level = levels - 1;
    const auto& pts = curve.points;

    CalibratedCurve out;
    out.lut.resize(levels);

    std::size_t seg = 0;  // pts[seg] is the left end of the current segment
    for (int x = 0; x < levels; ++x) {
        double y;
        if (x <= pts.front().x) {
            y = pts.front().y;
        } else if (x >= pts.back().x) {
            y = pts.back().y;
        } else {
            while (pts[seg + 1].x < x)
                ++seg;
            if (pts[seg + 1].x == x) {
                y = pts[seg + 1].y;
            } else {
                const auto& a = pts[seg];
                const auto& b = pts[seg + 1];
                const double t = static_cast<double>(x - a.x) / (b.x - a.x);
                y = a.y + t * (b.y - a.y);
            }
        }
        out.lut[x] = to_level(y, max_level);
    }
    return out;
}

CalibratedCurve naive_upsample_scheme1(const PartialCurve& curve, int bit_depth) {
    check_curve(curve);
    if (curve.domain == DomainKind::SupportIndexed)
        throw param_error(
            "naive_upsample_scheme1: undefined on support-indexed curves "
            "(missing gray levels have no bin value)");
    const int levels = 1 << bit_depth;
    const int n_g = static_cast<int>(curve.points.size());
    if (levels % n_g != 0)
        throw param_error("naive_upsample_scheme1: curve must cover all bins");
    const int delta = levels / n_g;

    CalibratedCurve out;
    out.lut.resize(levels);
    for (int x = 0; x < levels; ++x)
        out.lut[x] = to_level(curve.points[x / delta].y, levels - 1);
    return out;
}

GrayImage apply_curve(const GrayImage& x, const CalibratedCurve& lut) {
    if (static_cast<int>(lut.lut.size()) != (1 << x.bit_depth))
        throw param_error("apply_curve: LUT length " +
                          std::to_string(lut.lut.size()) +
                          " does not match image bit depth");
    GrayImage out(x.width, x.height, x.bit_depth);
    const std::uint8_t* __restrict t = lut.lut.data();
    const std::uint8_t* __restrict src = x.data.data();
    std::uint8_t* __restrict dst = out.data.data();
    const std::size_t n = x.pixel_count();
    std::size_t p = 0;
    for (; p + 4 <= n; p += 4) {
        const std::uint8_t a = t[src[p]];
        const std::uint8_t b = t[src[p + 1]];
        const std::uint8_t c = t[src[p + 2]];
        const std::uint8_t d = t[src[p + 3]];
        dst[p] = a;
        dst[p + 1] = b;
        dst[p + 2] = c;
        dst[p + 3] = d;
    }
    for (; p < n; ++p)
        dst[p] = t[src[p]];
    return out;
}

void write_curve_csv(const CalibratedCurve& lut, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw io_error("cannot open '" + path + "' for writing");
    out << "x,y\n";
    for (std::size_t x = 0; x < lut.lut.size(); ++x)
        out << x << ',' << static_cast<int>(lut.lut[x]) << '\n';
}

}  // namespace fastce
