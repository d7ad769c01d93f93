#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fastce/image.hpp"

namespace fastce {

enum class DomainKind {
    BinIndexed,      // defined on the N_g bin levels k*delta
    SupportIndexed,  // defined only on the occupied levels
};

struct CurvePoint {
    int x = 0;     // input gray level
    double y = 0;  // real-valued output level
};

/// Low-resolution mapping function: ordered samples of a gray-level map,
/// either one per histogram bin or one per occupied level.
struct PartialCurve {
    std::vector<CurvePoint> points;  // strictly increasing x
    DomainKind domain = DomainKind::BinIndexed;
    bool degenerate = false;  // set by fallbacks for single-level inputs
};

/// Full-range lookup table over [0, 2^B - 1].
struct CalibratedCurve {
    std::vector<std::uint8_t> lut;  // length 2^B
};

/// Linearly complete and upsample a partial curve to all 2^B gray levels.
/// Between defined points: linear interpolation, rounded half-up. Outside:
/// constant extension of the nearest endpoint. Entries clamped to B bits.
CalibratedCurve calibrate(const PartialCurve& curve, int bit_depth);

/// Piecewise-constant expansion lut[x] = m(floor(x/delta)). Kept for
/// demonstrating stratification; rejects SupportIndexed curves, whose missing
/// levels leave it undefined.
CalibratedCurve naive_upsample_scheme1(const PartialCurve& curve, int bit_depth);

GrayImage apply_curve(const GrayImage& x, const CalibratedCurve& lut);

/// Debug dump as two-column CSV (x, lut[x]).
void write_curve_csv(const CalibratedCurve& lut, const std::string& path);

}  // namespace fastce
