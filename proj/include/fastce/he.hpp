#pragma once

#include <vector>

#include "fastce/mapping.hpp"
#include "fastce/sampling.hpp"

namespace fastce {

/// Cumulative distribution over histogram bins, values in [0,1].
struct CdfCurve {
    std::vector<double> values;  // length n_g, non-decreasing, last == 1
};

CdfCurve cdf(const Histogram& h);

/// Naive histogram equalization: Y = round((2^B-1) * c(X)) with the
/// full-resolution 2^B-bin CDF. Built directly, without the calibration path.
GrayImage he(const GrayImage& x);

/// Accelerated HE: downsample spatially, build an n_g-bin histogram, take the
/// CDF, calibrate it to a full-range LUT, and apply to the original image.
GrayImage fhe(const GrayImage& x, int s, int n_g);

/// The calibrated LUT fhe would apply (exposed for inspection and tests).
CalibratedCurve fhe_curve(const GrayImage& x, int s, int n_g);

}  // namespace fastce
