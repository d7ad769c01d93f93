#pragma once

#include <vector>

#include "fastce/mapping.hpp"
#include "fastce/sampling.hpp"

namespace fastce {

/// Dense K x K matrix, row-major. Small (K <= 2^B), so no sparse machinery.
struct Matrix {
    int dim = 0;
    std::vector<double> entries;

    explicit Matrix(int k = 0)
        : dim(k), entries(static_cast<std::size_t>(k) * k, 0.0) {}
    double at(int r, int c) const {
        return entries[static_cast<std::size_t>(r) * dim + c];
    }
    double& at(int r, int c) {
        return entries[static_cast<std::size_t>(r) * dim + c];
    }
};

/// Pairwise mutual spatial information over the occupied gray levels.
struct MutualInfoMatrix {
    Matrix values;             // K x K, symmetric, non-negative
    std::vector<int> support;  // occupied column indices, increasing
    int dim() const { return values.dim; }
};

struct RankVector {
    std::vector<double> values;  // length K, sums to 1
    double alpha = 0.9;
};

/// I(k,l) = sum_b h'_b(k,l) * log(h'_b(k,l) / (h_b(k) h_b(l))) with
/// h'_b = min(h_b(k), h_b(l)); zero-mass terms contribute 0.
MutualInfoMatrix mutual_information(const BlockHistogramMatrix& h);

/// Column-normalize I; all-zero columns become uniform 1/K.
Matrix column_stochastic(const MutualInfoMatrix& info);

/// G = alpha*S + (1-alpha)/K * ones.
Matrix transition_matrix(const MutualInfoMatrix& info, double alpha);

/// Solves (E - alpha*S) r = (1-alpha)*v, v uniform, by LU with partial
/// pivoting. Requires alpha < 1.
RankVector rank_vector(const Matrix& s, double alpha);

/// Rank-spaced output levels: y_1 = 0 and
/// y_k = y_{k-1} + ((r_{k-1}+r_k)/2 + (r_1+r_K)/(2(K-1))) * (2^B-1),
/// attached to the given support gray levels. K == 1 falls back to a
/// degenerate constant curve at 2^B - 1.
PartialCurve rank_to_mapping(const RankVector& r, const std::vector<int>& support,
                             int bit_depth);

/// The calibrated LUTs the pipelines apply (exposed for inspection and tests).
CalibratedCurve smirank_curve(const GrayImage& x, double alpha, int blocks_y,
                              int blocks_x);
CalibratedCurve fsmirank_curve(const GrayImage& x, int s, int n_g, double alpha,
                               int blocks_y, int blocks_x);

/// Naive SMIRANK at full resolution (every gray level is its own bin).
GrayImage smirank(const GrayImage& x, double alpha, int blocks_y, int blocks_x);

/// Accelerated SMIRANK: spatial downsampling plus n_g-bin blockwise
/// histograms; the partial mapping over occupied bins is completed and
/// upsampled to a full LUT applied to the original image.
GrayImage fsmirank(const GrayImage& x, int s, int n_g, double alpha, int blocks_y,
                   int blocks_x);

GrayImage smirank(const GrayImage& x, double alpha = 0.9);
GrayImage fsmirank(const GrayImage& x, int s, int n_g, double alpha = 0.9);

}  // namespace fastce
