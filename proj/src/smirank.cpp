#include "fastce/smirank.hpp"

#include <cmath>

namespace fastce {

MutualInfoMatrix mutual_information(const BlockHistogramMatrix& h) {
    const int n_b = h.rows;
    const int n_g = h.cols;

    std::vector<int> support;
    for (int k = 0; k < n_g; ++k) {
        double mass = 0;
        for (int b = 0; b < n_b; ++b)
            mass += h.at(b, k);
        if (mass > 0)
            support.push_back(k);
    }
    if (support.empty())
        throw param_error("mutual_information: all-zero histogram matrix");

    const int k_dim = static_cast<int>(support.size());

    // Compact the occupied columns so the pair loop is cache-friendly.
    std::vector<double> cols(static_cast<std::size_t>(n_b) * k_dim);
    for (int b = 0; b < n_b; ++b)
        for (int n = 0; n < k_dim; ++n)
            cols[static_cast<std::size_t>(b) * k_dim + n] = h.at(b, support[n]);

    MutualInfoMatrix info;
    info.support = std::move(support);
    info.values = Matrix(k_dim);
    for (int k = 0; k < k_dim; ++k) {
        for (int l = k; l < k_dim; ++l) {
            double acc = 0;
            for (int b = 0; b < n_b; ++b) {
                const double a = cols[static_cast<std::size_t>(b) * k_dim + k];
                const double c = cols[static_cast<std::size_t>(b) * k_dim + l];
                const double m = a < c ? a : c;
                if (m > 0)
                    acc += m * std::log(m / (a * c));
            }
            info.values.at(k, l) = acc;
            info.values.at(l, k) = acc;
        }
    }
    return info;
}

Matrix column_stochastic(const MutualInfoMatrix& info) {
    const int k_dim = info.dim();
    Matrix s(k_dim);
    for (int c = 0; c < k_dim; ++c) {
        double sum = 0;
        for (int r = 0; r < k_dim; ++r)
            sum += info.values.at(r, c);
        if (sum > 0) {
            const double inv = 1.0 / sum;
            for (int r = 0; r < k_dim; ++r)
                s.at(r, c) = info.values.at(r, c) * inv;
        } else {
            // dangling column: uniform teleport keeps S column-stochastic
            const double u = 1.0 / k_dim;
            for (int r = 0; r < k_dim; ++r)
                s.at(r, c) = u;
        }
    }
    return s;
}

Matrix transition_matrix(const MutualInfoMatrix& info, double alpha) {
    if (alpha < 0 || alpha > 1)
        throw param_error("transition_matrix: alpha must be in [0,1]");
    if (info.dim() == 0)
        throw param_error("transition_matrix: empty matrix");
    Matrix g = column_stochastic(info);
    const int k_dim = g.dim;
    const double teleport = (1.0 - alpha) / k_dim;
    for (double& e : g.entries)
        e = alpha * e + teleport;
    return g;
}

RankVector rank_vector(const Matrix& s, double alpha) {
    const int k_dim = s.dim;
    if (k_dim == 0)
        throw param_error("rank_vector: empty matrix");
    if (alpha < 0 || alpha >= 1)
        throw param_error("rank_vector: alpha must be in [0,1); the closed form "
                          "needs E - alpha*S invertible");

    // A = E - alpha*S, rhs = (1-alpha)/K
    Matrix a(k_dim);
    for (int r = 0; r < k_dim; ++r)
        for (int c = 0; c < k_dim; ++c)
            a.at(r, c) = (r == c ? 1.0 : 0.0) - alpha * s.at(r, c);
    std::vector<double> rhs(k_dim, (1.0 - alpha) / k_dim);

    // LU with partial pivoting, eliminating in place.
    for (int col = 0; col < k_dim; ++col) {
        int pivot = col;
        double best = std::abs(a.at(col, col));
        for (int r = col + 1; r < k_dim; ++r) {
            const double v = std::abs(a.at(r, col));
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (best == 0)
            throw param_error("rank_vector: singular system");
        if (pivot != col) {
            for (int c = col; c < k_dim; ++c)
                std::swap(a.at(col, c), a.at(pivot, c));
            std::swap(rhs[col], rhs[pivot]);
        }
        const double inv_piv = 1.0 / a.at(col, col);
        for (int r = col + 1; r < k_dim; ++r) {
            const double f = a.at(r, col) * inv_piv;
            if (f == 0)
                continue;
            for (int c = col + 1; c < k_dim; ++c)
                a.at(r, c) -= f * a.at(col, c);
            rhs[r] -= f * rhs[col];
        }
    }
    RankVector r;
    r.alpha = alpha;
    r.values.assign(k_dim, 0.0);
    for (int row = k_dim - 1; row >= 0; --row) {
        double v = rhs[row];
        for (int c = row + 1; c < k_dim; ++c)
            v -= a.at(row, c) * r.values[c];
        r.values[row] = v / a.at(row, row);
    }
    return r;
}

PartialCurve rank_to_mapping(const RankVector& r, const std::vector<int>& support,
                             int bit_depth) {
    const int k_dim = static_cast<int>(r.values.size());
    if (static_cast<int>(support.size()) != k_dim)
        throw param_error("rank_to_mapping: support/rank size mismatch");
    const double max_level = static_cast<double>((1 << bit_depth) - 1);

    PartialCurve curve;
    curve.domain = DomainKind::SupportIndexed;
    if (k_dim < 2) {
        curve.degenerate = true;
        curve.points = {{support.empty() ? 0 : support[0], max_level}};
        return curve;
    }

    const double endpoint_share =
        (r.values.front() + r.values.back()) / (2.0 * (k_dim - 1));
    curve.points.resize(k_dim);
    curve.points[0] = {support[0], 0.0};
    double y = 0;
    for (int k = 1; k < k_dim; ++k) {
        const double step =
            (r.values[k - 1] + r.values[k]) / 2.0 + endpoint_share;
        y += step * max_level;
        curve.points[k] = {support[k], y};
    }
    return curve;
}

namespace {

CalibratedCurve smirank_curve_impl(const GrayImage& sampled, int n_g, double alpha,
                                   int blocks_y, int blocks_x, int bit_depth) {
    const int delta = quantization_step(n_g, bit_depth);
    const BlockHistogramMatrix h =
        block_histograms(sampled, n_g, blocks_y, blocks_x);
    const MutualInfoMatrix info = mutual_information(h);

    std::vector<int> levels(info.support.size());
    for (std::size_t n = 0; n < info.support.size(); ++n)
        levels[n] = info.support[n] * delta;

    PartialCurve curve;
    if (info.dim() < 2) {
        RankVector trivial{{1.0}, alpha};
        curve = rank_to_mapping(trivial, levels, bit_depth);
    } else {
        const Matrix s = column_stochastic(info);
        const RankVector r = rank_vector(s, alpha);
        curve = rank_to_mapping(r, levels, bit_depth);
    }
    return calibrate(curve, bit_depth);
}

}  // namespace

CalibratedCurve smirank_curve(const GrayImage& x, double alpha, int blocks_y,
                              int blocks_x) {
    if (x.pixel_count() == 0)
        throw param_error("smirank: empty image");
    return smirank_curve_impl(x, 1 << x.bit_depth, alpha, blocks_y, blocks_x,
                              x.bit_depth);
}

CalibratedCurve fsmirank_curve(const GrayImage& x, int s, int n_g, double alpha,
                               int blocks_y, int blocks_x) {
    if (x.pixel_count() == 0)
        throw param_error("fsmirank: empty image");
    const GrayImage xs = spatial_downsample(x, s);
    return smirank_curve_impl(xs, n_g, alpha, blocks_y, blocks_x, x.bit_depth);
}

GrayImage smirank(const GrayImage& x, double alpha, int blocks_y, int blocks_x) {
    return apply_curve(x, smirank_curve(x, alpha, blocks_y, blocks_x));
}

GrayImage fsmirank(const GrayImage& x, int s, int n_g, double alpha, int blocks_y,
                   int blocks_x) {
    return apply_curve(x, fsmirank_curve(x, s, n_g, alpha, blocks_y, blocks_x));
}

GrayImage smirank(const GrayImage& x, double alpha) {
    return smirank(x, alpha, 8, 8);
}

GrayImage fsmirank(const GrayImage& x, int s, int n_g, double alpha) {
    return fsmirank(x, s, n_g, alpha, 8, 8);
}

}  // namespace fastce
