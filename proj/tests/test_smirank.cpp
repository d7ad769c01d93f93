#include <doctest.h>

#include <cmath>
#include <numeric>

#include "fastce/smirank.hpp"
#include "test_util.hpp"

using namespace fastce;

namespace {

BlockHistogramMatrix random_block_matrix(std::mt19937_64& rng, int n_b, int n_g,
                                         double zero_fraction = 0.3) {
    BlockHistogramMatrix m;
    m.rows = n_b;
    m.cols = n_g;
    m.blocks_y = n_b;
    m.blocks_x = 1;
    m.entries.resize(static_cast<std::size_t>(n_b) * n_g);
    std::uniform_real_distribution<double> mass(0.0, 1.0);
    double total = 0;
    for (auto& e : m.entries) {
        e = mass(rng) < zero_fraction ? 0.0 : mass(rng);
        total += e;
    }
    for (auto& e : m.entries)
        e /= total;
    return m;
}

// Independent re-evaluation of the mutual-information formula by the most
// literal triple loop over the full (uncompacted) matrix.
Matrix brute_force_mi(const BlockHistogramMatrix& h,
                      const std::vector<int>& support) {
    const int k_dim = static_cast<int>(support.size());
    Matrix out(k_dim);
    for (int a = 0; a < k_dim; ++a)
        for (int b = 0; b < k_dim; ++b) {
            double acc = 0;
            for (int blk = 0; blk < h.rows; ++blk) {
                const double hk = h.at(blk, support[a]);
                const double hl = h.at(blk, support[b]);
                const double hp = std::min(hk, hl);
                if (hp > 0)
                    acc += hp * std::log(hp / (hk * hl));
            }
            out.at(a, b) = acc;
        }
    return out;
}

Matrix random_column_stochastic(std::mt19937_64& rng, int k_dim) {
    Matrix s(k_dim);
    std::uniform_real_distribution<double> mass(0.0, 1.0);
    for (int c = 0; c < k_dim; ++c) {
        double sum = 0;
        for (int r = 0; r < k_dim; ++r) {
            s.at(r, c) = mass(rng);
            sum += s.at(r, c);
        }
        for (int r = 0; r < k_dim; ++r)
            s.at(r, c) /= sum;
    }
    return s;
}

}  // namespace

TEST_CASE("mutual_information on a single block with two equal levels") {
    BlockHistogramMatrix h;
    h.rows = 1;
    h.cols = 2;
    h.blocks_y = h.blocks_x = 1;
    h.entries = {0.5, 0.5};
    const MutualInfoMatrix info = mutual_information(h);
    REQUIRE(info.dim() == 2);
    const double expect = 0.5 * std::log(2.0);
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
            CHECK(info.values.at(k, l) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("mutual_information support excludes empty levels") {
    BlockHistogramMatrix h;
    h.rows = 2;
    h.cols = 4;
    h.blocks_y = 2;
    h.blocks_x = 1;
    h.entries = {0.25, 0.0, 0.25, 0.0, 0.25, 0.0, 0.25, 0.0};
    const MutualInfoMatrix info = mutual_information(h);
    CHECK(info.support == std::vector<int>{0, 2});
    CHECK(info.dim() == 2);

    BlockHistogramMatrix zero = h;
    zero.entries.assign(zero.entries.size(), 0.0);
    CHECK_THROWS_AS(mutual_information(zero), param_error);
}

TEST_CASE("mutual_information symmetry, non-negativity, brute-force oracle") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 40; ++trial) {
        const BlockHistogramMatrix h = random_block_matrix(rng, 8, 16);
        const MutualInfoMatrix info = mutual_information(h);
        const Matrix oracle = brute_force_mi(h, info.support);
        const int k_dim = info.dim();
        for (int a = 0; a < k_dim; ++a)
            for (int b = 0; b < k_dim; ++b) {
                CHECK(info.values.at(a, b) ==
                      doctest::Approx(info.values.at(b, a)).epsilon(1e-12));
                CHECK(info.values.at(a, b) >= -1e-12);
                CHECK(info.values.at(a, b) ==
                      doctest::Approx(oracle.at(a, b)).epsilon(1e-12));
            }
    }
}

TEST_CASE("transition_matrix is column-stochastic") {
    std::mt19937_64 rng(52);
    const BlockHistogramMatrix h = random_block_matrix(rng, 6, 32);
    const MutualInfoMatrix info = mutual_information(h);

    SUBCASE("alpha=0 gives uniform columns") {
        const Matrix g = transition_matrix(info, 0.0);
        for (double e : g.entries)
            CHECK(e == doctest::Approx(1.0 / g.dim).epsilon(1e-12));
    }
    SUBCASE("alpha=1 is the pure normalization") {
        const Matrix g = transition_matrix(info, 1.0);
        const Matrix s = column_stochastic(info);
        for (std::size_t i = 0; i < g.entries.size(); ++i)
            CHECK(g.entries[i] == doctest::Approx(s.entries[i]).epsilon(1e-12));
    }
    SUBCASE("columns sum to 1 for any alpha") {
        for (double alpha : {0.0, 0.3, 0.9, 1.0}) {
            const Matrix g = transition_matrix(info, alpha);
            for (int c = 0; c < g.dim; ++c) {
                double sum = 0;
                for (int r = 0; r < g.dim; ++r)
                    sum += g.at(r, c);
                CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
            }
        }
    }
    SUBCASE("alpha out of range") {
        CHECK_THROWS_AS(transition_matrix(info, -0.1), param_error);
        CHECK_THROWS_AS(transition_matrix(info, 1.1), param_error);
    }
}

TEST_CASE("rank_vector identities") {
    std::mt19937_64 rng(53);

    SUBCASE("K=1 gives the unit rank") {
        Matrix s(1);
        s.at(0, 0) = 1.0;
        const RankVector r = rank_vector(s, 0.9);
        CHECK(r.values.size() == 1);
        CHECK(r.values[0] == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("alpha=0 gives the uniform vector") {
        const Matrix s = random_column_stochastic(rng, 7);
        const RankVector r = rank_vector(s, 0.0);
        for (double v : r.values)
            CHECK(v == doctest::Approx(1.0 / 7).epsilon(1e-12));
    }
    SUBCASE("S = identity keeps the uniform vector for any alpha") {
        Matrix s(5);
        for (int i = 0; i < 5; ++i)
            s.at(i, i) = 1.0;
        for (double alpha : {0.1, 0.5, 0.9}) {
            const RankVector r = rank_vector(s, alpha);
            for (double v : r.values)
                CHECK(v == doctest::Approx(0.2).epsilon(1e-12));
        }
    }
    SUBCASE("sum, positivity, residual, and fixed point of G") {
        for (int trial = 0; trial < 50; ++trial) {
            std::uniform_int_distribution<int> dim(2, 64);
            const int k_dim = dim(rng);
            const Matrix s = random_column_stochastic(rng, k_dim);
            for (double alpha : {0.0, 0.5, 0.9}) {
                const RankVector r = rank_vector(s, alpha);
                const double sum =
                    std::accumulate(r.values.begin(), r.values.end(), 0.0);
                CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
                for (double v : r.values)
                    CHECK(v > 0);
                // residual of (E - alpha S) r = (1-alpha) v
                for (int row = 0; row < k_dim; ++row) {
                    double acc = r.values[row];
                    for (int c = 0; c < k_dim; ++c)
                        acc -= alpha * s.at(row, c) * r.values[c];
                    CHECK(acc == doctest::Approx((1.0 - alpha) / k_dim)
                                     .epsilon(1e-9));
                }
            }
        }
    }
    SUBCASE("alpha == 1 is rejected") {
        const Matrix s = random_column_stochastic(rng, 4);
        CHECK_THROWS_AS(rank_vector(s, 1.0), param_error);
    }
}

TEST_CASE("rank_to_mapping") {
    SUBCASE("K=2 spans the full range") {
        RankVector r{{0.3, 0.7}, 0.9};
        const PartialCurve c = rank_to_mapping(r, {10, 200}, 8);
        REQUIRE(c.points.size() == 2);
        CHECK(c.points[0].x == 10);
        CHECK(c.points[0].y == doctest::Approx(0.0));
        CHECK(c.points[1].y == doctest::Approx(255.0).epsilon(1e-9));
    }
    SUBCASE("endpoint identity y_K == 255 for random ranks") {
        std::mt19937_64 rng(54);
        std::uniform_real_distribution<double> mass(0.01, 1.0);
        for (int trial = 0; trial < 100; ++trial) {
            std::uniform_int_distribution<int> dim(2, 100);
            const int k_dim = dim(rng);
            RankVector r;
            r.values.resize(k_dim);
            double sum = 0;
            for (auto& v : r.values) {
                v = mass(rng);
                sum += v;
            }
            for (auto& v : r.values)
                v /= sum;
            std::vector<int> support(k_dim);
            std::iota(support.begin(), support.end(), 0);
            const PartialCurve c = rank_to_mapping(r, support, 8);
            CHECK(c.points.front().y == doctest::Approx(0.0));
            CHECK(c.points.back().y == doctest::Approx(255.0).epsilon(1e-6));
            for (int k = 1; k < k_dim; ++k)
                CHECK(c.points[k].y > c.points[k - 1].y);
        }
    }
    SUBCASE("uniform ranks space levels equally") {
        const int k_dim = 6;
        RankVector r{std::vector<double>(k_dim, 1.0 / k_dim), 0.9};
        std::vector<int> support{3, 7, 80, 81, 200, 255};
        const PartialCurve c = rank_to_mapping(r, support, 8);
        for (int k = 0; k < k_dim; ++k)
            CHECK(c.points[k].y ==
                  doctest::Approx(255.0 * k / (k_dim - 1)).epsilon(1e-9));
    }
    SUBCASE("K=1 degenerates to a flagged constant curve") {
        RankVector r{{1.0}, 0.9};
        const PartialCurve c = rank_to_mapping(r, {42}, 8);
        CHECK(c.degenerate);
        REQUIRE(c.points.size() == 1);
        CHECK(c.points[0].x == 42);
        CHECK(c.points[0].y == doctest::Approx(255.0));
    }
}

TEST_CASE("smirank end-to-end") {
    SUBCASE("constant image") {
        GrayImage img(16, 16);
        for (auto& p : img.data)
            p = 130;
        const GrayImage out = smirank(img, 0.9, 4, 4);
        for (auto p : out.data)
            CHECK(p == 255);
    }
    SUBCASE("two-level image maps to 0 and 255") {
        GrayImage img(16, 16);
        for (std::size_t p = 0; p < img.data.size(); ++p)
            img.data[p] = p % 2 ? 80 : 160;
        const GrayImage out = smirank(img, 0.9, 4, 4);
        for (std::size_t p = 0; p < img.data.size(); ++p)
            CHECK(out.data[p] == (img.data[p] == 80 ? 0 : 255));
    }
    SUBCASE("LUT on the support is strictly increasing for positive ranks") {
        std::mt19937_64 rng(55);
        const GrayImage img = test::random_sparse_image(64, 64, rng, 12);
        const CalibratedCurve lut = smirank_curve(img, 0.9, 4, 4);
        for (std::size_t x = 1; x < lut.lut.size(); ++x)
            CHECK(lut.lut[x] >= lut.lut[x - 1]);
    }
}

TEST_CASE("fsmirank equals smirank when downsampling is disabled") {
    std::mt19937_64 rng(56);
    for (int trial = 0; trial < 12; ++trial) {
        const GrayImage img = trial % 2 == 0
                                  ? test::random_image(50, 34, rng)
                                  : test::random_sparse_image(41, 33, rng, 7);
        CHECK(fsmirank(img, 1, 256, 0.9, 8, 8) == smirank(img, 0.9, 8, 8));
    }
}

TEST_CASE("fsmirank survives constant images for any parameters") {
    GrayImage img(32, 32);
    for (auto& p : img.data)
        p = 200;
    for (int s : {1, 2, 4})
        for (int n_g : {32, 256}) {
            const GrayImage out = fsmirank(img, s, n_g, 0.9, 4, 4);
            for (auto p : out.data)
                CHECK(p == 255);
        }
}

TEST_CASE("fsmirank and smirank LUTs share monotonicity and endpoints") {
    std::mt19937_64 rng(57);
    const GrayImage img = test::random_image(128, 96, rng);
    const CalibratedCurve fast = fsmirank_curve(img, 8, 64, 0.9, 8, 8);
    const CalibratedCurve naive = smirank_curve(img, 0.9, 8, 8);
    for (std::size_t x = 1; x < 256; ++x) {
        CHECK(fast.lut[x] >= fast.lut[x - 1]);
        CHECK(naive.lut[x] >= naive.lut[x - 1]);
    }
    // a 128x96 uniform-noise image occupies every level, so both LUTs span
    // the full output range
    CHECK(fast.lut[0] == 0);
    CHECK(naive.lut[0] == 0);
    CHECK(fast.lut[255] == 255);
    CHECK(naive.lut[255] == 255);
}

TEST_CASE("rank vector is invariant under the log base of Eq-style weights") {
    // scaling I uniformly (log base change) must not move r, because column
    // normalization cancels the scale
    std::mt19937_64 rng(58);
    const BlockHistogramMatrix h = random_block_matrix(rng, 8, 16);
    const MutualInfoMatrix info = mutual_information(h);
    MutualInfoMatrix scaled = info;
    for (auto& e : scaled.values.entries)
        e /= std::log(10.0);
    const RankVector a = rank_vector(column_stochastic(info), 0.9);
    const RankVector b = rank_vector(column_stochastic(scaled), 0.9);
    for (std::size_t i = 0; i < a.values.size(); ++i)
        CHECK(a.values[i] == doctest::Approx(b.values[i]).epsilon(1e-12));
}
