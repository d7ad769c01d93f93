#include "fastce/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <map>
#include <tuple>

#include "fastce/he.hpp"
#include "fastce/imageio.hpp"
#include "fastce/smirank.hpp"
#include "fastce/synthetic.hpp"

namespace fastce {

DiffStats image_diff(const GrayImage& a, const GrayImage& b) {
    if (a.width != b.width || a.height != b.height)
        throw param_error("image_diff: dimension mismatch");
    DiffStats d;
    long double sum = 0;
    for (std::size_t p = 0; p < a.data.size(); ++p) {
        const long v = std::labs(static_cast<long>(a.data[p]) - b.data[p]);
        sum += v;
        d.max_abs = std::max(d.max_abs, v);
    }
    d.mean_abs = a.data.empty() ? 0.0
                                : static_cast<double>(sum / a.data.size());
    return d;
}

double time_median_us(const std::function<void()>& fn, int repetitions,
                      int warmup) {
    if (repetitions < 1)
        throw param_error("time_median_us: repetitions must be >= 1");
    using clock = std::chrono::steady_clock;
    for (int i = 0; i < warmup; ++i)
        fn();
    std::vector<double> times(repetitions);
    for (auto& t : times) {
        const auto t0 = clock::now();
        fn();
        const auto t1 = clock::now();
        t = std::chrono::duration<double, std::micro>(t1 - t0).count();
    }
    std::sort(times.begin(), times.end());
    const int mid = repetitions / 2;
    return repetitions % 2 ? times[mid] : 0.5 * (times[mid - 1] + times[mid]);
}

namespace {

bool is_fast(const std::string& algo) { return algo == "fhe" || algo == "fsmirank"; }

std::string naive_counterpart(const std::string& algo) {
    return algo == "fhe" ? "he" : "smirank";
}

GrayImage run_algorithm(const std::string& algo, const GrayImage& x, int s,
                        int n_g, const SweepConfig& cfg) {
    if (algo == "he")
        return he(x);
    if (algo == "fhe")
        return fhe(x, s, n_g);
    if (algo == "smirank")
        return smirank(x, cfg.alpha, cfg.blocks_y, cfg.blocks_x);
    if (algo == "fsmirank")
        return fsmirank(x, s, n_g, cfg.alpha, cfg.blocks_y, cfg.blocks_x);
    throw param_error("unknown algorithm '" + algo + "'");
}

}  // namespace

std::vector<BenchRecord> run_sweep(const SweepConfig& config,
                                   const std::vector<NamedImage>& corpus) {
    if (corpus.empty())
        throw param_error("run_sweep: empty corpus");
    for (int s : config.s_values)
        if (s < 1)
            throw param_error("run_sweep: s must be >= 1");
    for (int n_g : config.n_g_values)
        quantization_step(n_g, 8);

    // Naive baselines run whenever requested directly or needed for diffs.
    std::vector<std::string> naive_algos;
    for (const auto& algo : config.algorithms) {
        const std::string base = is_fast(algo) ? naive_counterpart(algo) : algo;
        if (std::find(naive_algos.begin(), naive_algos.end(), base) ==
            naive_algos.end())
            naive_algos.push_back(base);
    }

    std::vector<BenchRecord> records;
    for (const auto& [id, img] : corpus) {
        std::map<std::string, GrayImage> naive_out;
        for (const auto& base : naive_algos) {
            BenchRecord rec;
            rec.algorithm = base;
            rec.s = 1;
            rec.n_g = 256;
            rec.alpha = config.alpha;
            rec.image_id = id;
            rec.width = img.width;
            rec.height = img.height;
            GrayImage out;
            rec.wall_time_us = time_median_us(
                [&] { out = run_algorithm(base, img, 1, 256, config); },
                config.repetitions, config.warmup);
            naive_out.emplace(base, std::move(out));
            records.push_back(std::move(rec));
        }
        for (const auto& algo : config.algorithms) {
            if (!is_fast(algo))
                continue;
            for (int s : config.s_values) {
                for (int n_g : config.n_g_values) {
                    BenchRecord rec;
                    rec.algorithm = algo;
                    rec.s = s;
                    rec.n_g = n_g;
                    rec.alpha = config.alpha;
                    rec.image_id = id;
                    rec.width = img.width;
                    rec.height = img.height;
                    GrayImage out;
                    rec.wall_time_us = time_median_us(
                        [&] { out = run_algorithm(algo, img, s, n_g, config); },
                        config.repetitions, config.warmup);
                    const DiffStats d =
                        image_diff(out, naive_out.at(naive_counterpart(algo)));
                    rec.mean_abs_diff = d.mean_abs;
                    rec.max_abs_diff = d.max_abs;
                    records.push_back(std::move(rec));
                }
            }
        }
    }
    return records;
}

const char* const kSweepCsvHeader =
    "algorithm,s,ng,alpha,image_id,width,height,wall_time_us,mean_abs_diff,"
    "max_abs_diff";

void write_sweep_csv(const std::vector<BenchRecord>& records, std::ostream& out) {
    out << kSweepCsvHeader << '\n';
    for (const auto& r : records) {
        out << r.algorithm << ',' << r.s << ',' << r.n_g << ',' << r.alpha << ','
            << r.image_id << ',' << r.width << ',' << r.height << ','
            << r.wall_time_us << ',' << r.mean_abs_diff << ',' << r.max_abs_diff
            << '\n';
    }

    // Per-configuration means, then naive/fast speedup ratios.
    struct Agg {
        double time_sum = 0;
        double diff_sum = 0;
        int n = 0;
    };
    std::map<std::tuple<std::string, int, int>, Agg> by_config;
    for (const auto& r : records) {
        auto& a = by_config[{r.algorithm, r.s, r.n_g}];
        a.time_sum += r.wall_time_us;
        a.diff_sum += r.mean_abs_diff;
        ++a.n;
    }
    out << "# summary\n";
    for (const auto& [key, a] : by_config) {
        const auto& [algo, s, n_g] = key;
        out << "# config," << algo << ",s=" << s << ",ng=" << n_g
            << ",mean_time_us=" << a.time_sum / a.n
            << ",mean_abs_diff=" << a.diff_sum / a.n << '\n';
    }
    for (const auto& [key, a] : by_config) {
        const auto& [algo, s, n_g] = key;
        if (!is_fast(algo))
            continue;
        const auto base = by_config.find({naive_counterpart(algo), 1, 256});
        if (base == by_config.end() || base->second.n == 0)
            continue;
        const double speedup =
            (base->second.time_sum / base->second.n) / (a.time_sum / a.n);
        out << "# speedup," << algo << ",s=" << s << ",ng=" << n_g << ','
            << speedup << '\n';
    }
}

namespace {

bool lut_non_decreasing(const CalibratedCurve& c) {
    for (std::size_t i = 1; i < c.lut.size(); ++i)
        if (c.lut[i] < c.lut[i - 1])
            return false;
    return true;
}

}  // namespace

std::vector<VerifyResult> run_verify(const std::vector<NamedImage>& corpus,
                                     double alpha, int blocks_y, int blocks_x) {
    std::vector<VerifyResult> results;
    auto report = [&](const std::string& check, const std::string& id, bool pass,
                      std::string detail = "") {
        results.push_back({check, id, pass, std::move(detail)});
    };

    for (const auto& [id, img] : corpus) {
        {
            const DiffStats d = image_diff(fhe(img, 1, 256), he(img));
            report("fhe-he-equivalence", id, d.max_abs == 0,
                   d.max_abs ? "max diff " + std::to_string(d.max_abs) : "");
        }
        {
            const DiffStats d =
                image_diff(fsmirank(img, 1, 256, alpha, blocks_y, blocks_x),
                           smirank(img, alpha, blocks_y, blocks_x));
            report("fsmirank-smirank-equivalence", id, d.max_abs == 0,
                   d.max_abs ? "max diff " + std::to_string(d.max_abs) : "");
        }
        {
            // the downsampled image must still cover the block grid
            const int s =
                (img.width / 8 >= blocks_x && img.height / 8 >= blocks_y) ? 8 : 1;
            const bool ok =
                lut_non_decreasing(fhe_curve(img, 1, 256)) &&
                lut_non_decreasing(fhe_curve(img, s, 64)) &&
                lut_non_decreasing(smirank_curve(img, alpha, blocks_y, blocks_x)) &&
                lut_non_decreasing(
                    fsmirank_curve(img, s, 64, alpha, blocks_y, blocks_x));
            report("lut-monotonicity", id, ok);
        }
        {
            bool ok = true;
            for (int n_g : {256, 64, 2}) {
                const Histogram h = histogram(img, n_g);
                std::uint64_t sum = 0;
                for (auto b : h.bins)
                    sum += b;
                ok = ok && sum == img.pixel_count() && sum == h.total;
            }
            report("histogram-mass", id, ok);
        }
        {
            bool ok = true;
            std::string detail;
            const BlockHistogramMatrix h =
                block_histograms(img, 64, blocks_y, blocks_x);
            const MutualInfoMatrix info = mutual_information(h);
            const int k_dim = info.dim();
            if (k_dim >= 2) {
                const Matrix s = column_stochastic(info);
                const RankVector r = rank_vector(s, alpha);
                double sum = 0;
                for (double v : r.values) {
                    sum += v;
                    if (!(v > 0))
                        ok = false;
                }
                if (std::abs(sum - 1.0) > 1e-9) {
                    ok = false;
                    detail = "rank sum " + std::to_string(sum);
                }
                const double rhs = (1.0 - alpha) / k_dim;
                for (int row = 0; row < k_dim; ++row) {
                    double acc = r.values[row];
                    for (int c = 0; c < k_dim; ++c)
                        acc -= alpha * s.at(row, c) * r.values[c];
                    if (std::abs(acc - rhs) > 1e-9)
                        ok = false;
                }
            }
            report("rank-invariants", id, ok, detail);
        }
    }
    return results;
}

std::vector<NamedImage> load_corpus(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir))
        throw io_error("corpus directory '" + dir + "' not readable");
    std::vector<NamedImage> corpus;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file())
            continue;
        const std::string ext = entry.path().extension().string();
        if (ext != ".pgm" && ext != ".ppm")
            continue;
        AnyImage any = read_image(entry.path().string());
        GrayImage gray = std::holds_alternative<GrayImage>(any)
                             ? std::get<GrayImage>(std::move(any))
                             : extract_luminance(std::get<ColorImage>(any));
        corpus.push_back({entry.path().filename().string(), std::move(gray)});
    }
    std::sort(corpus.begin(), corpus.end(),
              [](const NamedImage& a, const NamedImage& b) { return a.id < b.id; });
    return corpus;
}

std::vector<NamedImage> synthetic_corpus(int count, int width, int height,
                                         std::uint64_t seed) {
    static constexpr SyntheticKind kinds[] = {
        SyntheticKind::UniformNoise, SyntheticKind::TwoPeak,
        SyntheticKind::SmoothGradient, SyntheticKind::HdrPeaky};
    std::vector<NamedImage> corpus;
    corpus.reserve(count);
    for (int i = 0; i < count; ++i) {
        const SyntheticKind kind = kinds[i % 4];
        corpus.push_back(
            {std::string(synthetic_kind_name(kind)) + "-" + std::to_string(i),
             generate_synthetic(kind, width, height, seed + i)});
    }
    return corpus;
}

}  // namespace fastce
