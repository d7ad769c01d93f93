// fastce: contrast enhancement with selective-downsampling acceleration.
//
// Subcommands:
//   enhance   apply he/fhe/smirank/fsmirank to a PGM/PPM image
//   sweep     (s, n_g) parameter sweep with timing and divergence CSV
//   verify    oracle-equivalence and invariant checks over a corpus
//   gen       deterministic synthetic test images

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fastce/bench.hpp"
#include "fastce/he.hpp"
#include "fastce/imageio.hpp"
#include "fastce/smirank.hpp"
#include "fastce/synthetic.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct GridOption {
    int blocks_y = 8;
    int blocks_x = 8;
};

GridOption parse_grid(const std::string& text) {
    GridOption g;
    char sep = 0;
    std::istringstream in(text);
    if (!(in >> g.blocks_y >> sep >> g.blocks_x) || sep != 'x' ||
        g.blocks_y < 1 || g.blocks_x < 1 || !in.eof())
        throw fastce::param_error("--grid expects <by>x<bx>, got '" + text + "'");
    return g;
}

fastce::GrayImage run_gray(const std::string& algo, const fastce::GrayImage& x,
                           int s, int n_g, double alpha, const GridOption& grid) {
    if (algo == "he")
        return fastce::he(x);
    if (algo == "fhe")
        return fastce::fhe(x, s, n_g);
    if (algo == "smirank")
        return fastce::smirank(x, alpha, grid.blocks_y, grid.blocks_x);
    if (algo == "fsmirank")
        return fastce::fsmirank(x, s, n_g, alpha, grid.blocks_y, grid.blocks_x);
    throw fastce::param_error("unknown algorithm '" + algo + "'");
}

int cmd_enhance(const std::string& input, const std::string& output,
                const std::string& algo, int s, int n_g, double alpha,
                const std::string& grid_text) {
    const GridOption grid = parse_grid(grid_text);
    fastce::quantization_step(n_g, 8);
    if (s < 1)
        throw fastce::param_error("--s must be a positive integer");

    const fastce::AnyImage in = fastce::read_image(input);
    const auto t0 = std::chrono::steady_clock::now();
    fastce::AnyImage out;
    if (std::holds_alternative<fastce::GrayImage>(in)) {
        out = run_gray(algo, std::get<fastce::GrayImage>(in), s, n_g, alpha, grid);
    } else {
        const auto& color = std::get<fastce::ColorImage>(in);
        const fastce::GrayImage v = fastce::extract_luminance(color);
        out = fastce::recombine_luminance(color,
                                          run_gray(algo, v, s, n_g, alpha, grid));
    }
    const auto t1 = std::chrono::steady_clock::now();
    fastce::write_image(out, output);

    std::cerr << "algo=" << algo << " s=" << s << " ng=" << n_g
              << " alpha=" << alpha << " grid=" << grid.blocks_y << 'x'
              << grid.blocks_x << " wall_time_us="
              << std::chrono::duration<double, std::micro>(t1 - t0).count()
              << '\n';
    return kExitOk;
}

int cmd_sweep(const fastce::SweepConfig& config, const std::string& corpus_dir,
              int synth_count, int width, int height, std::uint64_t seed,
              const std::string& csv_path) {
    std::vector<fastce::NamedImage> corpus;
    if (!corpus_dir.empty())
        corpus = fastce::load_corpus(corpus_dir);
    if (corpus.empty()) {
        if (synth_count < 1)
            throw fastce::io_error("corpus '" + corpus_dir +
                                   "' yielded no images and no synthetic "
                                   "generation was configured");
        corpus = fastce::synthetic_corpus(synth_count, width, height, seed);
    }

    const auto records = fastce::run_sweep(config, corpus);
    if (csv_path.empty() || csv_path == "-") {
        fastce::write_sweep_csv(records, std::cout);
    } else {
        std::ofstream out(csv_path);
        if (!out)
            throw fastce::io_error("cannot open '" + csv_path + "' for writing");
        fastce::write_sweep_csv(records, out);
        std::cerr << records.size() << " records -> " << csv_path << '\n';
    }
    return kExitOk;
}

int cmd_verify(const std::string& corpus_dir, int synth_count, int width,
               int height, std::uint64_t seed, double alpha,
               const std::string& grid_text) {
    const GridOption grid = parse_grid(grid_text);
    std::vector<fastce::NamedImage> corpus;
    if (!corpus_dir.empty())
        corpus = fastce::load_corpus(corpus_dir);
    if (corpus.empty())
        corpus = fastce::synthetic_corpus(synth_count, width, height, seed);

    const auto results =
        fastce::run_verify(corpus, alpha, grid.blocks_y, grid.blocks_x);
    bool all_pass = true;
    const fastce::VerifyResult* first_fail = nullptr;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << '\t' << r.check << '\t'
                  << r.image_id;
        if (!r.detail.empty())
            std::cout << '\t' << r.detail;
        std::cout << '\n';
        if (!r.pass) {
            all_pass = false;
            if (!first_fail)
                first_fail = &r;
        }
    }
    if (!all_pass) {
        std::cerr << "verification failed: " << first_fail->check << " on "
                  << first_fail->image_id << '\n';
        return kExitVerifyFail;
    }
    std::cout << results.size() << " checks over " << corpus.size()
              << " images: all PASS\n";
    return kExitOk;
}

int cmd_gen(const std::string& kind_name, int width, int height,
            std::uint64_t seed, const std::string& output) {
    const fastce::SyntheticKind kind =
        fastce::synthetic_kind_from_name(kind_name);
    fastce::write_image(fastce::generate_synthetic(kind, width, height, seed),
                        output);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"histogram-based contrast enhancement, accelerated by "
                 "selective spatial and gray-level downsampling"};
    app.require_subcommand(1);

    const std::vector<std::string> algo_names{"he", "fhe", "smirank", "fsmirank"};

    // enhance
    auto* enhance = app.add_subcommand("enhance", "enhance a single image");
    std::string in_path, out_path, algo = "fhe", grid_text = "8x8";
    int s = 8, n_g = 64;
    double alpha = 0.9;
    enhance->add_option("input", in_path, "input PGM/PPM")->required();
    enhance->add_option("output", out_path, "output PGM/PPM")->required();
    enhance->add_option("--algo", algo)->check(CLI::IsMember(algo_names));
    enhance->add_option("--s", s, "spatial downsampling step");
    enhance->add_option("--ng", n_g, "histogram bin count (power of two)");
    enhance->add_option("--alpha", alpha, "PageRank damping factor");
    enhance->add_option("--grid", grid_text, "block grid <by>x<bx>");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "parameter sweep with timing CSV");
    fastce::SweepConfig config;
    std::string corpus_dir, csv_path;
    int synth_count = 8, width = 1024, height = 768;
    std::uint64_t seed = 1;
    sweep->add_option("--corpus", corpus_dir, "directory of PGM/PPM images");
    sweep->add_option("--synth", synth_count,
                      "synthetic image count when no corpus is given");
    sweep->add_option("--width", width);
    sweep->add_option("--height", height);
    sweep->add_option("--seed", seed, "seed for synthetic images");
    sweep->add_option("--algo", config.algorithms, "algorithms to sweep");
    sweep->add_option("--s", config.s_values, "s values");
    sweep->add_option("--ng", config.n_g_values, "n_g values");
    sweep->add_option("--alpha", config.alpha);
    std::string sweep_grid = "8x8";
    sweep->add_option("--grid", sweep_grid, "block grid <by>x<bx>");
    sweep->add_option("--reps", config.repetitions, "timed repetitions")
        ->check(CLI::Range(1, 1000));
    sweep->add_option("--warmup", config.warmup)->check(CLI::Range(0, 1000));
    sweep->add_option("--csv", csv_path, "output CSV path ('-' for stdout)");

    // verify
    auto* verify = app.add_subcommand(
        "verify", "run oracle-equivalence and invariant checks");
    std::string v_corpus, v_grid = "8x8";
    int v_synth = 12, v_width = 256, v_height = 192;
    std::uint64_t v_seed = 7;
    double v_alpha = 0.9;
    verify->add_option("--corpus", v_corpus, "directory of PGM/PPM images");
    verify->add_option("--synth", v_synth);
    verify->add_option("--width", v_width);
    verify->add_option("--height", v_height);
    verify->add_option("--seed", v_seed);
    verify->add_option("--alpha", v_alpha);
    verify->add_option("--grid", v_grid);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a synthetic image");
    std::string g_kind = "uniform-noise", g_out;
    int g_width = 1024, g_height = 768;
    std::uint64_t g_seed = 1;
    gen->add_option("output", g_out, "output PGM path")->required();
    gen->add_option("--kind", g_kind)
        ->check(CLI::IsMember({"uniform-noise", "two-peak", "smooth-gradient",
                               "hdr-peaky"}));
    gen->add_option("--width", g_width);
    gen->add_option("--height", g_height);
    gen->add_option("--seed", g_seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*enhance)
            return cmd_enhance(in_path, out_path, algo, s, n_g, alpha, grid_text);
        if (*sweep) {
            const GridOption g = parse_grid(sweep_grid);
            config.blocks_y = g.blocks_y;
            config.blocks_x = g.blocks_x;
            return cmd_sweep(config, corpus_dir, synth_count, width, height,
                             seed, csv_path);
        }
        if (*verify)
            return cmd_verify(v_corpus, v_synth, v_width, v_height, v_seed,
                              v_alpha, v_grid);
        if (*gen)
            return cmd_gen(g_kind, g_width, g_height, g_seed, g_out);
    } catch (const fastce::param_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const fastce::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const fastce::io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
