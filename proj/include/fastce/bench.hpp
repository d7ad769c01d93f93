#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "fastce/image.hpp"

namespace fastce {

struct BenchRecord {
    std::string algorithm;
    int s = 1;
    int n_g = 256;
    double alpha = 0.9;
    std::string image_id;
    int width = 0;
    int height = 0;
    double wall_time_us = 0;     // median over repetitions
    double mean_abs_diff = 0;    // vs the naive counterpart (fast algos only)
    long max_abs_diff = 0;
};

struct SweepConfig {
    std::vector<int> s_values{8};
    std::vector<int> n_g_values{64};
    std::vector<std::string> algorithms{"fhe", "fsmirank"};
    int repetitions = 5;
    int warmup = 2;
    double alpha = 0.9;
    int blocks_y = 8;
    int blocks_x = 8;
};

struct NamedImage {
    std::string id;
    GrayImage image;
};

struct DiffStats {
    double mean_abs = 0;
    long max_abs = 0;
};

DiffStats image_diff(const GrayImage& a, const GrayImage& b);

/// Median wall time in microseconds over `repetitions` runs after `warmup`
/// discarded runs.
double time_median_us(const std::function<void()>& fn, int repetitions,
                      int warmup);

/// One record per (algorithm, s, n_g, image). Naive algorithms ignore the
/// (s, n_g) grid and appear once per image; fast ones carry diff stats
/// against their naive counterpart.
std::vector<BenchRecord> run_sweep(const SweepConfig& config,
                                   const std::vector<NamedImage>& corpus);

extern const char* const kSweepCsvHeader;

void write_sweep_csv(const std::vector<BenchRecord>& records, std::ostream& out);

struct VerifyResult {
    std::string check;
    std::string image_id;
    bool pass = false;
    std::string detail;
};

/// Runs the oracle-equivalence and invariant checks over every corpus image.
std::vector<VerifyResult> run_verify(const std::vector<NamedImage>& corpus,
                                     double alpha = 0.9, int blocks_y = 8,
                                     int blocks_x = 8);

/// PGM/PPM files of a directory (color reduced to luminance), sorted by name.
std::vector<NamedImage> load_corpus(const std::string& dir);

/// Deterministic mixed-kind synthetic corpus.
std::vector<NamedImage> synthetic_corpus(int count, int width, int height,
                                         std::uint64_t seed);

}  // namespace fastce
