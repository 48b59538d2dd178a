#pragma once

#include <cstdint>
#include <vector>

namespace claimrisk {

/// Probability that a random positive outscores a random negative, ties
/// counted one half (Mann-Whitney convention). O(n log n) via midranks.
/// Throws on single-class input.
double auc(const std::vector<double>& scores, const std::vector<std::uint8_t>& labels);

struct BootstrapResult {
    double sd = 0.0;
    int n_replicates = 0;
    int n_redraws = 0;  // replicates redrawn because a resample was single-class
};

/// Sample standard deviation of AUC over joint (score,label) resamples.
/// Replicate i draws from a stream keyed by (seed, i), so results are
/// independent of worker scheduling.
BootstrapResult bootstrap_sd(const std::vector<double>& scores,
                             const std::vector<std::uint8_t>& labels,
                             int n_replicates, std::uint64_t seed, int workers = 1);

struct EvalResult {
    double auc = 0.0;
    double sd = 0.0;
    std::size_t n_events = 0;
    std::size_t n_nonevents = 0;
    int n_replicates = 0;
};

EvalResult evaluate(const std::vector<double>& scores,
                    const std::vector<std::uint8_t>& labels, int n_replicates,
                    std::uint64_t seed, int workers = 1);

}  // namespace claimrisk
