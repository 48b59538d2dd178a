#include "claimrisk/eval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "claimrisk/parallel.hpp"
#include "claimrisk/rng.hpp"

namespace claimrisk {

double auc(const std::vector<double>& scores, const std::vector<std::uint8_t>& labels) {
    if (scores.size() != labels.size()) {
        throw std::invalid_argument("auc: scores/labels size mismatch");
    }
    const std::size_t n = scores.size();
    std::size_t n_pos = 0;
    for (auto l : labels) n_pos += l;
    const std::size_t n_neg = n - n_pos;
    if (n_pos == 0 || n_neg == 0) {
        throw std::invalid_argument("auc: both classes must be present");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

    // Midranks over tie groups; rank sums stay exact in doubles at this scale.
    double pos_rank_sum = 0.0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && scores[order[j]] == scores[order[i]]) ++j;
        const double midrank = 0.5 * static_cast<double>(i + 1 + j);  // ranks i+1..j
        for (std::size_t k = i; k < j; ++k) {
            if (labels[order[k]]) pos_rank_sum += midrank;
        }
        i = j;
    }
    const double u = pos_rank_sum -
                     0.5 * static_cast<double>(n_pos) * static_cast<double>(n_pos + 1);
    return u / (static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

BootstrapResult bootstrap_sd(const std::vector<double>& scores,
                             const std::vector<std::uint8_t>& labels,
                             int n_replicates, std::uint64_t seed, int workers) {
    const std::size_t n = scores.size();
    if (n == 0 || n_replicates < 2) {
        throw std::invalid_argument("bootstrap_sd: need data and >= 2 replicates");
    }
    auc(scores, labels);  // validates both classes present

    std::vector<double> replicate_auc(n_replicates);
    std::vector<int> redraws(n_replicates, 0);
    parallel_for(static_cast<std::size_t>(n_replicates), workers, [&](std::size_t r) {
        std::vector<double> s(n);
        std::vector<std::uint8_t> l(n);
        for (std::uint64_t attempt = 0;; ++attempt) {
            Rng rng(mix_seed(seed, r, attempt));
            std::size_t n_pos = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::size_t pick = static_cast<std::size_t>(rng.uniform_int(n));
                s[i] = scores[pick];
                l[i] = labels[pick];
                n_pos += l[i];
            }
            if (n_pos > 0 && n_pos < n) {
                replicate_auc[r] = auc(s, l);
                redraws[r] = static_cast<int>(attempt);
                return;
            }
        }
    });

    double mean = 0.0;
    for (double v : replicate_auc) mean += v;
    mean /= n_replicates;
    double ss = 0.0;
    for (double v : replicate_auc) ss += (v - mean) * (v - mean);

    BootstrapResult result;
    result.sd = std::sqrt(ss / (n_replicates - 1));
    result.n_replicates = n_replicates;
    for (int r : redraws) result.n_redraws += r;
    return result;
}

EvalResult evaluate(const std::vector<double>& scores,
                    const std::vector<std::uint8_t>& labels, int n_replicates,
                    std::uint64_t seed, int workers) {
    EvalResult out;
    out.auc = auc(scores, labels);
    auto boot = bootstrap_sd(scores, labels, n_replicates, seed, workers);
    out.sd = boot.sd;
    out.n_replicates = boot.n_replicates;
    for (auto l : labels) (l ? out.n_events : out.n_nonevents) += 1;
    return out;
}

}  // namespace claimrisk
