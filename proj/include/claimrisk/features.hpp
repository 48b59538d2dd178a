#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "claimrisk/claims.hpp"
#include "claimrisk/matrix.hpp"

namespace claimrisk {

/// Nested study samples: the cohort is halved into development and validation,
/// development halved again into training (model fit) and tuning (greedy
/// parameter selection). Sizes differ by at most one on odd totals.
struct SampleSplit {
    std::vector<std::string> development_ids;
    std::vector<std::string> validation_ids;
    std::vector<std::string> training_ids;
    std::vector<std::string> tuning_ids;

    /// Order-independent digest, recorded in run manifests so reports can
    /// assert that every cell used the same split.
    std::uint64_t hash() const;
};

SampleSplit split_samples(std::vector<std::string> ids, std::uint64_t seed);

/// Primary boundary (3), the ten alternates 1,2,4..11, then the single-window
/// set: 12 splits in total.
std::vector<WindowSplit> enumerate_window_splits();

/// Age, sex, 51 state one-hots and 20 comorbidity indicators: 73 columns.
std::vector<std::string> traditional_column_names(const CodeMap& code_map);

/// Demographics plus per-group windowed encounter counts, functional and
/// equipment counts, and utilization; 132 columns with the default boundary.
std::vector<std::string> augmented_column_names(const CodeMap& code_map,
                                                const WindowSplit& split);

std::vector<double> build_traditional(const Beneficiary& b,
                                      const std::vector<const Claim*>& claims,
                                      const CodeMap& code_map, const StudyConfig& config);

std::vector<double> build_augmented(const Beneficiary& b,
                                    const std::vector<const Claim*>& claims,
                                    const CodeMap& code_map, const StudyConfig& config,
                                    const WindowSplit& split);

/// Assemble a labeled matrix over a cohort, rows ordered by beneficiary id.
/// variable_set is "traditional" or "augmented"; the split applies only to
/// the augmented set.
FeatureMatrix build_feature_matrix(const std::vector<Beneficiary>& beneficiaries,
                                   const std::vector<Claim>& claims,
                                   const CodeMap& code_map, const StudyConfig& config,
                                   const std::string& cohort_name,
                                   const std::string& variable_set,
                                   const WindowSplit& split = WindowSplit::at(3));

}  // namespace claimrisk
