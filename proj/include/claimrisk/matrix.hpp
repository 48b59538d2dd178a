#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace claimrisk {

/// Recent/baseline boundary month: window A = months 1..boundary, window B =
/// months boundary+1..12. No boundary means a single 1..12 window.
struct WindowSplit {
    std::optional<int> boundary;  // in [1, 11] when present

    static WindowSplit at(int b) { return WindowSplit{b}; }
    static WindowSplit none() { return WindowSplit{std::nullopt}; }

    bool operator==(const WindowSplit&) const = default;

    std::string label() const {
        return boundary ? std::to_string(*boundary) : std::string();
    }
};

/// Named numeric columns plus binary outcome labels for one
/// cohort / variable-set / window-split combination. Row-major, no missing
/// values (absence is a zero count).
struct FeatureMatrix {
    std::vector<std::string> column_names;
    std::vector<double> values;  // n_rows x n_cols
    std::vector<std::uint8_t> labels;
    std::vector<std::string> ids;
    std::string cohort_name;
    std::string variable_set;  // "traditional" or "augmented"
    WindowSplit window_split;

    std::size_t n_rows() const { return labels.size(); }
    std::size_t n_cols() const { return column_names.size(); }

    double at(std::size_t row, std::size_t col) const {
        return values[row * n_cols() + col];
    }
    const double* row(std::size_t r) const { return values.data() + r * n_cols(); }

    int column_index(const std::string& name) const;

    std::size_t count_events() const;

    /// Rows whose ids appear in `keep`, preserving row order.
    FeatureMatrix subset_by_ids(const std::vector<std::string>& keep) const;

    void check_consistent() const;
};

/// CSV layout: header `id,<columns...>,label`, one row per beneficiary.
std::string feature_matrix_to_csv(const FeatureMatrix& m);

/// One-line sidecar carrying cohort, variable_set and boundary.
std::string feature_matrix_meta(const FeatureMatrix& m);

FeatureMatrix load_feature_matrix(const std::string& csv_path);

}  // namespace claimrisk
