#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "claimrisk/matrix.hpp"

namespace claimrisk {

/// svm and neural_net are reserved names so screening configs naming them
/// parse; fitting either reports "not implemented".
enum class Family { random_forest, lasso_logistic, logistic, naive_bayes, knn, svm, neural_net };

enum class Sampling { none, up, down };

std::string to_string(Family f);
std::string to_string(Sampling s);
Family parse_family(const std::string& s);
Sampling parse_sampling(const std::string& s);

/// Classifier family plus an ordered parameter list and a class-rebalancing
/// choice. Parameters not listed fall back to family defaults at fit time.
struct ClassifierSpec {
    Family family = Family::random_forest;
    std::vector<std::pair<std::string, double>> params;
    Sampling sampling = Sampling::none;

    double param(const std::string& name, double fallback) const;
    void set_param(const std::string& name, double value);
    std::string params_to_string() const;  // "name=value;name=value"
};

ClassifierSpec default_spec(Family family);
ClassifierSpec parse_spec(const std::string& family, const std::string& params,
                          const std::string& sampling);

/// Per-feature training mean and standard deviation. sd == 0 marks a constant
/// column: linear models drop it, knn treats it as scale-free.
struct Standardization {
    std::vector<double> mean;
    std::vector<double> sd;

    static Standardization fit(const FeatureMatrix& m);
    double transform(double value, std::size_t col) const {
        return sd[col] > 0 ? (value - mean[col]) / sd[col] : 0.0;
    }
};

struct TreeNode {
    int feature = -1;  // -1 marks a leaf
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    double leaf_fraction = 0.0;

    bool is_leaf() const { return feature < 0; }
};

struct Tree {
    std::vector<TreeNode> nodes;
    double score(const double* row) const;
};

struct ForestModel {
    std::vector<Tree> trees;
};

struct LinearModel {
    std::vector<double> coefficients;  // original scale; dropped columns get 0
    double intercept = 0.0;
};

struct NaiveBayesModel {
    double log_prior[2] = {0.0, 0.0};
    std::vector<double> mean[2];
    std::vector<double> variance[2];  // floored at var_floor
};

struct KnnModel {
    int k = 1;
    std::vector<double> train_values;  // standardized, row-major
    std::vector<std::uint8_t> train_labels;
};

struct TrainedModel {
    Family family = Family::random_forest;
    std::vector<std::string> schema;  // training column names, checked at predict
    bool converged = true;
    std::vector<std::string> warnings;
    Standardization standardization;  // lasso/logistic/knn
    ForestModel forest;
    LinearModel linear;
    NaiveBayesModel nb;
    KnnModel knn;
};

TrainedModel fit_balanced_rf(const FeatureMatrix& data, const ClassifierSpec& spec,
                             std::uint64_t seed, int workers = 1);
TrainedModel fit_lasso_logistic(const FeatureMatrix& data, const ClassifierSpec& spec);
TrainedModel fit_logistic(const FeatureMatrix& data, const ClassifierSpec& spec);
TrainedModel fit_gaussian_nb(const FeatureMatrix& data, const ClassifierSpec& spec);
TrainedModel fit_knn(const FeatureMatrix& data, const ClassifierSpec& spec,
                     std::uint64_t seed);

/// Family dispatch. Deterministic given (data, spec, seed).
TrainedModel fit_model(const FeatureMatrix& data, const ClassifierSpec& spec,
                       std::uint64_t seed, int workers = 1);

/// One score in [0,1] per row. The matrix columns must match the training
/// schema exactly (names and order); mismatches are rejected, never reordered.
std::vector<double> predict_scores(const TrainedModel& model, const FeatureMatrix& data,
                                   int workers = 1);

/// Versioned structured-text (JSON) model file; schema embedded.
void save_model(const TrainedModel& model, const std::string& path);
TrainedModel load_model(const std::string& path);

/// Smallest lambda that zeroes every coefficient, computed on standardized
/// columns: max_j |sum_i x_ij (y_i - ybar)| / n.
double lasso_lambda_max(const FeatureMatrix& data);

/// 20 log-spaced values descending from lambda_max to lambda_max * 1e-4.
std::vector<double> lasso_lambda_path(const FeatureMatrix& data, int n_values = 20);

}  // namespace claimrisk
