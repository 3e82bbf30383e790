#pragma once

#include <string>
#include <vector>

#include "mind/pipeline.hpp"

namespace mind {
namespace risk {

// Row-major sample matrix with per-row outcome labels and task ids.
struct FeatureMatrix {
    int64_t rows = 0;
    int64_t cols = 0;
    std::vector<double> data;
    std::vector<int> labels;  // 1 success, 0 failure
    std::vector<int> tasks;

    double at(int64_t r, int64_t c) const { return data[static_cast<size_t>(r * cols + c)]; }
};

struct Pca2D {
    std::vector<double> mean;
    std::vector<double> dir1, dir2;        // orthonormal principal directions
    double explained1 = 0.0, explained2 = 0.0;  // fractions of total variance
    std::vector<double> proj;              // rows x 2 coordinates
};

struct ProbeMetrics {
    double accuracy = 0.0;
    double auc = 0.0;
    int64_t tp = 0, fp = 0, tn = 0, fn = 0;
    int64_t rows = 0;
};

struct InterventionRow {
    InterventionType type;
    double magnitude = 0.0;
    double baseline_sr = 0.0;
    double intervened_sr = 0.0;
    double delta = 0.0;
};

// One row per (record, replan, frame): the flattened per-frame latent
// concatenated with that replan's pooled matcher feature, labeled by the
// episode outcome.
FeatureMatrix extract_features(const std::vector<RolloutRecord>& records);

// Jacobi rotations on the sample covariance; top-2 eigenpairs with the
// largest-magnitude entry of each direction made positive.
Pca2D pca_2d(const FeatureMatrix& X);

// Full symmetric eigendecomposition used by pca_2d, exposed for oracle
// comparisons. Returns eigenvalues (descending) and row-major eigenvectors
// (one per row).
void jacobi_eigen(const std::vector<double>& sym, int64_t n, std::vector<double>& values,
                  std::vector<double>& vectors);

// Logistic probe fit with gradient descent on standardized features,
// stratified 5-fold cross-validation, pooled held-out metrics.
ProbeMetrics fit_risk_probe(const FeatureMatrix& X, uint64_t seed, int folds = 5);

// Mean held-out AUC across label permutations (the probe's null).
double permutation_null_auc(const FeatureMatrix& X, uint64_t seed, int n_shuffles = 20);

// Baseline vs. intervened success over matched seeds. Cross-episode
// injection harvests its z cache from the baseline pass.
InterventionRow intervene(Models& models, const InterventionSpec& spec, int n_rollouts,
                          uint64_t seed0, int workers = 1);

// Exact one-sided binomial tail: P(X <= k) for X ~ Bin(n, p).
double binomial_cdf(int k, int n, double p);

// CSV emission (schemas documented in the README).
void write_pca_points(const std::string& path, const Pca2D& pca, const FeatureMatrix& X);
void write_risk_metrics(const std::string& path, const ProbeMetrics& m, double null_auc);
void write_interventions(const std::string& path, const std::vector<InterventionRow>& rows);

}  // namespace risk
}  // namespace mind
