// Rank AUC, bootstrap confidence intervals, and Welch's t-test.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "segmil/common.hpp"

namespace segmil {

// Parallel (id, score, label) lists for one evaluation level.
struct ScoredSet {
    std::string level;  // "patient", "rca", "lca", "segment:<id>", "view"
    std::vector<std::string> ids;
    std::vector<double> scores;
    std::vector<int> labels;  // 0/1

    std::size_t size() const { return scores.size(); }
    void add(std::string id, double score, int label) {
        ids.push_back(std::move(id));
        scores.push_back(score);
        labels.push_back(label);
    }
    void validate() const;
    bool two_class() const;
};

// Rank-statistic AUC; tied positive-negative pairs count 0.5.
double roc_auc(const ScoredSet& s);

struct BootstrapResult {
    double median = 0.0, lo95 = 0.0, hi95 = 0.0;
    int redraws = 0;               // single-class resamples that were redrawn
    std::vector<double> samples;   // per-resample AUCs, n_resamples entries
};

// Resamples entities with replacement; single-class resamples are redrawn
// (count reported). Deterministic for a fixed seed.
BootstrapResult bootstrap_median_ci(const ScoredSet& s, int n_resamples, std::uint64_t seed);

struct WelchResult {
    double t = 0.0, df = 0.0, p = 1.0;
};

// Unequal-variance two-sample t-test with Welch-Satterthwaite df and a
// two-sided p-value. Both samples need at least two values.
WelchResult welch_t(const std::vector<double>& a, const std::vector<double>& b);

struct MacroAucResult {
    double value = 0.0;
    int included = 0;
    std::vector<std::string> excluded;  // single-class sets, logged and skipped
};

// Unweighted mean AUC over the given per-segment sets.
MacroAucResult segment_macro_auc(const std::vector<ScoredSet>& per_segment);

// Linear-interpolation quantile of an ascending-sorted vector, q in [0,1].
double quantile_sorted(const std::vector<double>& sorted, double q);

// Regularized incomplete beta function I_x(a, b); exposed for tests.
double incomplete_beta(double a, double b, double x);

// Two-sided p-value of a t statistic with df degrees of freedom.
double student_t_two_sided_p(double t, double df);

}  // namespace segmil
