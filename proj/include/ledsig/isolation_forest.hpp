#ifndef LEDSIG_ISOLATION_FOREST_HPP
#define LEDSIG_ISOLATION_FOREST_HPP

#include "ledsig/analytics.hpp"

#include <cstdint>
#include <vector>

namespace ledsig {

// Expected unsuccessful-search path length in a BST of n points; the
// normalizer c(n) of the isolation-forest score.
double average_path_length(std::int64_t n);

struct IsoNode {
    int feature = -1; // -1 marks a leaf
    double split = 0.0;
    std::int32_t left = -1;
    std::int32_t right = -1;
    std::int32_t size = 0; // points that ended in this node (leaves)
};

struct IsoTree {
    std::vector<IsoNode> nodes; // root at index 0
};

struct IsolationForestModel {
    std::vector<IsoTree> trees;
    int n_trees = 0;
    int psi = 0;           // effective subsample size (after clamping)
    int requested_psi = 0;
    bool psi_clamped = false;
    std::uint64_t seed = 0;
    int n_features = 0;
    int height_limit = 0;  // ceil(log2 psi)
    double c_psi = 0.0;    // average_path_length(psi)
};

// Builds n_trees isolation trees, each over a psi-point subsample drawn
// without replacement. Splits pick a uniform random non-constant feature
// and a uniform cut between that feature's min and max within the node.
// Per-tree seeds derive from `seed` by tree index, so any evaluation order
// gives the same model. psi larger than the dataset is clamped (and
// flagged in the model). Throws NumericError when all points are
// identical (nothing can ever split).
IsolationForestModel isoforest_fit(const std::vector<std::vector<double>>& points,
                                   int n_trees, int psi, std::uint64_t seed);

// Anomaly score s = 2^(-E[h]/c(psi)), strictly inside (0, 1).
double isoforest_score(const IsolationForestModel& model,
                       const std::vector<double>& point);

struct AnomalyFlag {
    Date period_start;
    double score = 0.0;
    bool flagged = false;
};

struct AnomalyReport {
    std::vector<AnomalyFlag> periods; // ascending by period_start
    double threshold = 1.0;
    double contamination = 0.05;
    int n_trees = 0;
    int psi = 0;
    std::uint64_t seed = 0;
    bool volume_feature = false;
};

// Scores each week of the resampled series (frequency alone by default,
// frequency+volume with volume_feature) and flags every week whose score
// reaches the m-th largest, m = floor(contamination * n). Ties at the
// threshold are all flagged; m = 0 flags nothing. Needs >= 8 weeks.
AnomalyReport detect(const ResampledSeries& weekly, double contamination,
                     int n_trees, int psi, std::uint64_t seed,
                     bool volume_feature = false);

struct ContaminationSweep {
    struct Entry {
        double contamination = 0.0;
        double threshold = 1.0;
        std::vector<Date> flagged; // ascending
    };
    std::vector<Entry> entries; // one per requested value, input order
};

// detect() at several contamination values over one shared fitted model,
// so the flag sets nest as contamination grows.
ContaminationSweep sweep_contamination(const ResampledSeries& weekly,
                                       const std::vector<double>& values,
                                       int n_trees, int psi, std::uint64_t seed,
                                       bool volume_feature = false);

} // namespace ledsig

#endif
