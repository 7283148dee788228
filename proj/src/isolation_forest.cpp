#include "ledsig/isolation_forest.hpp"

#include "ledsig/errors.hpp"
#include "ledsig/rng.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ledsig {

namespace {

constexpr double kEulerGamma = 0.5772156649;

int height_limit_for(int psi) {
    int limit = 0;
    int capacity = 1;
    while (capacity < psi) {
        capacity *= 2;
        limit += 1;
    }
    return limit; // ceil(log2 psi)
}

struct TreeBuilder {
    const std::vector<std::vector<double>>& points;
    IsoTree& tree;
    Rng& rng;
    int height_limit;
    std::vector<int> indices; // subsample, partitioned in place

    std::int32_t build(int begin, int end, int depth) {
        const std::int32_t node_index = static_cast<std::int32_t>(tree.nodes.size());
        tree.nodes.push_back(IsoNode{});
        tree.nodes[node_index].size = end - begin;

        if (end - begin <= 1 || depth >= height_limit)
            return node_index;

        // Split candidates: features that actually vary inside this node.
        const int n_features = static_cast<int>(points[indices[begin]].size());
        std::vector<int> varying;
        std::vector<std::pair<double, double>> ranges(n_features);
        for (int f = 0; f < n_features; f++) {
            double lo = points[indices[begin]][f];
            double hi = lo;
            for (int i = begin + 1; i < end; i++) {
                lo = std::min(lo, points[indices[i]][f]);
                hi = std::max(hi, points[indices[i]][f]);
            }
            ranges[f] = {lo, hi};
            if (hi > lo)
                varying.push_back(f);
        }
        if (varying.empty())
            return node_index; // all points identical here

        const int feature =
            varying[static_cast<size_t>(rng.below(varying.size()))];
        const auto [lo, hi] = ranges[feature];
        double split = rng.uniform(lo, hi);
        if (split <= lo)
            split = std::nextafter(lo, hi); // keep both children non-empty

        auto mid_iter = std::partition(
            indices.begin() + begin, indices.begin() + end,
            [&](int i) { return points[i][feature] < split; });
        const int mid = static_cast<int>(mid_iter - indices.begin());

        tree.nodes[node_index].feature = feature;
        tree.nodes[node_index].split = split;
        const std::int32_t left = build(begin, mid, depth + 1);
        tree.nodes[node_index].left = left;
        const std::int32_t right = build(mid, end, depth + 1);
        tree.nodes[node_index].right = right;
        return node_index;
    }
};

double path_length(const IsoTree& tree, const std::vector<double>& point) {
    std::int32_t node = 0;
    double depth = 0.0;
    for (;;) {
        const IsoNode& n = tree.nodes[static_cast<size_t>(node)];
        if (n.feature < 0)
            return depth + average_path_length(n.size);
        node = point[static_cast<size_t>(n.feature)] < n.split ? n.left : n.right;
        depth += 1.0;
    }
}

std::vector<double> score_all(const IsolationForestModel& model,
                              const std::vector<std::vector<double>>& features) {
    std::vector<double> scores;
    scores.reserve(features.size());
    for (const std::vector<double>& f : features)
        scores.push_back(isoforest_score(model, f));
    return scores;
}

std::vector<std::vector<double>> weekly_features(const ResampledSeries& weekly,
                                                 bool volume_feature) {
    if (weekly.grain != Grain::weekly)
        throw InputError("anomaly detection runs on the weekly grain");
    if (weekly.points.size() < 8)
        throw InputError("anomaly detection needs at least 8 weeks of data, got " +
                         std::to_string(weekly.points.size()));
    std::vector<std::vector<double>> features;
    features.reserve(weekly.points.size());
    for (const ResampledPoint& p : weekly.points) {
        std::vector<double> f = {static_cast<double>(p.frequency)};
        if (volume_feature)
            f.push_back(p.volume);
        features.push_back(std::move(f));
    }
    return features;
}

double flag_threshold(std::vector<double> scores, double contamination) {
    const size_t m = static_cast<size_t>(
        std::floor(contamination * static_cast<double>(scores.size())));
    if (m == 0)
        return 1.0; // scores are strictly below 1, so nothing flags
    std::nth_element(scores.begin(), scores.begin() + (m - 1), scores.end(),
                     std::greater<>());
    return scores[m - 1];
}

void check_contamination(double contamination) {
    if (!(contamination > 0.0 && contamination <= 0.5))
        throw InputError("contamination must be in (0, 0.5], got " +
                         std::to_string(contamination));
}

} // namespace

double average_path_length(std::int64_t n) {
    if (n <= 1)
        return 0.0;
    if (n == 2)
        return 1.0;
    const double nd = static_cast<double>(n);
    return 2.0 * (std::log(nd - 1.0) + kEulerGamma) - 2.0 * (nd - 1.0) / nd;
}

IsolationForestModel isoforest_fit(const std::vector<std::vector<double>>& points,
                                   int n_trees, int psi, std::uint64_t seed) {
    if (points.size() < 2)
        throw InputError("isolation forest needs at least 2 points");
    if (psi < 2)
        throw InputError("subsample size psi must be at least 2");
    if (n_trees < 1)
        throw InputError("n_trees must be at least 1");
    const int n_features = static_cast<int>(points.front().size());
    if (n_features < 1)
        throw InputError("points need at least 1 feature");
    for (const std::vector<double>& p : points)
        if (static_cast<int>(p.size()) != n_features)
            throw InputError("inconsistent feature dimensions across points");

    bool any_difference = false;
    for (size_t i = 1; i < points.size() && !any_difference; i++)
        any_difference = points[i] != points.front();
    if (!any_difference)
        throw NumericError("all points are identical; isolation splits are impossible");

    IsolationForestModel model;
    model.requested_psi = psi;
    model.psi_clamped = psi > static_cast<int>(points.size());
    model.psi = model.psi_clamped ? static_cast<int>(points.size()) : psi;
    model.n_trees = n_trees;
    model.seed = seed;
    model.n_features = n_features;
    model.height_limit = height_limit_for(model.psi);
    model.c_psi = average_path_length(model.psi);
    model.trees.resize(static_cast<size_t>(n_trees));

    const Rng master(seed);
    for (int t = 0; t < n_trees; t++) {
        Rng tree_rng = master.derive(static_cast<std::uint64_t>(t));

        // psi-point subsample without replacement (partial Fisher-Yates).
        std::vector<int> all(points.size());
        for (size_t i = 0; i < all.size(); i++)
            all[i] = static_cast<int>(i);
        for (int i = 0; i < model.psi; i++) {
            const size_t j = static_cast<size_t>(i) +
                             static_cast<size_t>(tree_rng.below(all.size() - i));
            std::swap(all[static_cast<size_t>(i)], all[j]);
        }
        all.resize(static_cast<size_t>(model.psi));

        TreeBuilder builder{points, model.trees[static_cast<size_t>(t)], tree_rng,
                            model.height_limit, std::move(all)};
        builder.build(0, model.psi, 0);
    }
    return model;
}

double isoforest_score(const IsolationForestModel& model,
                       const std::vector<double>& point) {
    if (static_cast<int>(point.size()) != model.n_features)
        throw InputError("point dimensionality does not match the model");
    double total = 0.0;
    for (const IsoTree& tree : model.trees)
        total += path_length(tree, point);
    const double mean_path = total / static_cast<double>(model.trees.size());
    return std::pow(2.0, -mean_path / model.c_psi);
}

AnomalyReport detect(const ResampledSeries& weekly, double contamination,
                     int n_trees, int psi, std::uint64_t seed, bool volume_feature) {
    check_contamination(contamination);
    const auto features = weekly_features(weekly, volume_feature);
    const IsolationForestModel model = isoforest_fit(features, n_trees, psi, seed);
    const std::vector<double> scores = score_all(model, features);

    AnomalyReport report;
    report.contamination = contamination;
    report.n_trees = n_trees;
    report.psi = model.psi;
    report.seed = seed;
    report.volume_feature = volume_feature;
    report.threshold = flag_threshold(scores, contamination);
    for (size_t i = 0; i < weekly.points.size(); i++)
        report.periods.push_back(AnomalyFlag{weekly.points[i].period_start, scores[i],
                                             scores[i] >= report.threshold});
    return report;
}

ContaminationSweep sweep_contamination(const ResampledSeries& weekly,
                                       const std::vector<double>& values,
                                       int n_trees, int psi, std::uint64_t seed,
                                       bool volume_feature) {
    if (values.empty())
        throw InputError("contamination sweep needs at least one value");
    for (double v : values)
        check_contamination(v);

    const auto features = weekly_features(weekly, volume_feature);
    const IsolationForestModel model = isoforest_fit(features, n_trees, psi, seed);
    const std::vector<double> scores = score_all(model, features);

    ContaminationSweep sweep;
    for (double contamination : values) {
        ContaminationSweep::Entry entry;
        entry.contamination = contamination;
        entry.threshold = flag_threshold(scores, contamination);
        for (size_t i = 0; i < weekly.points.size(); i++)
            if (scores[i] >= entry.threshold)
                entry.flagged.push_back(weekly.points[i].period_start);
        sweep.entries.push_back(std::move(entry));
    }
    return sweep;
}

} // namespace ledsig
