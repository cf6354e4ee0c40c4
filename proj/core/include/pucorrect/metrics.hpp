#pragma once

#include <functional>
#include <span>
#include <vector>

#include "pucorrect/dataset.hpp"
#include "pucorrect/types.hpp"

namespace pucorrect::metrics {

/// Empirical PU rates of the threshold classifier 1[score > t]:
/// tpr_pu is the fraction of labeled samples above t (gamma^pu) and
/// fpr_pu the fraction of unlabeled samples above t (eta^pu).
struct RatePair {
    double tpr_pu = 0.0;
    double fpr_pu = 0.0;
    double threshold = 0.0;
};

/// A deterministic map from input to score. The library only requires that
/// the same input always yields the same score; ranking is all that matters.
using Scorer = std::function<double(double)>;

/// Rates of the classifier 1[score > t] on a validated dataset.
RatePair pu_rates_at_threshold(const Dataset& data, double t);

/// The full threshold sweep backing both curve constructions: one RatePair
/// per distinct observed score (descending), then the accept-all classifier
/// at threshold -infinity, which contributes the (1,1) endpoint. The first
/// entry is always (0,0) because nothing exceeds the maximum score.
std::vector<RatePair> pu_rate_sweep(const Dataset& data);

/// Step integral of points sorted by x.
/// Throws UnsortedCurveError if x ever decreases.
double step_area(std::span<const OperatingPoint> points, AreaMode mode);
double step_area(const Curve& curve, AreaMode mode);

/// Positive-unlabeled ROC curve: x = fpr_pu, y = tpr_pu across the sweep,
/// anchored at (0,0) and (1,1).
Curve pu_roc(const Dataset& data, AreaMode mode = AreaMode::RankEquivalent);

/// Positive-unlabeled PR curve: x = tpr_pu (recall), y = rho_pu where
///   rho_pu = |X1| gamma^pu / (|X1| gamma^pu + |X| eta^pu).
/// Points with a zero denominator are dropped; the rest are recall-sorted.
Curve pu_pr(const Dataset& data, AreaMode mode = AreaMode::RankEquivalent);

/// Exhaustive O(n*m) pair count: P(pos > neg) + 0.5 * P(pos == neg).
/// This is the brute-force oracle used to validate curve-based AUCs; it
/// deliberately shares no code with the curve construction.
/// Throws EmptyClassError if either list is empty.
double pairwise_auc_oracle(std::span<const double> pos_scores,
                           std::span<const double> neg_scores);

/// Curve constructions factored out so callers holding a sweep (for
/// example the indirect correction path) do not recompute it.
Curve roc_curve_from_sweep(std::span<const RatePair> sweep, AreaMode mode);
Curve pr_curve_from_sweep(std::span<const RatePair> sweep,
                          std::size_t n_labeled, std::size_t n_unlabeled,
                          AreaMode mode);

} // namespace pucorrect::metrics
