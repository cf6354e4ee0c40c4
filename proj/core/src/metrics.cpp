#include "pucorrect/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pucorrect/errors.hpp"

namespace pucorrect::metrics {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Fraction of `sorted` (ascending) strictly above t.
double fraction_above(std::span<const double> sorted, double t) {
    const auto above = sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), t);
    return static_cast<double>(above) / static_cast<double>(sorted.size());
}

} // namespace

RatePair pu_rates_at_threshold(const Dataset& data, double t) {
    return RatePair{
        fraction_above(data.labeled_scores(), t),
        fraction_above(data.unlabeled_scores(), t),
        t,
    };
}

std::vector<RatePair> pu_rate_sweep(const Dataset& data) {
    std::vector<double> distinct;
    distinct.reserve(data.labeled_scores().size() + data.unlabeled_scores().size());
    std::merge(data.labeled_scores().begin(), data.labeled_scores().end(),
               data.unlabeled_scores().begin(), data.unlabeled_scores().end(),
               std::back_inserter(distinct));
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    std::vector<RatePair> sweep;
    sweep.reserve(distinct.size() + 1);

    // Walk distinct scores descending; counting is cumulative, so each
    // threshold is O(log n) against the per-class sorted arrays.
    for (auto it = distinct.rbegin(); it != distinct.rend(); ++it)
        sweep.push_back(pu_rates_at_threshold(data, *it));
    sweep.push_back(RatePair{1.0, 1.0, -kInf}); // accept-all endpoint
    return sweep;
}

double step_area(std::span<const OperatingPoint> points, AreaMode mode) {
    double area = 0.0;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        const double dx = points[i + 1].x - points[i].x;
        if (dx < 0.0)
            throw UnsortedCurveError("curve points are not sorted by x");
        if (mode == AreaMode::StrictStep)
            area += dx * points[i].y;
        else
            area += dx * (points[i].y + points[i + 1].y) / 2.0;
    }
    return area;
}

double step_area(const Curve& curve, AreaMode mode) {
    return step_area(std::span<const OperatingPoint>(curve.points), mode);
}

Curve roc_curve_from_sweep(std::span<const RatePair> sweep, AreaMode mode) {
    Curve curve;
    curve.kind = CurveKind::Roc;
    curve.area_mode = mode;
    curve.points.reserve(sweep.size() + 2);
    for (const RatePair& r : sweep)
        curve.points.push_back(OperatingPoint{r.fpr_pu, r.tpr_pu, r.threshold});
    if (curve.points.empty() ||
        curve.points.front().x != 0.0 || curve.points.front().y != 0.0)
        curve.points.insert(curve.points.begin(), OperatingPoint{0.0, 0.0, kInf});
    if (curve.points.back().x != 1.0 || curve.points.back().y != 1.0)
        curve.points.push_back(OperatingPoint{1.0, 1.0, -kInf});
    curve.area = step_area(std::span<const OperatingPoint>(curve.points), mode);
    return curve;
}

Curve pr_curve_from_sweep(std::span<const RatePair> sweep,
                          std::size_t n_labeled, std::size_t n_unlabeled,
                          AreaMode mode) {
    const double nl = static_cast<double>(n_labeled);
    const double nu = static_cast<double>(n_unlabeled);

    Curve curve;
    curve.kind = CurveKind::Pr;
    curve.area_mode = mode;
    curve.points.reserve(sweep.size());
    for (const RatePair& r : sweep) {
        const double denom = nl * r.tpr_pu + nu * r.fpr_pu;
        if (denom == 0.0)
            continue; // precision undefined at reject-all thresholds
        curve.points.push_back(
            OperatingPoint{r.tpr_pu, nl * r.tpr_pu / denom, r.threshold});
    }
    std::stable_sort(curve.points.begin(), curve.points.end(),
                     [](const OperatingPoint& a, const OperatingPoint& b) { return a.x < b.x; });
    curve.area = step_area(std::span<const OperatingPoint>(curve.points), mode);
    return curve;
}

Curve pu_roc(const Dataset& data, AreaMode mode) {
    return roc_curve_from_sweep(pu_rate_sweep(data), mode);
}

Curve pu_pr(const Dataset& data, AreaMode mode) {
    return pr_curve_from_sweep(pu_rate_sweep(data), data.summary().n_labeled,
                               data.summary().n_unlabeled, mode);
}

double pairwise_auc_oracle(std::span<const double> pos_scores,
                           std::span<const double> neg_scores) {
    if (pos_scores.empty() || neg_scores.empty())
        throw EmptyClassError("pairwise oracle needs a non-empty score list per class");
    double wins = 0.0;
    for (double p : pos_scores) {
        for (double n : neg_scores) {
            if (p > n)
                wins += 1.0;
            else if (p == n)
                wins += 0.5;
        }
    }
    return wins / (static_cast<double>(pos_scores.size()) *
                   static_cast<double>(neg_scores.size()));
}

} // namespace pucorrect::metrics
