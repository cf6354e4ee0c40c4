#include "pucorrect/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pucorrect/errors.hpp"

namespace pucorrect {

DatasetSummary validate_dataset(std::span<const PuSample> samples) {
    if (samples.empty())
        throw EmptyClassError("dataset is empty");

    DatasetSummary summary;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!std::isfinite(samples[i].score))
            throw NonFiniteScoreError("non-finite score at sample index " + std::to_string(i));
        if (samples[i].pu_label == PuLabel::LabeledPositive)
            ++summary.n_labeled;
        else
            ++summary.n_unlabeled;
    }
    if (summary.n_labeled == 0)
        throw EmptyClassError("dataset has no labeled samples");
    if (summary.n_unlabeled == 0)
        throw EmptyClassError("dataset has no unlabeled samples");

    summary.c = static_cast<double>(summary.n_labeled) /
                static_cast<double>(summary.n_labeled + summary.n_unlabeled);
    return summary;
}

Dataset::Dataset(std::vector<PuSample> samples) : samples_(std::move(samples)) {
    summary_ = validate_dataset(samples_);
    labeled_scores_.reserve(summary_.n_labeled);
    unlabeled_scores_.reserve(summary_.n_unlabeled);
    for (const PuSample& s : samples_) {
        if (s.pu_label == PuLabel::LabeledPositive)
            labeled_scores_.push_back(s.score);
        else
            unlabeled_scores_.push_back(s.score);
    }
    std::sort(labeled_scores_.begin(), labeled_scores_.end());
    std::sort(unlabeled_scores_.begin(), unlabeled_scores_.end());
}

void validate_mixture_params(const MixtureParams& p) {
    if (!std::isfinite(p.alpha) || p.alpha < 0.0 || p.alpha >= 1.0)
        throw InvalidArgumentError("alpha must lie in [0, 1)");
    if (!std::isfinite(p.beta) || p.beta <= p.alpha || p.beta > 1.0)
        throw InvalidArgumentError("beta must lie in (alpha, 1]");
    if (p.c && (!std::isfinite(*p.c) || *p.c <= 0.0 || *p.c >= 1.0))
        throw InvalidArgumentError("labeled fraction c must lie strictly inside (0, 1)");
}

} // namespace pucorrect
