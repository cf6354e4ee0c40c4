#pragma once

#include <span>
#include <vector>

#include "pucorrect/types.hpp"

namespace pucorrect {

/// A validated PU dataset. Construction checks that every score is finite
/// and that both classes (labeled, unlabeled) are non-empty, then caches
/// sorted per-class score arrays so rate queries are O(log n).
///
/// Immutable after construction; safe to share across threads.
class Dataset {
public:
    /// Throws EmptyClassError or NonFiniteScoreError.
    explicit Dataset(std::vector<PuSample> samples);

    const std::vector<PuSample>& samples() const { return samples_; }
    const DatasetSummary& summary() const { return summary_; }

    /// Per-class scores, sorted ascending.
    std::span<const double> labeled_scores() const { return labeled_scores_; }
    std::span<const double> unlabeled_scores() const { return unlabeled_scores_; }

private:
    std::vector<PuSample> samples_;
    std::vector<double> labeled_scores_;
    std::vector<double> unlabeled_scores_;
    DatasetSummary summary_;
};

/// Validation without retaining the samples: returns the counts and the
/// labeled fraction c. Order-independent and idempotent.
/// Throws EmptyClassError or NonFiniteScoreError.
DatasetSummary validate_dataset(std::span<const PuSample> samples);

} // namespace pucorrect
