#pragma once

#include <optional>
#include <vector>

namespace pucorrect {

enum class PuLabel { LabeledPositive, Unlabeled };

enum class TruthLabel { Negative = 0, Positive = 1 };

/// One scored example. `truth` is only populated by the simulation harness;
/// correction code never reads it. Under label noise a LabeledPositive may
/// carry truth == Negative.
struct PuSample {
    double score = 0.0;
    PuLabel pu_label = PuLabel::Unlabeled;
    std::optional<TruthLabel> truth;
};

/// The knobs of every correction formula:
///   alpha - proportion of positives in the unlabeled distribution, [0, 1)
///   beta  - proportion of true positives in the labeled distribution, (alpha, 1]
///   c     - labeled fraction |X1| / (|X| + |X1|), strictly inside (0, 1)
///
/// Plain aggregate; range checks live in validate_mixture_params() and the
/// minimum beta - alpha separation is enforced by the correction module.
struct MixtureParams {
    double alpha = 0.0;
    double beta = 1.0;
    std::optional<double> c;

    double gap() const { return beta - alpha; }
};

/// One point of an ROC or PR curve. For ROC x is the false positive rate and
/// y the true positive rate; for PR x is recall and y precision. `threshold`
/// is the decision threshold that produced the point (+/-infinity for the
/// synthetic reject-all / accept-all endpoints).
struct OperatingPoint {
    double x = 0.0;
    double y = 0.0;
    double threshold = 0.0;
};

enum class CurveKind { Roc, Pr };

/// Step-area convention. StrictStep sums (x_{i+1} - x_i) * y_i, the
/// "area of shaded boxes" convention; RankEquivalent is the trapezoidal sum,
/// which for an ROC curve equals the Mann-Whitney statistic with ties
/// counted 1/2. RankEquivalent is the default everywhere.
enum class AreaMode { StrictStep, RankEquivalent };

/// An ROC or PR curve as an explicit step function, with its area under the
/// mode it was computed with. ROC curves are anchored at (0,0) and (1,1) and
/// are non-decreasing in both coordinates; PR curves are recall-sorted.
struct Curve {
    CurveKind kind = CurveKind::Roc;
    std::vector<OperatingPoint> points;
    double area = 0.0;
    AreaMode area_mode = AreaMode::RankEquivalent;
};

enum class CorrectionMethod { Direct, Indirect };

/// Uncorrected and corrected summary values for one dataset + (alpha, beta).
/// clipped is true iff the pre-clip corrected AUC fell outside [0,1];
/// infeasible implies clipped. The stored auc_corrected is always in [0,1].
struct CorrectionReport {
    double auc_pu = 0.0;
    double auc_corrected = 0.0;
    std::optional<double> aucpr_pu;
    std::optional<double> aucpr_corrected;
    CorrectionMethod method = CorrectionMethod::Direct;
    bool clipped = false;
    bool infeasible = false;
    MixtureParams params;
};

/// Counts produced by dataset validation. c = n_labeled / (n_labeled + n_unlabeled).
struct DatasetSummary {
    std::size_t n_labeled = 0;
    std::size_t n_unlabeled = 0;
    double c = 0.0;

    bool operator==(const DatasetSummary&) const = default;
};

/// Range-checks alpha, beta and (when present) c.
/// Throws InvalidArgumentError on violation. The stricter minimum
/// beta - alpha separation is owned by the correction module.
void validate_mixture_params(const MixtureParams& p);

} // namespace pucorrect
