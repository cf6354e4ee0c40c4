#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pucorrect/metrics.hpp"
#include "pucorrect/types.hpp"

namespace pucorrect::correction {

/// Minimum allowed beta - alpha. Every conversion divides by beta - alpha,
/// so smaller separations are rejected as DegenerateSeparationError.
inline constexpr double kMinSeparation = 1e-6;

/// Throws DegenerateSeparationError if beta - alpha < kMinSeparation,
/// InvalidArgumentError if alpha/beta/c are outside their ranges.
void validate_params(const MixtureParams& p);

/// Rates mapped back to the traditional setting. Values may land outside
/// [0,1] on noisy input; in_range records whether both are inside. No
/// clamping happens here -- curve recovery filters, it does not clip.
struct RecoveredRates {
    double tpr = 0.0;
    double fpr = 0.0;
    double threshold = 0.0;
    bool in_range = true;
};

/// Inverts the mixing identities
///   gamma^pu = beta  * gamma + (1 - beta)  * eta
///   eta^pu   = alpha * gamma + (1 - alpha) * eta
/// giving gamma = ((1-alpha) gamma^pu - (1-beta) eta^pu) / (beta - alpha)
/// and    eta   = (beta eta^pu - alpha gamma^pu) / (beta - alpha).
RecoveredRates recover_rates(const metrics::RatePair& rates, const MixtureParams& p);

/// A value clamped to [0,1], with the pre-clamp value kept for diagnostics.
struct ClampedValue {
    double value = 0.0;
    double raw = 0.0;
    bool clamped = false;
};

/// Precision recovered directly: rho = alpha * gamma / eta^pu, where gamma is
/// the recovered true positive rate and eta^pu the PU false positive rate.
/// Sampling noise can push the ratio above 1, hence the clamp.
/// Throws UndefinedPrecisionError when fpr_pu == 0.
ClampedValue recover_precision_direct(double tpr, double fpr_pu, double alpha);

/// Precision converted from the PU precision rho_pu (requires the labeled
/// fraction c). Agrees with recover_precision_direct (pre-clamp) whenever
/// both are computed from the same empirical gamma^pu, eta^pu and c.
/// Throws UndefinedPrecisionError when rho_pu == 1, MissingLabeledFractionError
/// when p.c is absent.
double recover_precision_from_pu(double rho_pu, const MixtureParams& p);

/// Result of the one-step AUC conversion
///   AUC = (AUC^pu - (1 - (beta - alpha)) / 2) / (beta - alpha).
/// raw is the unclipped value; auc is raw clipped to [0,1]. infeasible (and
/// equally clipped) flag that raw fell outside [0,1], which signals that the
/// supplied (alpha, beta) are inconsistent with the data.
struct AucCorrection {
    double auc = 0.0;
    double raw = 0.0;
    bool clipped = false;
    bool infeasible = false;
};

/// Throws DegenerateSeparationError / InvalidArgumentError (auc_pu outside [0,1]).
AucCorrection correct_auc_direct(double auc_pu, const MixtureParams& p);

enum class AucOrdering { CorrectedGreater, Equal, CorrectedSmaller };

/// Classifies the corrected-vs-uncorrected ordering from the closed form
///   AUC - AUC^pu = ((1 - (beta-alpha)) / (beta-alpha)) * (AUC^pu - 1/2),
/// so the equality cases (AUC^pu == 1/2, or beta - alpha == 1) are exact.
AucOrdering auc_ordering_check(double auc_pu, const MixtureParams& p);

/// A recovered curve plus filtering diagnostics.
struct RecoveredCurve {
    Curve curve;
    std::size_t points_in = 0;      ///< sweep points supplied
    std::size_t points_dropped = 0; ///< removed by the [0,1] range filter
    std::size_t points_clamped = 0; ///< PR only: precisions clamped into [0,1]
};

/// Indirect ROC recovery:
///   1. map every RatePair through recover_rates;
///   2. remove points with tpr or fpr outside [0,1];
///   3. sort by fpr ascending (ties broken by ascending tpr);
///   4. monotonize tpr by a left-to-right running maximum;
///   5. anchor at (0,0) and (1,1) and integrate with `mode`.
/// Throws EmptyRecoveredCurveError if step 2 removes everything.
RecoveredCurve recover_roc_indirect(std::span<const metrics::RatePair> sweep,
                                    const MixtureParams& p,
                                    AreaMode mode = AreaMode::RankEquivalent);

/// Indirect PR recovery: recall = recovered gamma, precision = clamp of
/// alpha * gamma / eta^pu. Points with eta^pu == 0 or recall outside [0,1]
/// are dropped; the rest are recall-sorted. No monotonization: precision is
/// not monotone in recall, so none is imposed.
/// Throws EmptyRecoveredCurveError if nothing survives.
RecoveredCurve recover_pr_indirect(std::span<const metrics::RatePair> sweep,
                                   const MixtureParams& p,
                                   AreaMode mode = AreaMode::RankEquivalent);

/// One cell of the (alpha_hat, beta_hat) error heatmap. Cells with
/// beta_hat - alpha_hat < kMinSeparation are marked invalid and carry no
/// estimate.
struct SweepCell {
    double alpha_hat = 0.0;
    double beta_hat = 0.0;
    double auc_est = 0.0;   ///< clipped estimate
    double abs_error = 0.0; ///< |auc_true - auc_est|
    bool infeasible = false;
    bool valid = false;
};

/// The full heatmap grid, row-major with alpha_hat varying fastest:
/// cell(i, j) = cells[j * resolution + i] has alpha_hat = i / (resolution-1),
/// beta_hat = j / (resolution-1).
struct SweepGrid {
    std::size_t resolution = 0;
    double auc_true = 0.0;
    double auc_pu = 0.0; ///< forward conversion of auc_true under true params
    MixtureParams true_params;
    std::vector<SweepCell> cells;

    const SweepCell& cell(std::size_t alpha_index, std::size_t beta_index) const {
        return cells[beta_index * resolution + alpha_index];
    }
};

/// Computes AUC^pu from the true (alpha, beta, AUC) by the forward identity
/// AUC^pu = (1 - (beta-alpha))/2 + (beta-alpha) * AUC, then re-estimates the
/// AUC at every grid point of the unit square and records |AUC - AUC^est|
/// and infeasibility. Cell results are independent of evaluation order.
/// Throws on invalid true params or grid_resolution < 2.
SweepGrid feasibility_sweep(double auc_true, const MixtureParams& p_true,
                            std::size_t grid_resolution);

} // namespace pucorrect::correction
