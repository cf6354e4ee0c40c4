#include "pucorrect/correction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pucorrect/errors.hpp"

namespace pucorrect::correction {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool in_unit_interval(double v) { return v >= 0.0 && v <= 1.0; }

double clamp_unit(double v) { return std::min(1.0, std::max(0.0, v)); }

// Shared tail of both indirect recoveries: sort by x (ties by y), optionally
// monotonize y by a running maximum, anchor (ROC only), integrate.
Curve assemble_curve(std::vector<OperatingPoint> pts, CurveKind kind,
                     AreaMode mode) {
    std::sort(pts.begin(), pts.end(), [](const OperatingPoint& a, const OperatingPoint& b) {
        if (a.x != b.x)
            return a.x < b.x;
        return a.y < b.y;
    });
    if (kind == CurveKind::Roc) {
        double running_max = -kInf;
        for (OperatingPoint& p : pts) {
            running_max = std::max(running_max, p.y);
            p.y = running_max;
        }
        if (pts.front().x != 0.0 || pts.front().y != 0.0)
            pts.insert(pts.begin(), OperatingPoint{0.0, 0.0, kInf});
        if (pts.back().x != 1.0 || pts.back().y != 1.0)
            pts.push_back(OperatingPoint{1.0, 1.0, -kInf});
    }
    Curve curve;
    curve.kind = kind;
    curve.area_mode = mode;
    curve.points = std::move(pts);
    curve.area = metrics::step_area(std::span<const OperatingPoint>(curve.points), mode);
    return curve;
}

} // namespace

void validate_params(const MixtureParams& p) {
    validate_mixture_params(p);
    if (p.gap() < kMinSeparation)
        throw DegenerateSeparationError("beta - alpha is below the minimum separation");
}

RecoveredRates recover_rates(const metrics::RatePair& rates, const MixtureParams& p) {
    validate_params(p);
    const double gap = p.gap();
    const double tpr =
        ((1.0 - p.alpha) * rates.tpr_pu - (1.0 - p.beta) * rates.fpr_pu) / gap;
    const double fpr = (p.beta * rates.fpr_pu - p.alpha * rates.tpr_pu) / gap;
    return RecoveredRates{tpr, fpr, rates.threshold,
                          in_unit_interval(tpr) && in_unit_interval(fpr)};
}

ClampedValue recover_precision_direct(double tpr, double fpr_pu, double alpha) {
    if (fpr_pu == 0.0)
        throw UndefinedPrecisionError("precision undefined: eta^pu is zero");
    const double raw = alpha * tpr / fpr_pu;
    const double value = clamp_unit(raw);
    return ClampedValue{value, raw, value != raw};
}

double recover_precision_from_pu(double rho_pu, const MixtureParams& p) {
    validate_params(p);
    if (!p.c)
        throw MissingLabeledFractionError("conversion from rho^pu requires the labeled fraction c");
    if (rho_pu >= 1.0)
        throw UndefinedPrecisionError("precision undefined: rho^pu odds diverge at 1");
    const double c = *p.c;
    const double odds = rho_pu / (1.0 - rho_pu);
    return p.alpha * (1.0 - p.alpha) / p.gap() *
           ((1.0 - c) / c * odds - (1.0 - p.beta) / (1.0 - p.alpha));
}

AucCorrection correct_auc_direct(double auc_pu, const MixtureParams& p) {
    validate_params(p);
    if (!(auc_pu >= 0.0 && auc_pu <= 1.0))
        throw InvalidArgumentError("auc_pu must lie in [0, 1]");
    const double gap = p.gap();
    const double raw = (auc_pu - (1.0 - gap) / 2.0) / gap;
    const bool outside = !in_unit_interval(raw);
    return AucCorrection{clamp_unit(raw), raw, outside, outside};
}

AucOrdering auc_ordering_check(double auc_pu, const MixtureParams& p) {
    validate_params(p);
    const double diff = (1.0 - p.gap()) / p.gap() * (auc_pu - 0.5);
    if (diff > 0.0)
        return AucOrdering::CorrectedGreater;
    if (diff < 0.0)
        return AucOrdering::CorrectedSmaller;
    return AucOrdering::Equal;
}

RecoveredCurve recover_roc_indirect(std::span<const metrics::RatePair> sweep,
                                    const MixtureParams& p, AreaMode mode) {
    validate_params(p);
    RecoveredCurve result;
    result.points_in = sweep.size();

    std::vector<OperatingPoint> pts;
    pts.reserve(sweep.size());
    for (const metrics::RatePair& r : sweep) {
        const RecoveredRates rec = recover_rates(r, p);
        if (!rec.in_range) {
            ++result.points_dropped;
            continue;
        }
        pts.push_back(OperatingPoint{rec.fpr, rec.tpr, rec.threshold});
    }
    if (pts.empty())
        throw EmptyRecoveredCurveError(
            "every recovered ROC point fell outside [0,1]; (alpha, beta) are "
            "inconsistent with the data");
    result.curve = assemble_curve(std::move(pts), CurveKind::Roc, mode);
    return result;
}

RecoveredCurve recover_pr_indirect(std::span<const metrics::RatePair> sweep,
                                   const MixtureParams& p, AreaMode mode) {
    validate_params(p);
    RecoveredCurve result;
    result.points_in = sweep.size();

    std::vector<OperatingPoint> pts;
    pts.reserve(sweep.size());
    for (const metrics::RatePair& r : sweep) {
        if (r.fpr_pu == 0.0) {
            ++result.points_dropped;
            continue;
        }
        const RecoveredRates rec = recover_rates(r, p);
        if (!in_unit_interval(rec.tpr)) {
            ++result.points_dropped;
            continue;
        }
        const ClampedValue prec = recover_precision_direct(rec.tpr, r.fpr_pu, p.alpha);
        if (prec.clamped)
            ++result.points_clamped;
        pts.push_back(OperatingPoint{rec.tpr, prec.value, r.threshold});
    }
    if (pts.empty())
        throw EmptyRecoveredCurveError(
            "every recovered PR point was undefined or out of range");
    result.curve = assemble_curve(std::move(pts), CurveKind::Pr, mode);
    return result;
}

SweepGrid feasibility_sweep(double auc_true, const MixtureParams& p_true,
                            std::size_t grid_resolution) {
    validate_params(p_true);
    if (!(auc_true >= 0.0 && auc_true <= 1.0))
        throw InvalidArgumentError("auc_true must lie in [0, 1]");
    if (grid_resolution < 2)
        throw InvalidArgumentError("grid_resolution must be at least 2");

    SweepGrid grid;
    grid.resolution = grid_resolution;
    grid.auc_true = auc_true;
    grid.true_params = p_true;
    // Forward identity: AUC^pu = (1 - gap)/2 + gap * AUC.
    grid.auc_pu = (1.0 - p_true.gap()) / 2.0 + p_true.gap() * auc_true;
    grid.cells.resize(grid_resolution * grid_resolution);

    const double step = 1.0 / static_cast<double>(grid_resolution - 1);
    for (std::size_t j = 0; j < grid_resolution; ++j) {
        const double beta_hat = static_cast<double>(j) * step;
        for (std::size_t i = 0; i < grid_resolution; ++i) {
            const double alpha_hat = static_cast<double>(i) * step;
            SweepCell& cell = grid.cells[j * grid_resolution + i];
            cell.alpha_hat = alpha_hat;
            cell.beta_hat = beta_hat;
            if (beta_hat - alpha_hat < kMinSeparation || alpha_hat >= 1.0)
                continue; // lower-right triangle: marked invalid, not evaluated
            const AucCorrection est =
                correct_auc_direct(grid.auc_pu, MixtureParams{alpha_hat, beta_hat, {}});
            cell.valid = true;
            cell.auc_est = est.auc;
            cell.abs_error = std::abs(auc_true - est.auc);
            cell.infeasible = est.infeasible;
        }
    }
    return grid;
}

} // namespace pucorrect::correction
