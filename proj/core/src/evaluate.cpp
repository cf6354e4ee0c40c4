#include "pucorrect/evaluate.hpp"

#include <cmath>
#include <numeric>

#include "pucorrect/correction.hpp"
#include "pucorrect/dataset.hpp"
#include "pucorrect/errors.hpp"
#include "pucorrect/metrics.hpp"

namespace pucorrect::evaluate {

ErrorCell run_experiment(const ExperimentSetup& setup) {
    const simulate::ProtocolConfig& protocol = setup.protocol;
    if (protocol.repeats < 1)
        throw InvalidArgumentError("repeats must be at least 1");

    const std::vector<simulate::PoolSample> pool = simulate::generate_labeled_pool(
        setup.mixture, setup.pool_size,
        simulate::derive_stream(protocol.seed, 0));

    ErrorCell cell;
    cell.dataset_id = setup.dataset_id;
    cell.beta_nominal = protocol.beta;
    cell.repeats = protocol.repeats;

    double sum_alpha = 0.0, sum_e = 0.0;
    double sum_auc_true = 0.0, sum_auc_pu = 0.0;
    double sum_pu = 0.0, sum_ir = 0.0, sum_dr = 0.0, sum_ie = 0.0, sum_de = 0.0;
    double sum_pr_true = 0.0, sum_pr_pu = 0.0, sum_pr_pu_err = 0.0;
    double sum_pr_ir = 0.0, sum_pr_ie = 0.0;

    for (std::size_t r = 0; r < protocol.repeats; ++r) {
        simulate::ProtocolConfig round = protocol;
        round.seed = simulate::derive_stream(protocol.seed, r + 1);
        const simulate::CorruptionResult cr =
            simulate::corrupt_to_pu(pool, round, setup.area_mode);

        const Dataset data(cr.samples);
        const std::vector<metrics::RatePair> sweep = metrics::pu_rate_sweep(data);
        const double auc_pu =
            metrics::roc_curve_from_sweep(sweep, setup.area_mode).area;
        const double aucpr_pu =
            metrics::pr_curve_from_sweep(sweep, data.summary().n_labeled,
                                         data.summary().n_unlabeled,
                                         setup.area_mode)
                .area;
        const double auc_true = cr.truth_roc.area;
        const double aucpr_true = cr.truth_pr.area;

        const correction::AucCorrection dr =
            correction::correct_auc_direct(auc_pu, cr.realized);
        const double ir =
            correction::recover_roc_indirect(sweep, cr.realized, setup.area_mode)
                .curve.area;
        const double pr_ir =
            correction::recover_pr_indirect(sweep, cr.realized, setup.area_mode)
                .curve.area;

        sum_alpha += cr.realized.alpha;
        sum_auc_true += auc_true;
        sum_auc_pu += auc_pu;
        if (auc_pu < auc_true)
            ++cell.pu_underestimates;
        sum_pu += std::abs(auc_true - auc_pu);
        sum_dr += std::abs(auc_true - dr.auc);
        sum_ir += std::abs(auc_true - ir);
        if (dr.infeasible)
            ++cell.infeasible_dr;

        sum_pr_true += aucpr_true;
        sum_pr_pu += aucpr_pu;
        sum_pr_pu_err += std::abs(aucpr_true - aucpr_pu);
        sum_pr_ir += std::abs(aucpr_true - pr_ir);

        if (setup.provided) {
            MixtureParams hat{setup.provided->alpha_hat, setup.provided->beta_hat,
                              cr.realized.c};
            sum_e += std::abs(hat.gap() - cr.realized.gap());
            const correction::AucCorrection de =
                correction::correct_auc_direct(auc_pu, hat);
            const double ie =
                correction::recover_roc_indirect(sweep, hat, setup.area_mode)
                    .curve.area;
            const double pr_ie =
                correction::recover_pr_indirect(sweep, hat, setup.area_mode)
                    .curve.area;
            sum_de += std::abs(auc_true - de.auc);
            sum_ie += std::abs(auc_true - ie);
            sum_pr_ie += std::abs(aucpr_true - pr_ie);
            if (de.infeasible)
                ++cell.infeasible_de;
        }
    }

    const double n = static_cast<double>(protocol.repeats);
    cell.alpha = sum_alpha / n;
    cell.e_beta_minus_alpha = sum_e / n;
    cell.auc_true = sum_auc_true / n;
    cell.auc_pu = sum_auc_pu / n;
    cell.mae_pu = sum_pu / n;
    cell.mae_ir = sum_ir / n;
    cell.mae_dr = sum_dr / n;
    cell.aucpr_true = sum_pr_true / n;
    cell.aucpr_pu = sum_pr_pu / n;
    cell.mae_pr_pu = sum_pr_pu_err / n;
    cell.mae_pr_ir = sum_pr_ir / n;
    if (setup.provided) {
        cell.mae_ie = sum_ie / n;
        cell.mae_de = sum_de / n;
        cell.mae_pr_ie = sum_pr_ie / n;
    }
    return cell;
}

GapErrorBin classify_gap_error(double e) {
    if (e < 0.1)
        return GapErrorBin::Small;
    if (e < 0.2)
        return GapErrorBin::Medium;
    return GapErrorBin::Large;
}

std::array<BinnedError, 3> bin_by_gap_error(std::span<const ErrorCell> cells) {
    if (cells.empty())
        throw InvalidArgumentError("no cells to bin");
    std::array<BinnedError, 3> bins{
        BinnedError{GapErrorBin::Small, {}, {}, {}, {}, {}, 0},
        BinnedError{GapErrorBin::Medium, {}, {}, {}, {}, {}, 0},
        BinnedError{GapErrorBin::Large, {}, {}, {}, {}, {}, 0},
    };
    for (const ErrorCell& cell : cells) {
        BinnedError& bin =
            bins[static_cast<std::size_t>(classify_gap_error(cell.e_beta_minus_alpha))];
        ++bin.count;
        bin.pu.push_back(cell.mae_pu);
        bin.ir.push_back(cell.mae_ir);
        bin.dr.push_back(cell.mae_dr);
        if (cell.mae_ie)
            bin.ie.push_back(*cell.mae_ie);
        if (cell.mae_de)
            bin.de.push_back(*cell.mae_de);
    }
    return bins;
}

WinCounts count_direct_vs_indirect(std::span<const ErrorCell> cells, bool estimated) {
    WinCounts counts;
    for (const ErrorCell& cell : cells) {
        double direct_err = cell.mae_dr;
        double indirect_err = cell.mae_ir;
        if (estimated) {
            if (!cell.mae_de || !cell.mae_ie)
                continue;
            direct_err = *cell.mae_de;
            indirect_err = *cell.mae_ie;
        }
        if (direct_err < indirect_err)
            ++counts.direct_wins;
        else if (indirect_err < direct_err)
            ++counts.indirect_wins;
        else
            ++counts.ties;
    }
    return counts;
}

std::size_t split_ties_alternating(const WinCounts& counts) {
    // First tie goes to the direct method, second to the indirect, ...
    return counts.indirect_wins + counts.ties / 2;
}

double binomial_counting_test(std::size_t wins_indirect, std::size_t n) {
    if (n < 1)
        throw InvalidArgumentError("binomial test needs n >= 1");
    if (wins_indirect > n)
        throw InvalidArgumentError("wins cannot exceed the number of experiments");
    if (wins_indirect == 0)
        return 1.0; // the full tail, exactly

    // P = sum_{i=k}^{n} C(n,i) / 2^n in the log domain to stay exact-ish at
    // any n without overflowing the binomial coefficients.
    const double log_half_n = -static_cast<double>(n) * std::log(2.0);
    const double lgamma_n1 = std::lgamma(static_cast<double>(n) + 1.0);
    double tail = 0.0;
    for (std::size_t i = wins_indirect; i <= n; ++i) {
        const double log_term = lgamma_n1 -
                                std::lgamma(static_cast<double>(i) + 1.0) -
                                std::lgamma(static_cast<double>(n - i) + 1.0) +
                                log_half_n;
        tail += std::exp(log_term);
    }
    return std::min(tail, 1.0);
}

} // namespace pucorrect::evaluate
