#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pucorrect/simulate.hpp"
#include "pucorrect/types.hpp"

namespace pucorrect::evaluate {

/// Externally supplied (alpha_hat, beta_hat), standing in for the output of
/// any prior-estimation tool. Their presence switches a run into E-mode.
struct ProvidedParams {
    double alpha_hat = 0.0;
    double beta_hat = 1.0;
};

/// One (dataset, beta) cell of the error tables: mean absolute differences
/// between the per-repeat ground-truth area and each estimator.
/// AUC-PR columns exist for PU/IR/IE only -- there is no direct PR conversion.
struct ErrorCell {
    std::string dataset_id;
    double alpha = 0.0;         ///< mean realized alpha over repeats
    double beta_nominal = 1.0;
    double e_beta_minus_alpha = 0.0; ///< mean |(bhat-ahat) - realized (b-a)|
    std::size_t repeats = 0;

    double auc_true = 0.0; ///< mean over repeats
    double auc_pu = 0.0;
    std::size_t pu_underestimates = 0; ///< repeats with auc_pu < auc_true
    double mae_pu = 0.0;
    double mae_ir = 0.0;
    double mae_dr = 0.0;
    std::optional<double> mae_ie; ///< E-mode only
    std::optional<double> mae_de;

    double aucpr_true = 0.0;
    double aucpr_pu = 0.0;
    double mae_pr_pu = 0.0;
    double mae_pr_ir = 0.0;
    std::optional<double> mae_pr_ie;

    std::size_t infeasible_dr = 0; ///< repeats whose direct correction clipped
    std::size_t infeasible_de = 0;
};

/// Full setup of one experiment cell. `provided` switches on E-mode
/// (IE/DE columns) in addition to the always-computed R-mode columns,
/// which use the realized per-repeat (alpha, beta).
struct ExperimentSetup {
    std::string dataset_id = "synthetic";
    simulate::MixtureSpec mixture;
    std::size_t pool_size = 11000;
    simulate::ProtocolConfig protocol;
    std::optional<ProvidedParams> provided;
    AreaMode area_mode = AreaMode::RankEquivalent;
};

/// Runs `protocol.repeats` corruption rounds over one generated pool and
/// averages |area_true - area_method| per method. Infeasible direct
/// corrections are clipped and counted, never dropped. Bit-reproducible for
/// a fixed seed: repeats are accumulated in index order.
ErrorCell run_experiment(const ExperimentSetup& setup);

enum class GapErrorBin { Small, Medium, Large };

/// Left-closed bins over the beta - alpha estimation error:
/// Small [0, 0.1), Medium [0.1, 0.2), Large [0.2, inf).
GapErrorBin classify_gap_error(double e);

/// Per-bin distributions of cell MAEs, one vector entry per cell in the bin.
struct BinnedError {
    GapErrorBin bin = GapErrorBin::Small;
    std::vector<double> pu, ir, dr, ie, de;
    std::size_t count = 0;
};

/// Partitions cells by e_beta_minus_alpha into the three bins.
/// Throws InvalidArgumentError on empty input.
std::array<BinnedError, 3> bin_by_gap_error(std::span<const ErrorCell> cells);

/// Win/loss/tie counts of the indirect method against the direct method.
struct WinCounts {
    std::size_t direct_wins = 0;
    std::size_t indirect_wins = 0;
    std::size_t ties = 0;
};

/// Compares mae_dr vs mae_ir (or mae_de vs mae_ie) across cells.
WinCounts count_direct_vs_indirect(std::span<const ErrorCell> cells, bool estimated);

/// Distributes ties alternately, first tie to the direct method, second to
/// the indirect, and so on; returns the indirect win count k for the test.
std::size_t split_ties_alternating(const WinCounts& counts);

/// One-sided binomial tail P(X >= k) for X ~ Binomial(n, 1/2), the null of
/// the direct-vs-indirect counting test. Accumulated in the log domain;
/// k == 0 returns exactly 1. Throws InvalidArgumentError for k > n or n < 1.
double binomial_counting_test(std::size_t wins_indirect, std::size_t n);

} // namespace pucorrect::evaluate
