#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pucorrect/correction.hpp"
#include "pucorrect/evaluate.hpp"
#include "pucorrect/simulate.hpp"
#include "pucorrect/types.hpp"

namespace pucorrect::io {

/// Shortest representation that parses back to the same double
/// (std::to_chars); keeps emitted files byte-stable across runs.
std::string format_double(double value);

// --- dataset files -----------------------------------------------------
//
// Header `score,label[,truth]`, label in {P, U}, truth in {0, 1} and
// optional per row. UTF-8, '.' decimal point, no thousands separators.

/// Throws ParseError with a 1-based line number on any malformed content,
/// including non-finite scores.
std::vector<PuSample> read_dataset_csv(std::istream& in);
std::vector<PuSample> read_dataset_csv(const std::filesystem::path& path);

void write_dataset_csv(std::ostream& out, std::span<const PuSample> samples,
                       bool include_truth);

// --- curve files --------------------------------------------------------

/// Header `threshold,x,y`; one row per operating point, anchors included.
void write_curve_csv(std::ostream& out, const Curve& curve);

// --- sweep files --------------------------------------------------------

/// Header `alpha_hat,beta_hat,auc_est,abs_error,infeasible`; one row per
/// valid cell (cells with beta_hat <= alpha_hat are omitted).
void write_sweep_csv(std::ostream& out, const correction::SweepGrid& grid);

// --- correction report ---------------------------------------------------

struct DirectSummary {
    double auc = 0.0;
    double raw = 0.0;
    bool clipped = false;
    bool infeasible = false;
    bool operator==(const DirectSummary&) const = default;
};

struct IndirectSummary {
    double auc = 0.0;
    std::size_t points_in = 0;
    std::size_t points_dropped = 0;
    bool operator==(const IndirectSummary&) const = default;
};

struct PrIndirectSummary {
    double aucpr = 0.0;
    std::size_t points_in = 0;
    std::size_t points_dropped = 0;
    std::size_t points_clamped = 0;
    bool operator==(const PrIndirectSummary&) const = default;
};

/// Everything cmd-correct reports for one input file.
struct RunReport {
    double alpha = 0.0;
    double beta = 1.0;
    std::string area_mode = "rank";
    std::size_t n_labeled = 0;
    std::size_t n_unlabeled = 0;
    double c = 0.0;
    double auc_pu = 0.0;
    double aucpr_pu = 0.0;
    std::optional<DirectSummary> direct;
    std::optional<IndirectSummary> indirect;
    std::optional<PrIndirectSummary> pr_indirect;
    bool operator==(const RunReport&) const = default;
};

/// JSON serialization round-trips exactly: report_from_json(to_json(r)) == r.
std::string to_json(const RunReport& report);
RunReport report_from_json(const std::string& text);

/// Flat two-column key,value rendering for --format csv.
void write_report_csv(std::ostream& out, const RunReport& report);

// --- simulation manifest --------------------------------------------------

struct SimulationManifest {
    std::uint64_t seed = 0;
    std::size_t pool_size = 0;
    simulate::MixtureSpec spec;
    double beta_nominal = 1.0;
    std::size_t n_labeled = 0;
    std::size_t n_unlabeled = 0;
    double alpha_realized = 0.0;
    double beta_realized = 1.0;
    double c = 0.0;
    double truth_auc = 0.0;
    double truth_aucpr = 0.0;
    std::string area_mode = "rank";

    bool operator==(const SimulationManifest&) const = default;
};

std::string to_json(const SimulationManifest& manifest);
SimulationManifest manifest_from_json(const std::string& text);

// --- evaluation tables ------------------------------------------------------

/// AUC table: dataset,alpha,beta,e,auc_true,auc_pu,mae_pu,mae_ir,mae_dr,mae_ie,mae_de
void write_auc_table_csv(std::ostream& out, std::span<const evaluate::ErrorCell> cells);

/// AUC-PR table: dataset,alpha,beta,e,aucpr_true,aucpr_pu,mae_pu,mae_ir,mae_ie
void write_pr_table_csv(std::ostream& out, std::span<const evaluate::ErrorCell> cells);

/// Long form: bin,method,count,mean_abs_error,min,max
void write_binned_csv(std::ostream& out,
                      std::span<const evaluate::BinnedError> bins);

struct BinomialTestResult {
    std::string comparison; // "dr_vs_ir" or "de_vs_ie"
    evaluate::WinCounts counts;
    std::size_t k = 0;
    std::size_t n = 0;
    double p_value = 1.0;
};

std::string to_json(std::span<const BinomialTestResult> results);

} // namespace pucorrect::io
