#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pucorrect/errors.hpp"

namespace pucli {

/// Raised when --strict turns an infeasible correction into a hard failure;
/// mapped to exit code 3.
class InfeasibleFailure : public pucorrect::Error {
public:
    using pucorrect::Error::Error;
};

// Exit codes, stable for scripting:
//   0 success, 2 validation error, 3 infeasible correction under --strict,
//   1 any other failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitInfeasible = 3;

struct CorrectOptions {
    std::string input_path;
    double alpha = 0.0;
    double beta = 1.0;
    std::string method = "both"; // direct | indirect | both
    std::string area_mode = "rank";
    std::string out_dir = ".";
    std::string format = "json"; // report format: json | csv
    bool strict = false;
};

struct SimulateOptions {
    double pos_mean = 2.0;
    double pos_stddev = 1.0;
    double neg_mean = 0.0;
    double neg_stddev = 1.0;
    double alpha_target = 0.364;
    std::uint64_t pool = 11000;
    std::uint64_t n_labeled = 1000;
    double beta = 1.0;
    std::uint64_t cap = 10000;
    std::uint64_t seed = 0;
    std::string area_mode = "rank";
    std::string out_dir = ".";
};

struct SweepOptions {
    double alpha = 0.25;
    double beta = 0.75;
    double auc_true = 0.9;
    std::uint64_t grid_resolution = 200;
    bool preset_paper_sweep = false;
    std::string out_dir = ".";
};

struct EvaluateOptions {
    double pos_mean = 2.0;
    double pos_stddev = 1.0;
    double neg_mean = 0.0;
    double neg_stddev = 1.0;
    double alpha_target = 0.364;
    std::uint64_t pool = 11000;
    std::uint64_t n_labeled = 1000;
    std::vector<double> beta_grid = {1.0, 0.95, 0.75};
    std::uint64_t cap = 10000;
    std::uint64_t repeats = 50;
    std::uint64_t seed = 0;
    std::optional<double> alpha_hat;
    std::optional<double> beta_hat;
    std::string dataset_id = "synthetic";
    std::string area_mode = "rank";
    std::string out_dir = ".";
};

int run_correct(const CorrectOptions& opt);
int run_simulate(const SimulateOptions& opt);
int run_sweep(const SweepOptions& opt);
int run_evaluate(const EvaluateOptions& opt);

} // namespace pucli
