#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pucorrect/errors.hpp"

#include "commands.hpp"
#include "log.hpp"

namespace {

void print_machine_error(const std::string& type, const std::string& message) {
    // Machine-readable failure channel for pipelines.
    std::string escaped;
    escaped.reserve(message.size());
    for (char c : message) {
        if (c == '"' || c == '\\')
            escaped += '\\';
        escaped += c;
    }
    std::cerr << "{\"error\":{\"type\":\"" << type << "\",\"message\":\"" << escaped
              << "\"}}\n";
}

template <typename Fn>
int run_guarded(Fn&& fn) {
    using namespace pucorrect;
    try {
        return fn();
    } catch (const pucli::InfeasibleFailure& e) {
        print_machine_error("Infeasible", e.what());
        return pucli::kExitInfeasible;
    } catch (const ParseError& e) {
        print_machine_error("ParseError", e.what());
        return pucli::kExitValidation;
    } catch (const EmptyClassError& e) {
        print_machine_error("EmptyClass", e.what());
        return pucli::kExitValidation;
    } catch (const NonFiniteScoreError& e) {
        print_machine_error("NonFiniteScore", e.what());
        return pucli::kExitValidation;
    } catch (const DegenerateSeparationError& e) {
        print_machine_error("DegenerateSeparation", e.what());
        return pucli::kExitValidation;
    } catch (const MissingLabeledFractionError& e) {
        print_machine_error("MissingLabeledFraction", e.what());
        return pucli::kExitValidation;
    } catch (const UndefinedPrecisionError& e) {
        print_machine_error("UndefinedPrecision", e.what());
        return pucli::kExitValidation;
    } catch (const InsufficientPoolError& e) {
        print_machine_error("InsufficientPool", e.what());
        return pucli::kExitValidation;
    } catch (const InvalidArgumentError& e) {
        print_machine_error("InvalidArgument", e.what());
        return pucli::kExitValidation;
    } catch (const EmptyRecoveredCurveError& e) {
        print_machine_error("EmptyRecoveredCurve", e.what());
        return pucli::kExitFailure;
    } catch (const Error& e) {
        print_machine_error("Error", e.what());
        return pucli::kExitFailure;
    } catch (const std::exception& e) {
        print_machine_error("Internal", e.what());
        return pucli::kExitFailure;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Positive-unlabeled performance correction toolkit"};
    app.require_subcommand(1);

    pucli::CorrectOptions correct;
    CLI::App* cmd_correct =
        app.add_subcommand("correct", "Correct PU curves and areas for one score file");
    cmd_correct->add_option("--input", correct.input_path, "CSV with header score,label[,truth]")
        ->required();
    cmd_correct->add_option("--alpha", correct.alpha, "positive class prior of the unlabeled data")
        ->required();
    cmd_correct->add_option("--beta", correct.beta, "positive fraction of the labeled data")
        ->required();
    cmd_correct->add_option("--method", correct.method, "direct | indirect | both");
    cmd_correct->add_option("--area-mode", correct.area_mode, "rank | strict-step");
    cmd_correct->add_option("--out", correct.out_dir, "output directory");
    cmd_correct->add_option("--format", correct.format, "report format: json | csv");
    cmd_correct->add_flag("--strict", correct.strict,
                          "fail (exit 3) on infeasible corrections instead of clipping");

    pucli::SimulateOptions simulate;
    CLI::App* cmd_simulate =
        app.add_subcommand("simulate", "Generate a synthetic PU dataset with ground truth");
    cmd_simulate->add_option("--pos-mean", simulate.pos_mean, "positive component mean");
    cmd_simulate->add_option("--pos-stddev", simulate.pos_stddev, "positive component stddev");
    cmd_simulate->add_option("--neg-mean", simulate.neg_mean, "negative component mean");
    cmd_simulate->add_option("--neg-stddev", simulate.neg_stddev, "negative component stddev");
    cmd_simulate->add_option("--alpha-target", simulate.alpha_target,
                             "positive fraction when drawing the pool");
    cmd_simulate->add_option("--pool", simulate.pool, "pool size before corruption");
    cmd_simulate->add_option("--n-labeled", simulate.n_labeled, "labeled set size");
    cmd_simulate->add_option("--beta", simulate.beta, "nominal labeled purity");
    cmd_simulate->add_option("--cap", simulate.cap, "unlabeled size cap");
    cmd_simulate->add_option("--seed", simulate.seed, "root RNG seed");
    cmd_simulate->add_option("--area-mode", simulate.area_mode, "rank | strict-step");
    cmd_simulate->add_option("--out", simulate.out_dir, "output directory");

    pucli::SweepOptions sweep;
    CLI::App* cmd_sweep =
        app.add_subcommand("sweep", "Heatmap of AUC recovery error over (alpha_hat, beta_hat)");
    cmd_sweep->add_option("--alpha", sweep.alpha, "true alpha");
    cmd_sweep->add_option("--beta", sweep.beta, "true beta");
    cmd_sweep->add_option("--auc-true", sweep.auc_true, "true AUC");
    cmd_sweep->add_option("--grid-resolution", sweep.grid_resolution, "grid points per axis");
    cmd_sweep->add_flag("--preset-paper-sweep", sweep.preset_paper_sweep,
                        "run the full preset target grid instead of a single sweep");
    cmd_sweep->add_option("--out", sweep.out_dir, "output directory");

    pucli::EvaluateOptions evaluate;
    CLI::App* cmd_evaluate =
        app.add_subcommand("evaluate", "Run the corruption/recovery protocol and emit error tables");
    cmd_evaluate->add_option("--pos-mean", evaluate.pos_mean, "positive component mean");
    cmd_evaluate->add_option("--pos-stddev", evaluate.pos_stddev, "positive component stddev");
    cmd_evaluate->add_option("--neg-mean", evaluate.neg_mean, "negative component mean");
    cmd_evaluate->add_option("--neg-stddev", evaluate.neg_stddev, "negative component stddev");
    cmd_evaluate->add_option("--alpha-target", evaluate.alpha_target,
                             "positive fraction when drawing the pool");
    cmd_evaluate->add_option("--pool", evaluate.pool, "pool size");
    cmd_evaluate->add_option("--n-labeled", evaluate.n_labeled, "labeled set size");
    cmd_evaluate->add_option("--beta-grid", evaluate.beta_grid, "betas, one cell each")
        ->delimiter(',');
    cmd_evaluate->add_option("--cap", evaluate.cap, "unlabeled size cap");
    cmd_evaluate->add_option("--repeats", evaluate.repeats, "corruption rounds per cell");
    cmd_evaluate->add_option("--seed", evaluate.seed, "root RNG seed");
    cmd_evaluate->add_option("--alpha-hat", evaluate.alpha_hat,
                             "externally estimated alpha (enables IE/DE columns)");
    cmd_evaluate->add_option("--beta-hat", evaluate.beta_hat, "externally estimated beta");
    cmd_evaluate->add_option("--dataset-id", evaluate.dataset_id, "name used in tables");
    cmd_evaluate->add_option("--area-mode", evaluate.area_mode, "rank | strict-step");
    cmd_evaluate->add_option("--out", evaluate.out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return pucli::kExitValidation;
    }

    if (*cmd_correct)
        return run_guarded([&] { return pucli::run_correct(correct); });
    if (*cmd_simulate)
        return run_guarded([&] { return pucli::run_simulate(simulate); });
    if (*cmd_sweep)
        return run_guarded([&] { return pucli::run_sweep(sweep); });
    return run_guarded([&] { return pucli::run_evaluate(evaluate); });
}
