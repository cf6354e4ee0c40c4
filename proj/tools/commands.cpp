#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pucorrect/correction.hpp"
#include "pucorrect/dataset.hpp"
#include "pucorrect/errors.hpp"
#include "pucorrect/evaluate.hpp"
#include "pucorrect/io.hpp"
#include "pucorrect/metrics.hpp"
#include "pucorrect/simulate.hpp"
#include "pucorrect/types.hpp"

#include "log.hpp"

namespace pucli {

namespace fs = std::filesystem;
using namespace pucorrect;

namespace {

AreaMode parse_area_mode(const std::string& name) {
    if (name == "rank")
        return AreaMode::RankEquivalent;
    if (name == "strict-step")
        return AreaMode::StrictStep;
    throw InvalidArgumentError("--area-mode must be 'rank' or 'strict-step'");
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot open '" + path.string() + "' for writing");
    out << content;
    if (!out)
        throw Error("failed writing '" + path.string() + "'");
    log_info("wrote " + path.string());
}

void write_curve_file(const fs::path& path, const Curve& curve) {
    std::ostringstream ss;
    io::write_curve_csv(ss, curve);
    write_file(path, ss.str());
}

fs::path prepare_out_dir(const std::string& out_dir) {
    const fs::path dir(out_dir);
    fs::create_directories(dir);
    return dir;
}

std::string trimmed_number(double v) {
    // Fixed two-decimal rendering for file names (0.25 -> "0.25").
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

void run_one_sweep(const fs::path& dir, double alpha, double beta, double auc_true,
                   std::uint64_t resolution, const std::string& stem) {
    const correction::SweepGrid grid = correction::feasibility_sweep(
        auc_true, MixtureParams{alpha, beta, {}}, resolution);

    std::ostringstream csv;
    io::write_sweep_csv(csv, grid);
    write_file(dir / (stem + ".csv"), csv.str());

    std::ostringstream manifest;
    manifest << "{\n"
             << "  \"alpha\": " << io::format_double(alpha) << ",\n"
             << "  \"beta\": " << io::format_double(beta) << ",\n"
             << "  \"auc_true\": " << io::format_double(auc_true) << ",\n"
             << "  \"auc_pu\": " << io::format_double(grid.auc_pu) << ",\n"
             << "  \"grid_resolution\": " << grid.resolution << "\n"
             << "}\n";
    write_file(dir / (stem + "_manifest.json"), manifest.str());
}

} // namespace

int run_correct(const CorrectOptions& opt) {
    const AreaMode mode = parse_area_mode(opt.area_mode);
    if (opt.method != "direct" && opt.method != "indirect" && opt.method != "both")
        throw InvalidArgumentError("--method must be 'direct', 'indirect' or 'both'");
    if (opt.format != "json" && opt.format != "csv")
        throw InvalidArgumentError("--format must be 'json' or 'csv'");

    const Dataset data(io::read_dataset_csv(fs::path(opt.input_path)));
    const MixtureParams params{opt.alpha, opt.beta, data.summary().c};
    correction::validate_params(params);

    const std::vector<metrics::RatePair> sweep = metrics::pu_rate_sweep(data);
    const Curve roc_pu = metrics::roc_curve_from_sweep(sweep, mode);
    const Curve pr_pu = metrics::pr_curve_from_sweep(
        sweep, data.summary().n_labeled, data.summary().n_unlabeled, mode);

    io::RunReport report;
    report.alpha = opt.alpha;
    report.beta = opt.beta;
    report.area_mode = opt.area_mode;
    report.n_labeled = data.summary().n_labeled;
    report.n_unlabeled = data.summary().n_unlabeled;
    report.c = data.summary().c;
    report.auc_pu = roc_pu.area;
    report.aucpr_pu = pr_pu.area;

    const bool want_direct = opt.method != "indirect";
    if (want_direct) {
        const correction::AucCorrection direct =
            correction::correct_auc_direct(roc_pu.area, params);
        report.direct = io::DirectSummary{direct.auc, direct.raw, direct.clipped,
                                          direct.infeasible};
        if (direct.infeasible && opt.strict)
            throw InfeasibleFailure(
                "direct correction left [0,1] (raw " + io::format_double(direct.raw) +
                "); (alpha, beta) are inconsistent with the data");
    }

    // The corrected curve files always come from the indirect recovery; it is
    // the only method that produces operating points.
    const auto recover_or_fail = [&](auto&& fn) {
        try {
            return fn();
        } catch (const EmptyRecoveredCurveError& e) {
            if (opt.strict)
                throw InfeasibleFailure(e.what());
            throw;
        }
    };
    const correction::RecoveredCurve roc_rec = recover_or_fail(
        [&] { return correction::recover_roc_indirect(sweep, params, mode); });
    const correction::RecoveredCurve pr_rec = recover_or_fail(
        [&] { return correction::recover_pr_indirect(sweep, params, mode); });
    if (opt.method != "direct") {
        report.indirect = io::IndirectSummary{roc_rec.curve.area, roc_rec.points_in,
                                              roc_rec.points_dropped};
    }
    report.pr_indirect = io::PrIndirectSummary{pr_rec.curve.area, pr_rec.points_in,
                                               pr_rec.points_dropped,
                                               pr_rec.points_clamped};

    const fs::path dir = prepare_out_dir(opt.out_dir);
    write_curve_file(dir / "roc_pu.csv", roc_pu);
    write_curve_file(dir / "pr_pu.csv", pr_pu);
    write_curve_file(dir / "roc_corrected.csv", roc_rec.curve);
    write_curve_file(dir / "pr_corrected.csv", pr_rec.curve);

    if (opt.format == "json") {
        write_file(dir / "report.json", io::to_json(report));
    } else {
        std::ostringstream ss;
        io::write_report_csv(ss, report);
        write_file(dir / "report.csv", ss.str());
    }
    return kExitOk;
}

int run_simulate(const SimulateOptions& opt) {
    const AreaMode mode = parse_area_mode(opt.area_mode);
    simulate::MixtureSpec spec;
    spec.pos_component = {opt.pos_mean, opt.pos_stddev};
    spec.neg_component = {opt.neg_mean, opt.neg_stddev};
    spec.true_alpha_target = opt.alpha_target;

    const std::vector<simulate::PoolSample> pool = simulate::generate_labeled_pool(
        spec, opt.pool, simulate::derive_stream(opt.seed, 0));

    simulate::ProtocolConfig cfg;
    cfg.n_labeled = opt.n_labeled;
    cfg.beta = opt.beta;
    cfg.unlabeled_cap = opt.cap;
    cfg.repeats = 1;
    cfg.seed = simulate::derive_stream(opt.seed, 1);
    const simulate::CorruptionResult result = simulate::corrupt_to_pu(pool, cfg, mode);

    const fs::path dir = prepare_out_dir(opt.out_dir);

    std::ostringstream csv;
    io::write_dataset_csv(csv, result.samples, /*include_truth=*/true);
    write_file(dir / "dataset.csv", csv.str());

    io::SimulationManifest manifest;
    manifest.seed = opt.seed;
    manifest.pool_size = opt.pool;
    manifest.spec = spec;
    manifest.beta_nominal = opt.beta;
    manifest.n_labeled = result.n_labeled;
    manifest.n_unlabeled = result.n_unlabeled;
    manifest.alpha_realized = result.realized.alpha;
    manifest.beta_realized = result.realized.beta;
    manifest.c = *result.realized.c;
    manifest.truth_auc = result.truth_roc.area;
    manifest.truth_aucpr = result.truth_pr.area;
    manifest.area_mode = opt.area_mode;
    write_file(dir / "manifest.json", io::to_json(manifest));
    return kExitOk;
}

int run_sweep(const SweepOptions& opt) {
    const fs::path dir = prepare_out_dir(opt.out_dir);
    if (!opt.preset_paper_sweep) {
        run_one_sweep(dir, opt.alpha, opt.beta, opt.auc_true, opt.grid_resolution,
                      "sweep");
        return kExitOk;
    }
    // The paper's heatmap targets, plus the single worked illustration
    // (alpha, beta, AUC) = (0.25, 0.75, 0.90).
    for (double alpha : {0.05, 0.25, 0.50})
        for (double beta : {0.75, 0.95, 1.00})
            for (double auc : {0.65, 0.80, 0.95}) {
                const std::string stem = "sweep_a" + trimmed_number(alpha) + "_b" +
                                         trimmed_number(beta) + "_auc" +
                                         trimmed_number(auc);
                run_one_sweep(dir, alpha, beta, auc, opt.grid_resolution, stem);
            }
    run_one_sweep(dir, 0.25, 0.75, 0.90, opt.grid_resolution,
                  "sweep_a0.25_b0.75_auc0.90");
    return kExitOk;
}

int run_evaluate(const EvaluateOptions& opt) {
    const AreaMode mode = parse_area_mode(opt.area_mode);
    if (opt.beta_grid.empty())
        throw InvalidArgumentError("--beta-grid must name at least one beta");
    if (opt.alpha_hat.has_value() != opt.beta_hat.has_value())
        throw InvalidArgumentError("--alpha-hat and --beta-hat must be given together");
    if (opt.repeats == 1)
        log_warn("repeats=1: reported MAEs are single-sample, not averages");

    evaluate::ExperimentSetup setup;
    setup.dataset_id = opt.dataset_id;
    setup.mixture.pos_component = {opt.pos_mean, opt.pos_stddev};
    setup.mixture.neg_component = {opt.neg_mean, opt.neg_stddev};
    setup.mixture.true_alpha_target = opt.alpha_target;
    setup.pool_size = opt.pool;
    setup.area_mode = mode;
    if (opt.alpha_hat)
        setup.provided = evaluate::ProvidedParams{*opt.alpha_hat, *opt.beta_hat};

    std::vector<evaluate::ErrorCell> cells;
    for (std::size_t i = 0; i < opt.beta_grid.size(); ++i) {
        setup.protocol.n_labeled = opt.n_labeled;
        setup.protocol.beta = opt.beta_grid[i];
        setup.protocol.unlabeled_cap = opt.cap;
        setup.protocol.repeats = opt.repeats;
        // Independent root per cell so cells stay reproducible in isolation.
        setup.protocol.seed = simulate::derive_stream(opt.seed, 1000 + i);
        cells.push_back(evaluate::run_experiment(setup));
        log_info("cell beta=" + io::format_double(opt.beta_grid[i]) + " done");
    }

    const fs::path dir = prepare_out_dir(opt.out_dir);

    std::ostringstream t1;
    io::write_auc_table_csv(t1, cells);
    write_file(dir / "auc_table.csv", t1.str());

    std::ostringstream t2;
    io::write_pr_table_csv(t2, cells);
    write_file(dir / "pr_table.csv", t2.str());

    const auto bins = evaluate::bin_by_gap_error(cells);
    std::ostringstream bs;
    io::write_binned_csv(bs, std::span<const evaluate::BinnedError>(bins));
    write_file(dir / "binned.csv", bs.str());

    std::vector<io::BinomialTestResult> tests;
    {
        io::BinomialTestResult t;
        t.comparison = "dr_vs_ir";
        t.counts = evaluate::count_direct_vs_indirect(cells, /*estimated=*/false);
        t.k = evaluate::split_ties_alternating(t.counts);
        t.n = cells.size();
        t.p_value = evaluate::binomial_counting_test(t.k, t.n);
        tests.push_back(t);
    }
    if (setup.provided) {
        io::BinomialTestResult t;
        t.comparison = "de_vs_ie";
        t.counts = evaluate::count_direct_vs_indirect(cells, /*estimated=*/true);
        t.k = evaluate::split_ties_alternating(t.counts);
        t.n = cells.size();
        t.p_value = evaluate::binomial_counting_test(t.k, t.n);
        tests.push_back(t);
    }
    write_file(dir / "binomial.json",
               io::to_json(std::span<const io::BinomialTestResult>(tests)));
    return kExitOk;
}

} // namespace pucli
