// Acceptance suite: one self-contained check per shipping criterion, each
// printed as a single [PASS]/[FAIL] line. Run without arguments for the full
// suite or with a criterion number (1-9) for a single check; the exit code is
// the number of failed criteria.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
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

namespace fs = std::filesystem;
using namespace pucorrect;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;   ///< one-line summary of what was measured
    std::string problems; ///< accumulated failed sub-checks

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!problems.empty())
                problems += "; ";
            problems += what;
        }
    }

    std::string render() const {
        if (pass)
            return detail;
        if (detail.empty())
            return problems;
        return detail + " | FAILED: " + problems;
    }
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v) { return io::format_double(v); }

MixtureParams random_params(std::mt19937_64& rng, double min_gap) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    while (true) {
        const double alpha = u(rng) * (1.0 - min_gap);
        const double beta = alpha + min_gap + u(rng) * (1.0 - alpha - min_gap);
        if (beta <= 1.0 && beta - alpha >= min_gap)
            return {alpha, beta, {}};
    }
}

// --- criterion 1: algebraic round trips ------------------------------------

Outcome criterion_round_trips() {
    Outcome out;
    const auto start = Clock::now();
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> u(0.0, 1.0);

    double worst_rate = 0.0, worst_auc = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const MixtureParams p = random_params(rng, 0.05);
        const double tpr = u(rng), fpr = u(rng);
        const metrics::RatePair mixed{p.beta * tpr + (1.0 - p.beta) * fpr,
                                      p.alpha * tpr + (1.0 - p.alpha) * fpr, 0.0};
        const auto rec = correction::recover_rates(mixed, p);
        worst_rate = std::max({worst_rate, std::abs(rec.tpr - tpr), std::abs(rec.fpr - fpr)});

        const double auc = u(rng);
        const double auc_pu = (1.0 - p.gap()) / 2.0 + p.gap() * auc;
        const auto corrected = correction::correct_auc_direct(auc_pu, p);
        worst_auc = std::max(worst_auc, std::abs(corrected.auc - auc));
        out.require(!corrected.infeasible, "round trip flagged infeasible");
    }
    out.require(worst_rate < 1e-12, "rate round-trip error " + fmt(worst_rate));
    out.require(worst_auc < 1e-12, "AUC round-trip error " + fmt(worst_auc));

    const double elapsed = seconds_since(start);
    out.require(elapsed < 1.0, "took " + fmt(elapsed) + "s, budget 1s");
    out.detail = "10000 tuples, worst rate err " + fmt(worst_rate) + ", worst AUC err " +
                 fmt(worst_auc) + ", " + fmt(elapsed) + "s";
    return out;
}

// --- criterion 2: curve area vs pairwise oracle -----------------------------

Outcome criterion_oracle_equivalence() {
    Outcome out;
    const auto start = Clock::now();
    std::mt19937_64 rng(202);
    std::uniform_real_distribution<double> u(-100.0, 100.0);
    std::uniform_int_distribution<std::size_t> size_dist(1, 15);

    double worst = 0.0;
    for (int round = 0; round < 1000; ++round) {
        const std::size_t n_lab = size_dist(rng);
        const std::size_t n_unl = size_dist(rng);
        std::vector<double> scores;
        while (scores.size() < n_lab + n_unl) {
            const double s = u(rng);
            if (std::find(scores.begin(), scores.end(), s) == scores.end())
                scores.push_back(s);
        }
        std::vector<PuSample> samples;
        std::vector<double> lab, unl;
        for (std::size_t i = 0; i < scores.size(); ++i) {
            const bool labeled = i < n_lab;
            samples.push_back({scores[i],
                               labeled ? PuLabel::LabeledPositive : PuLabel::Unlabeled,
                               {}});
            (labeled ? lab : unl).push_back(scores[i]);
        }
        const double area =
            metrics::pu_roc(Dataset(std::move(samples)), AreaMode::RankEquivalent).area;
        const double oracle = metrics::pairwise_auc_oracle(lab, unl);
        worst = std::max(worst, std::abs(area - oracle));
    }
    out.require(worst < 1e-12, "worst |area - oracle| " + fmt(worst));

    const double elapsed = seconds_since(start);
    out.require(elapsed < 5.0, "took " + fmt(elapsed) + "s, budget 5s");
    out.detail = "1000 datasets <= 30 samples, worst gap " + fmt(worst) + ", " +
                 fmt(elapsed) + "s";
    return out;
}

// --- criterion 3: published direct-conversion spot checks -------------------

Outcome criterion_published_spot_checks() {
    Outcome out;
    struct Row {
        const char* name;
        double alpha, beta, auc_pu, expected, tol;
    };
    const Row rows[] = {
        {"gas", 0.342, 1.000, 0.824, 0.992, 0.005},
        {"mushroom", 0.444, 0.750, 0.648, 0.984, 0.005},
        {"shuttle", 0.139, 1.000, 0.929, 0.998, 0.003},
    };
    std::string values;
    for (const Row& row : rows) {
        const double got =
            correction::correct_auc_direct(row.auc_pu, {row.alpha, row.beta, {}}).auc;
        out.require(std::abs(got - row.expected) <= row.tol,
                    std::string(row.name) + ": got " + fmt(got) + ", want " +
                        fmt(row.expected) + " +/- " + fmt(row.tol));
        values += std::string(row.name) + "=" + fmt(got) + " ";
    }
    out.detail = values;
    return out;
}

// --- criterion 4: ordering corollary ----------------------------------------

Outcome criterion_ordering_corollary() {
    Outcome out;
    const auto start = Clock::now();
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> u(0.0, 1.0);

    for (int i = 0; i < 10000 && out.pass; ++i) {
        const MixtureParams p = random_params(rng, 1e-3);
        const double auc_pu = u(rng);
        const double raw = correction::correct_auc_direct(auc_pu, p).raw;
        const bool greater_expected = auc_pu > 0.5 && p.gap() < 1.0;
        out.require((raw > auc_pu) == greater_expected,
                    "corollary mismatch at auc_pu=" + fmt(auc_pu) + " gap=" + fmt(p.gap()));
    }
    // equality cases are exact
    for (int i = 0; i < 100; ++i) {
        const MixtureParams p = random_params(rng, 1e-3);
        out.require(correction::auc_ordering_check(0.5, p) ==
                        correction::AucOrdering::Equal,
                    "auc_pu = 1/2 must be a fixed point");
    }
    const MixtureParams full{0.0, 1.0, {}};
    for (double auc_pu : {0.0, 0.31, 0.5, 0.87, 1.0}) {
        out.require(correction::auc_ordering_check(auc_pu, full) ==
                        correction::AucOrdering::Equal,
                    "beta - alpha = 1 must preserve the AUC");
        out.require(correction::correct_auc_direct(auc_pu, full).raw == auc_pu,
                    "identity conversion must be bit-exact");
    }

    const double elapsed = seconds_since(start);
    out.require(elapsed < 1.0, "took " + fmt(elapsed) + "s, budget 1s");
    out.detail = "10000 tuples + exact equality cases, " + fmt(elapsed) + "s";
    return out;
}

// --- criterion 5: the two precision estimators agree -------------------------

Outcome criterion_precision_equivalence() {
    Outcome out;
    const auto start = Clock::now();
    std::mt19937_64 rng(505);
    std::uniform_real_distribution<double> u(0.0, 1.0);

    std::size_t compared = 0;
    double worst = 0.0;
    for (int round = 0; round < 100; ++round) {
        simulate::MixtureSpec spec;
        spec.pos_component = {1.0 + 2.0 * u(rng), 0.5 + u(rng)};
        spec.neg_component = {0.0, 0.5 + u(rng)};
        spec.true_alpha_target = 0.2 + 0.6 * u(rng);
        const auto pool = simulate::generate_labeled_pool(spec, 400, 1000 + round);

        simulate::ProtocolConfig cfg;
        cfg.n_labeled = 40;
        cfg.beta = 0.75 + 0.25 * u(rng);
        cfg.unlabeled_cap = 300;
        cfg.seed = 2000 + round;
        const auto corrupted = simulate::corrupt_to_pu(pool, cfg);
        const Dataset data(corrupted.samples);
        const double nl = static_cast<double>(data.summary().n_labeled);
        const double nu = static_cast<double>(data.summary().n_unlabeled);
        const MixtureParams p{random_params(rng, 0.05).alpha,
                              random_params(rng, 0.05).beta, data.summary().c};
        if (p.beta - p.alpha < 0.05)
            continue;

        for (int k = 0; k < 20; ++k) {
            const double t = u(rng);
            const auto rates = metrics::pu_rates_at_threshold(data, t);
            if (rates.fpr_pu == 0.0)
                continue;
            const double rho_pu =
                nl * rates.tpr_pu / (nl * rates.tpr_pu + nu * rates.fpr_pu);
            if (rho_pu >= 1.0)
                continue;
            const double direct =
                correction::recover_precision_direct(
                    correction::recover_rates(rates, p).tpr, rates.fpr_pu, p.alpha)
                    .raw;
            const double from_pu = correction::recover_precision_from_pu(rho_pu, p);
            worst = std::max(worst, std::abs(direct - from_pu));
            ++compared;
        }
    }
    out.require(compared >= 1000, "only " + std::to_string(compared) + " comparable points");
    out.require(worst < 1e-9, "worst estimator gap " + fmt(worst));

    const double elapsed = seconds_since(start);
    out.require(elapsed < 5.0, "took " + fmt(elapsed) + "s, budget 5s");
    out.detail = std::to_string(compared) + " points, worst gap " + fmt(worst) + ", " +
                 fmt(elapsed) + "s";
    return out;
}

// --- criterion 6: end-to-end synthetic recovery ------------------------------

Outcome criterion_end_to_end() {
    Outcome out;
    const auto start = Clock::now();

    evaluate::ExperimentSetup setup;
    setup.dataset_id = "binormal";
    setup.mixture.pos_component = {2.0, 1.0};
    setup.mixture.neg_component = {0.0, 1.0};
    setup.mixture.true_alpha_target = 0.364;
    setup.pool_size = 11000;
    setup.protocol.n_labeled = 1000;
    setup.protocol.unlabeled_cap = 10000;
    setup.protocol.repeats = 50;

    std::string summary;
    for (double beta : {1.0, 0.95, 0.75}) {
        setup.protocol.beta = beta;
        setup.protocol.seed = 600 + static_cast<std::uint64_t>(beta * 100);
        const auto cell = evaluate::run_experiment(setup);
        const std::string tag = "beta=" + fmt(beta) + " ";

        out.require(cell.alpha > 0.25 && cell.alpha < 0.35,
                    tag + "realized alpha " + fmt(cell.alpha) + " not ~0.3");
        out.require(std::abs(cell.auc_true - 0.9214) < 0.01,
                    tag + "truth AUC " + fmt(cell.auc_true) + " off closed form");
        out.require(cell.mae_ir < 0.02, tag + "mae_ir " + fmt(cell.mae_ir) + " >= 0.02");
        out.require(cell.mae_dr < 0.02, tag + "mae_dr " + fmt(cell.mae_dr) + " >= 0.02");
        out.require(cell.mae_pu > 0.05, tag + "mae_pu " + fmt(cell.mae_pu) + " <= 0.05");
        out.require(cell.pu_underestimates * 100 >= cell.repeats * 95,
                    tag + "underestimates " + std::to_string(cell.pu_underestimates) + "/50");
        out.require(cell.mae_pr_ir < 0.05,
                    tag + "PR mae_ir " + fmt(cell.mae_pr_ir) + " >= 0.05");
        out.require(cell.mae_pr_pu > 0.15,
                    tag + "PR mae_pu " + fmt(cell.mae_pr_pu) + " <= 0.15");
        summary += tag + "pu/" + fmt(cell.mae_pu) + " dr/" + fmt(cell.mae_dr) + " ir/" +
                   fmt(cell.mae_ir) + " pr_ir/" + fmt(cell.mae_pr_ir) + "  ";
    }

    const double elapsed = seconds_since(start);
    out.require(elapsed < 120.0, "took " + fmt(elapsed) + "s, budget 120s");
    out.detail = summary + fmt(elapsed) + "s";
    return out;
}

// --- criterion 7: feasibility-sweep fixed points ------------------------------

Outcome criterion_sweep_fixed_points() {
    Outcome out;
    const auto start = Clock::now();

    // Resolution 201 puts both the 0.5-gap diagonal and the (0,1) corner
    // exactly on-grid (step 0.005).
    const MixtureParams truth{0.25, 0.75, {}};
    const auto grid = correction::feasibility_sweep(0.90, truth, 201);

    out.require(std::abs(grid.auc_pu - 0.80) < 1e-12,
                "computed AUC^pu is " + fmt(grid.auc_pu) + ", criterion pins 0.80");

    double worst_diag = 0.0;
    for (std::size_t i = 0; i + 100 < 201; ++i) {
        const auto& cell = grid.cell(i, i + 100); // beta_hat = alpha_hat + 0.5
        if (!cell.valid)
            continue;
        worst_diag = std::max(worst_diag, cell.abs_error);
    }
    out.require(worst_diag < 1e-12,
                "diagonal beta_hat = alpha_hat + 0.5 error " + fmt(worst_diag));

    const auto& corner = grid.cell(0, 200);
    out.require(std::abs(corner.auc_est - 0.80) < 1e-12,
                "cell (0,1) returns " + fmt(corner.auc_est) + ", criterion pins 0.80");

    // an infeasible band hugs the diagonal for every AUC = 0.95 preset
    for (double alpha : {0.05, 0.25, 0.50})
        for (double beta : {0.75, 0.95, 1.00}) {
            const MixtureParams p{alpha, beta, {}};
            const auto g95 = correction::feasibility_sweep(0.95, p, 201);
            double max_infeasible_gap = -1.0;
            for (const auto& cell : g95.cells)
                if (cell.valid && cell.infeasible)
                    max_infeasible_gap =
                        std::max(max_infeasible_gap, cell.beta_hat - cell.alpha_hat);
            out.require(max_infeasible_gap > 0.0,
                        "no infeasible region for (" + fmt(alpha) + "," + fmt(beta) + ")");
            out.require(p.gap() - max_infeasible_gap < 0.11,
                        "infeasible band not adjacent to the diagonal for (" +
                            fmt(alpha) + "," + fmt(beta) + ")");
        }

    // timing is specified at 200x200
    const auto timing_start = Clock::now();
    const auto timing_grid = correction::feasibility_sweep(0.90, truth, 200);
    const double sweep_elapsed = seconds_since(timing_start);
    out.require(timing_grid.cells.size() == 200 * 200, "grid size");
    out.require(sweep_elapsed < 5.0,
                "200x200 sweep took " + fmt(sweep_elapsed) + "s, budget 5s");

    out.detail = "AUC^pu " + fmt(grid.auc_pu) + ", diag err " + fmt(worst_diag) +
                 ", corner " + fmt(corner.auc_est) + ", 200x200 in " +
                 fmt(sweep_elapsed) + "s, " + fmt(seconds_since(start)) + "s total";
    return out;
}

// --- criterion 8: binomial counting test -------------------------------------

Outcome criterion_binomial_test() {
    Outcome out;
    const double p31 = evaluate::binomial_counting_test(31, 36);
    out.require(p31 >= 6.45e-6 && p31 < 6.55e-6,
                "P(31,36) = " + fmt(p31) + ", want 6.5e-6 to 2 s.f.");
    const double p26 = evaluate::binomial_counting_test(26, 36);
    out.require(p26 >= 5.65e-3 && p26 < 5.75e-3,
                "P(26,36) = " + fmt(p26) + ", want 5.7e-3 to 2 s.f.");
    out.detail = "P(31,36)=" + fmt(p31) + ", P(26,36)=" + fmt(p26);
    return out;
}

// --- criterion 9: byte-identical reruns --------------------------------------

int run_cli(const std::string& args) {
    const std::string cmd =
        std::string("'") + PUCORRECT_CLI_PATH + "' " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool identical_trees(const fs::path& a, const fs::path& b, std::string& diff) {
    std::vector<fs::path> names;
    for (const auto& entry : fs::recursive_directory_iterator(a))
        if (entry.is_regular_file())
            names.push_back(fs::relative(entry.path(), a));
    std::sort(names.begin(), names.end());
    if (names.empty()) {
        diff = "no output files";
        return false;
    }
    for (const fs::path& rel : names) {
        std::ifstream fa(a / rel, std::ios::binary);
        std::ifstream fb(b / rel, std::ios::binary);
        if (!fb) {
            diff = rel.string() + " missing in rerun";
            return false;
        }
        std::stringstream sa, sb;
        sa << fa.rdbuf();
        sb << fb.rdbuf();
        if (sa.str() != sb.str()) {
            diff = rel.string() + " differs between runs";
            return false;
        }
    }
    return true;
}

Outcome criterion_determinism() {
    Outcome out;
    const fs::path root = fs::temp_directory_path() / "pucorrect_acceptance_det";
    fs::remove_all(root);
    fs::create_directories(root);

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"simulate",
         "simulate --seed 7 --pool 2200 --n-labeled 200 --cap 2000 --out '%OUT%'"},
        {"sweep",
         "sweep --alpha 0.25 --beta 0.75 --auc-true 0.9 --grid-resolution 41 --out '%OUT%'"},
        {"evaluate",
         "evaluate --seed 13 --pool 1100 --n-labeled 100 --cap 1000 --repeats 3 "
         "--beta-grid 1.0,0.75 --alpha-hat 0.3 --beta-hat 1.0 --out '%OUT%'"},
    };

    for (const auto& [name, tmpl] : commands) {
        for (const char* round : {"r1", "r2"}) {
            std::string cmd = tmpl;
            const fs::path out_dir = root / name / round;
            cmd.replace(cmd.find("%OUT%"), 5, out_dir.string());
            out.require(run_cli(cmd) == 0, name + " run failed");
        }
        std::string diff;
        out.require(identical_trees(root / name / "r1", root / name / "r2", diff),
                    name + ": " + diff);
    }

    // correct takes no seed but must also be stable across reruns
    for (const char* round : {"r1", "r2"}) {
        const fs::path out_dir = root / "correct" / round;
        const std::string cmd = "correct --input '" +
                                (root / "simulate" / "r1" / "dataset.csv").string() +
                                "' --alpha 0.3 --beta 1.0 --out '" + out_dir.string() + "'";
        out.require(run_cli(cmd) == 0, "correct run failed");
    }
    std::string diff;
    out.require(identical_trees(root / "correct" / "r1", root / "correct" / "r2", diff),
                "correct: " + diff);

    out.detail = "simulate, sweep, evaluate, correct reran byte-identical";
    return out;
}

struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "algebraic round-trips exact to 1e-12", criterion_round_trips},
        {2, "rank-mode areas match the pairwise oracle", criterion_oracle_equivalence},
        {3, "published direct-conversion spot checks", criterion_published_spot_checks},
        {4, "ordering corollary with exact equality cases", criterion_ordering_corollary},
        {5, "precision estimators agree to 1e-9", criterion_precision_equivalence},
        {6, "end-to-end synthetic recovery", criterion_end_to_end},
        {7, "feasibility-sweep fixed points", criterion_sweep_fixed_points},
        {8, "binomial counting test tail values", criterion_binomial_test},
        {9, "byte-identical reruns per seed", criterion_determinism},
    };
    return all;
}

} // namespace

int main(int argc, char** argv) {
    int selected = 0;
    if (argc > 1)
        selected = std::atoi(argv[1]);

    int failures = 0;
    for (const Criterion& criterion : criteria()) {
        if (selected != 0 && criterion.id != selected)
            continue;
        Outcome outcome;
        try {
            outcome = criterion.run();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.problems = std::string("exception: ") + e.what();
        }
        std::printf("[%s] criterion %d: %s (%s)\n", outcome.pass ? "PASS" : "FAIL",
                    criterion.id, criterion.name, outcome.render().c_str());
        failures += outcome.pass ? 0 : 1;
    }
    return failures;
}
