#include "pucorrect/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string_view>

#include <json.hpp>

#include "pucorrect/errors.hpp"

namespace pucorrect::io {

using nlohmann::json;

std::string format_double(double value) {
    std::array<char, 64> buf;
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

[[noreturn]] void fail_line(std::size_t line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

double parse_score(std::string_view text, std::size_t line_no) {
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        fail_line(line_no, "cannot parse score '" + std::string(text) + "'");
    if (!std::isfinite(value))
        fail_line(line_no, "non-finite score '" + std::string(text) + "'");
    return value;
}

const std::string_view kBin[] = {"small", "medium", "large"};

void append_method_rows(std::ostream& out, const evaluate::BinnedError& bin,
                        std::string_view method, const std::vector<double>& errs) {
    out << kBin[static_cast<std::size_t>(bin.bin)] << ',' << method << ','
        << errs.size();
    if (errs.empty()) {
        out << ",,,\n";
        return;
    }
    double sum = 0.0, lo = errs.front(), hi = errs.front();
    for (double e : errs) {
        sum += e;
        lo = std::min(lo, e);
        hi = std::max(hi, e);
    }
    out << ',' << format_double(sum / static_cast<double>(errs.size())) << ','
        << format_double(lo) << ',' << format_double(hi) << '\n';
}

json spec_to_json(const simulate::MixtureSpec& spec) {
    return json{
        {"pos", {{"mean", spec.pos_component.mean}, {"stddev", spec.pos_component.stddev}}},
        {"neg", {{"mean", spec.neg_component.mean}, {"stddev", spec.neg_component.stddev}}},
        {"alpha_target", spec.true_alpha_target},
    };
}

simulate::MixtureSpec spec_from_json(const json& j) {
    simulate::MixtureSpec spec;
    spec.pos_component.mean = j.at("pos").at("mean").get<double>();
    spec.pos_component.stddev = j.at("pos").at("stddev").get<double>();
    spec.neg_component.mean = j.at("neg").at("mean").get<double>();
    spec.neg_component.stddev = j.at("neg").at("stddev").get<double>();
    spec.true_alpha_target = j.at("alpha_target").get<double>();
    return spec;
}

} // namespace

std::vector<PuSample> read_dataset_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    bool has_truth_column = false;

    if (!std::getline(in, line))
        throw ParseError("line 1: missing header");
    ++line_no;
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line == "score,label")
        has_truth_column = false;
    else if (line == "score,label,truth")
        has_truth_column = true;
    else
        fail_line(line_no, "header must be 'score,label' or 'score,label,truth'");

    std::vector<PuSample> samples;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            fail_line(line_no, "empty line");

        const auto fields = split_fields(line);
        const std::size_t expected = has_truth_column ? 3 : 2;
        if (fields.size() != expected)
            fail_line(line_no, "expected " + std::to_string(expected) + " fields, got " +
                                   std::to_string(fields.size()));

        PuSample sample;
        sample.score = parse_score(fields[0], line_no);
        if (fields[1] == "P")
            sample.pu_label = PuLabel::LabeledPositive;
        else if (fields[1] == "U")
            sample.pu_label = PuLabel::Unlabeled;
        else
            fail_line(line_no, "label must be 'P' or 'U', got '" + std::string(fields[1]) + "'");
        if (has_truth_column && !fields[2].empty()) {
            if (fields[2] == "1")
                sample.truth = TruthLabel::Positive;
            else if (fields[2] == "0")
                sample.truth = TruthLabel::Negative;
            else
                fail_line(line_no, "truth must be '0', '1' or empty");
        }
        samples.push_back(sample);
    }
    return samples;
}

std::vector<PuSample> read_dataset_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path.string() + "'");
    return read_dataset_csv(in);
}

void write_dataset_csv(std::ostream& out, std::span<const PuSample> samples,
                       bool include_truth) {
    out << (include_truth ? "score,label,truth" : "score,label") << '\n';
    for (const PuSample& s : samples) {
        out << format_double(s.score) << ','
            << (s.pu_label == PuLabel::LabeledPositive ? 'P' : 'U');
        if (include_truth) {
            out << ',';
            if (s.truth)
                out << (*s.truth == TruthLabel::Positive ? '1' : '0');
        }
        out << '\n';
    }
}

void write_curve_csv(std::ostream& out, const Curve& curve) {
    out << "threshold,x,y\n";
    for (const OperatingPoint& p : curve.points)
        out << format_double(p.threshold) << ',' << format_double(p.x) << ','
            << format_double(p.y) << '\n';
}

void write_sweep_csv(std::ostream& out, const correction::SweepGrid& grid) {
    out << "alpha_hat,beta_hat,auc_est,abs_error,infeasible\n";
    for (const correction::SweepCell& cell : grid.cells) {
        if (!cell.valid)
            continue;
        out << format_double(cell.alpha_hat) << ',' << format_double(cell.beta_hat)
            << ',' << format_double(cell.auc_est) << ','
            << format_double(cell.abs_error) << ',' << (cell.infeasible ? 1 : 0)
            << '\n';
    }
}

std::string to_json(const RunReport& report) {
    json j{
        {"alpha", report.alpha},
        {"beta", report.beta},
        {"area_mode", report.area_mode},
        {"n_labeled", report.n_labeled},
        {"n_unlabeled", report.n_unlabeled},
        {"c", report.c},
        {"auc_pu", report.auc_pu},
        {"aucpr_pu", report.aucpr_pu},
    };
    if (report.direct)
        j["direct"] = json{{"auc", report.direct->auc},
                           {"raw", report.direct->raw},
                           {"clipped", report.direct->clipped},
                           {"infeasible", report.direct->infeasible}};
    if (report.indirect)
        j["indirect"] = json{{"auc", report.indirect->auc},
                             {"points_in", report.indirect->points_in},
                             {"points_dropped", report.indirect->points_dropped}};
    if (report.pr_indirect)
        j["pr_indirect"] = json{{"aucpr", report.pr_indirect->aucpr},
                                {"points_in", report.pr_indirect->points_in},
                                {"points_dropped", report.pr_indirect->points_dropped},
                                {"points_clamped", report.pr_indirect->points_clamped}};
    return j.dump(2) + "\n";
}

RunReport report_from_json(const std::string& text) {
    const json j = json::parse(text);
    RunReport report;
    report.alpha = j.at("alpha").get<double>();
    report.beta = j.at("beta").get<double>();
    report.area_mode = j.at("area_mode").get<std::string>();
    report.n_labeled = j.at("n_labeled").get<std::size_t>();
    report.n_unlabeled = j.at("n_unlabeled").get<std::size_t>();
    report.c = j.at("c").get<double>();
    report.auc_pu = j.at("auc_pu").get<double>();
    report.aucpr_pu = j.at("aucpr_pu").get<double>();
    if (j.contains("direct")) {
        const json& d = j.at("direct");
        report.direct = DirectSummary{d.at("auc").get<double>(), d.at("raw").get<double>(),
                                      d.at("clipped").get<bool>(),
                                      d.at("infeasible").get<bool>()};
    }
    if (j.contains("indirect")) {
        const json& d = j.at("indirect");
        report.indirect =
            IndirectSummary{d.at("auc").get<double>(), d.at("points_in").get<std::size_t>(),
                            d.at("points_dropped").get<std::size_t>()};
    }
    if (j.contains("pr_indirect")) {
        const json& d = j.at("pr_indirect");
        report.pr_indirect = PrIndirectSummary{
            d.at("aucpr").get<double>(), d.at("points_in").get<std::size_t>(),
            d.at("points_dropped").get<std::size_t>(),
            d.at("points_clamped").get<std::size_t>()};
    }
    return report;
}

void write_report_csv(std::ostream& out, const RunReport& report) {
    out << "key,value\n";
    out << "alpha," << format_double(report.alpha) << '\n';
    out << "beta," << format_double(report.beta) << '\n';
    out << "area_mode," << report.area_mode << '\n';
    out << "n_labeled," << report.n_labeled << '\n';
    out << "n_unlabeled," << report.n_unlabeled << '\n';
    out << "c," << format_double(report.c) << '\n';
    out << "auc_pu," << format_double(report.auc_pu) << '\n';
    out << "aucpr_pu," << format_double(report.aucpr_pu) << '\n';
    if (report.direct) {
        out << "auc_direct," << format_double(report.direct->auc) << '\n';
        out << "auc_direct_raw," << format_double(report.direct->raw) << '\n';
        out << "auc_direct_clipped," << (report.direct->clipped ? 1 : 0) << '\n';
        out << "auc_direct_infeasible," << (report.direct->infeasible ? 1 : 0) << '\n';
    }
    if (report.indirect) {
        out << "auc_indirect," << format_double(report.indirect->auc) << '\n';
        out << "auc_indirect_points_in," << report.indirect->points_in << '\n';
        out << "auc_indirect_points_dropped," << report.indirect->points_dropped << '\n';
    }
    if (report.pr_indirect) {
        out << "aucpr_indirect," << format_double(report.pr_indirect->aucpr) << '\n';
        out << "aucpr_indirect_points_in," << report.pr_indirect->points_in << '\n';
        out << "aucpr_indirect_points_dropped," << report.pr_indirect->points_dropped << '\n';
        out << "aucpr_indirect_points_clamped," << report.pr_indirect->points_clamped << '\n';
    }
}

std::string to_json(const SimulationManifest& manifest) {
    const json j{
        {"seed", manifest.seed},
        {"pool_size", manifest.pool_size},
        {"spec", spec_to_json(manifest.spec)},
        {"beta_nominal", manifest.beta_nominal},
        {"n_labeled", manifest.n_labeled},
        {"n_unlabeled", manifest.n_unlabeled},
        {"alpha_realized", manifest.alpha_realized},
        {"beta_realized", manifest.beta_realized},
        {"c", manifest.c},
        {"truth_auc", manifest.truth_auc},
        {"truth_aucpr", manifest.truth_aucpr},
        {"area_mode", manifest.area_mode},
    };
    return j.dump(2) + "\n";
}

SimulationManifest manifest_from_json(const std::string& text) {
    const json j = json::parse(text);
    SimulationManifest m;
    m.seed = j.at("seed").get<std::uint64_t>();
    m.pool_size = j.at("pool_size").get<std::size_t>();
    m.spec = spec_from_json(j.at("spec"));
    m.beta_nominal = j.at("beta_nominal").get<double>();
    m.n_labeled = j.at("n_labeled").get<std::size_t>();
    m.n_unlabeled = j.at("n_unlabeled").get<std::size_t>();
    m.alpha_realized = j.at("alpha_realized").get<double>();
    m.beta_realized = j.at("beta_realized").get<double>();
    m.c = j.at("c").get<double>();
    m.truth_auc = j.at("truth_auc").get<double>();
    m.truth_aucpr = j.at("truth_aucpr").get<double>();
    m.area_mode = j.at("area_mode").get<std::string>();
    return m;
}

void write_auc_table_csv(std::ostream& out,
                         std::span<const evaluate::ErrorCell> cells) {
    out << "dataset,alpha,beta,e,auc_true,auc_pu,mae_pu,mae_ir,mae_dr,mae_ie,mae_de\n";
    for (const evaluate::ErrorCell& cell : cells) {
        out << cell.dataset_id << ',' << format_double(cell.alpha) << ','
            << format_double(cell.beta_nominal) << ','
            << format_double(cell.e_beta_minus_alpha) << ','
            << format_double(cell.auc_true) << ',' << format_double(cell.auc_pu)
            << ',' << format_double(cell.mae_pu) << ',' << format_double(cell.mae_ir)
            << ',' << format_double(cell.mae_dr) << ',';
        if (cell.mae_ie)
            out << format_double(*cell.mae_ie);
        out << ',';
        if (cell.mae_de)
            out << format_double(*cell.mae_de);
        out << '\n';
    }
}

void write_pr_table_csv(std::ostream& out,
                        std::span<const evaluate::ErrorCell> cells) {
    out << "dataset,alpha,beta,e,aucpr_true,aucpr_pu,mae_pu,mae_ir,mae_ie\n";
    for (const evaluate::ErrorCell& cell : cells) {
        out << cell.dataset_id << ',' << format_double(cell.alpha) << ','
            << format_double(cell.beta_nominal) << ','
            << format_double(cell.e_beta_minus_alpha) << ','
            << format_double(cell.aucpr_true) << ','
            << format_double(cell.aucpr_pu) << ','
            << format_double(cell.mae_pr_pu) << ','
            << format_double(cell.mae_pr_ir) << ',';
        if (cell.mae_pr_ie)
            out << format_double(*cell.mae_pr_ie);
        out << '\n';
    }
}

void write_binned_csv(std::ostream& out,
                      std::span<const evaluate::BinnedError> bins) {
    out << "bin,method,count,mean_abs_error,min,max\n";
    for (const evaluate::BinnedError& bin : bins) {
        append_method_rows(out, bin, "pu", bin.pu);
        append_method_rows(out, bin, "ir", bin.ir);
        append_method_rows(out, bin, "dr", bin.dr);
        if (!bin.ie.empty())
            append_method_rows(out, bin, "ie", bin.ie);
        if (!bin.de.empty())
            append_method_rows(out, bin, "de", bin.de);
    }
}

std::string to_json(std::span<const BinomialTestResult> results) {
    json tests = json::array();
    for (const BinomialTestResult& r : results) {
        tests.push_back(json{
            {"comparison", r.comparison},
            {"direct_wins", r.counts.direct_wins},
            {"indirect_wins", r.counts.indirect_wins},
            {"ties", r.counts.ties},
            {"k", r.k},
            {"n", r.n},
            {"p_value", r.p_value},
        });
    }
    return json{{"tests", tests}}.dump(2) + "\n";
}

} // namespace pucorrect::io
