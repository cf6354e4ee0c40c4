#include "pucorrect/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "pucorrect/dataset.hpp"
#include "pucorrect/errors.hpp"
#include "pucorrect/metrics.hpp"

namespace pucorrect::simulate {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

double log_normal_pdf(double x, const ComponentSpec& comp) {
    const double z = (x - comp.mean) / comp.stddev;
    return -0.5 * z * z - std::log(comp.stddev) -
           0.5 * std::log(2.0 * std::numbers::pi);
}

void validate_spec(const MixtureSpec& spec) {
    if (spec.pos_component.stddev <= 0.0 || spec.neg_component.stddev <= 0.0)
        throw InvalidArgumentError("component stddev must be positive");
    if (!(spec.true_alpha_target > 0.0 && spec.true_alpha_target < 1.0))
        throw InvalidArgumentError("true_alpha_target must lie strictly inside (0, 1)");
}

// Moves a uniform random k-subset of `idx` to its front; deterministic
// partial Fisher-Yates.
void draw_without_replacement(std::vector<std::size_t>& idx, std::size_t k,
                              std::mt19937_64& rng) {
    for (std::size_t i = 0; i < k; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, idx.size() - 1);
        std::swap(idx[i], idx[pick(rng)]);
    }
}

std::size_t round_half_even(double v) {
    return static_cast<std::size_t>(std::nearbyint(v));
}

} // namespace

std::uint64_t derive_stream(std::uint64_t root, std::uint64_t index) {
    return splitmix64(root + 0x9E3779B97F4A7C15ull * (index + 1));
}

double mixture_posterior(const MixtureSpec& spec, double x) {
    // Log-domain logistic form; stays finite far out in either tail where
    // both densities underflow. The density ratio is formed before adding
    // the prior odds so nearby components cancel exactly.
    const double p = spec.true_alpha_target;
    const double log_density_ratio =
        log_normal_pdf(x, spec.pos_component) - log_normal_pdf(x, spec.neg_component);
    const double logit = std::log(p) - std::log1p(-p) + log_density_ratio;
    return 1.0 / (1.0 + std::exp(-logit));
}

std::vector<PoolSample> generate_labeled_pool(const MixtureSpec& spec,
                                              std::size_t n,
                                              std::uint64_t seed) {
    validate_spec(spec);
    if (n < 2)
        throw InvalidArgumentError("pool size must be at least 2");

    std::mt19937_64 rng(seed);
    std::bernoulli_distribution truth_dist(spec.true_alpha_target);
    std::normal_distribution<double> pos_dist(spec.pos_component.mean,
                                              spec.pos_component.stddev);
    std::normal_distribution<double> neg_dist(spec.neg_component.mean,
                                              spec.neg_component.stddev);

    std::vector<PoolSample> pool;
    pool.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const bool positive = truth_dist(rng);
        const double x = positive ? pos_dist(rng) : neg_dist(rng);
        pool.push_back(PoolSample{mixture_posterior(spec, x),
                                  positive ? TruthLabel::Positive : TruthLabel::Negative});
    }
    return pool;
}

CorruptionResult corrupt_to_pu(std::span<const PoolSample> pool,
                               const ProtocolConfig& cfg, AreaMode mode) {
    if (cfg.n_labeled < 10)
        throw InvalidArgumentError("n_labeled must be at least 10");
    if (!(cfg.beta > 0.0 && cfg.beta <= 1.0))
        throw InvalidArgumentError("beta must lie in (0, 1]");
    if (cfg.unlabeled_cap == 0)
        throw InvalidArgumentError("unlabeled_cap must be positive");

    const std::size_t n_pos_lab =
        round_half_even(cfg.beta * static_cast<double>(cfg.n_labeled));
    const std::size_t n_neg_lab = cfg.n_labeled - n_pos_lab;

    std::vector<std::size_t> pos_idx;
    std::vector<std::size_t> neg_idx;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (pool[i].truth == TruthLabel::Positive)
            pos_idx.push_back(i);
        else
            neg_idx.push_back(i);
    }
    if (pos_idx.size() < n_pos_lab || neg_idx.size() < n_neg_lab)
        throw InsufficientPoolError("pool cannot supply the requested labeled split");
    if (pool.size() <= cfg.n_labeled)
        throw InsufficientPoolError("pool leaves no samples for the unlabeled set");

    std::mt19937_64 rng(cfg.seed);
    draw_without_replacement(pos_idx, n_pos_lab, rng);
    draw_without_replacement(neg_idx, n_neg_lab, rng);

    std::vector<bool> taken(pool.size(), false);
    for (std::size_t i = 0; i < n_pos_lab; ++i)
        taken[pos_idx[i]] = true;
    for (std::size_t i = 0; i < n_neg_lab; ++i)
        taken[neg_idx[i]] = true;

    std::vector<std::size_t> rest;
    rest.reserve(pool.size() - cfg.n_labeled);
    for (std::size_t i = 0; i < pool.size(); ++i)
        if (!taken[i])
            rest.push_back(i);
    if (rest.size() > cfg.unlabeled_cap) {
        draw_without_replacement(rest, cfg.unlabeled_cap, rng);
        rest.resize(cfg.unlabeled_cap);
    }

    CorruptionResult result;
    result.n_labeled = cfg.n_labeled;
    result.n_unlabeled = rest.size();
    result.beta_nominal = cfg.beta;
    result.samples.reserve(cfg.n_labeled + rest.size());
    for (std::size_t i = 0; i < n_pos_lab; ++i)
        result.samples.push_back(PuSample{pool[pos_idx[i]].score,
                                          PuLabel::LabeledPositive,
                                          pool[pos_idx[i]].truth});
    for (std::size_t i = 0; i < n_neg_lab; ++i)
        result.samples.push_back(PuSample{pool[neg_idx[i]].score,
                                          PuLabel::LabeledPositive,
                                          pool[neg_idx[i]].truth});
    std::size_t unlabeled_positives = 0;
    for (std::size_t i : rest) {
        if (pool[i].truth == TruthLabel::Positive)
            ++unlabeled_positives;
        result.samples.push_back(
            PuSample{pool[i].score, PuLabel::Unlabeled, pool[i].truth});
    }

    result.realized.alpha = static_cast<double>(unlabeled_positives) /
                            static_cast<double>(result.n_unlabeled);
    result.realized.beta =
        static_cast<double>(n_pos_lab) / static_cast<double>(cfg.n_labeled);
    result.realized.c =
        static_cast<double>(result.n_labeled) /
        static_cast<double>(result.n_labeled + result.n_unlabeled);

    // Ground truth over the union: relabel by truth and reuse the PU curve
    // machinery, which then computes plain positive-vs-negative curves.
    std::vector<PuSample> truth_view;
    truth_view.reserve(result.samples.size());
    for (const PuSample& s : result.samples)
        truth_view.push_back(PuSample{
            s.score,
            s.truth == TruthLabel::Positive ? PuLabel::LabeledPositive : PuLabel::Unlabeled,
            s.truth});
    const Dataset truth_data(std::move(truth_view));
    result.truth_roc = metrics::pu_roc(truth_data, mode);
    result.truth_pr = metrics::pu_pr(truth_data, mode);
    return result;
}

} // namespace pucorrect::simulate
