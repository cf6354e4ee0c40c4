#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pucorrect/types.hpp"

namespace pucorrect::simulate {

/// One univariate Gaussian mixture component.
struct ComponentSpec {
    double mean = 0.0;
    double stddev = 1.0;

    bool operator==(const ComponentSpec&) const = default;
};

/// Synthetic data spec: class-conditional score distributions plus the
/// positive fraction used when drawing the pool.
struct MixtureSpec {
    ComponentSpec pos_component{2.0, 1.0};
    ComponentSpec neg_component{0.0, 1.0};
    double true_alpha_target = 0.3;

    bool operator==(const MixtureSpec&) const = default;
};

/// Parameters of the PU corruption protocol.
struct ProtocolConfig {
    std::size_t n_labeled = 1000;
    double beta = 1.0;              ///< nominal fraction of true positives in the labeled set
    std::size_t unlabeled_cap = 10000;
    std::size_t repeats = 50;
    std::uint64_t seed = 0;
};

/// A fully-labeled pool entry: the exact mixture posterior as score, plus
/// the ground-truth label. Raw feature values are not retained.
struct PoolSample {
    double score = 0.0;
    TruthLabel truth = TruthLabel::Negative;
};

/// Deterministic child-stream derivation (splitmix64 of root and index).
/// Stream 0 seeds pool generation; stream r+1 seeds repeat r.
std::uint64_t derive_stream(std::uint64_t root, std::uint64_t index);

/// Exact posterior P(y = 1 | x) for the spec's two-component mixture.
double mixture_posterior(const MixtureSpec& spec, double x);

/// Draws n samples: truth ~ Bernoulli(true_alpha_target), x from the matching
/// component, score = mixture_posterior(spec, x). Deterministic given seed.
/// Throws InvalidArgumentError for n < 2 or non-positive stddev.
std::vector<PoolSample> generate_labeled_pool(const MixtureSpec& spec,
                                              std::size_t n,
                                              std::uint64_t seed);

/// Output of one corruption round: the PU dataset, the realized mixture
/// parameters, and ground-truth curves computed from the truth labels over
/// the emitted union (labeled + unlabeled).
struct CorruptionResult {
    std::vector<PuSample> samples;  ///< labeled rows first, then unlabeled
    std::size_t n_labeled = 0;
    std::size_t n_unlabeled = 0;
    double beta_nominal = 1.0;
    /// realized alpha = positive fraction of the emitted unlabeled set,
    /// realized beta = labeled-positive count / n_labeled, c = labeled fraction.
    MixtureParams realized;
    Curve truth_roc;
    Curve truth_pr;
};

/// Implements the corruption protocol: the labeled set takes
/// round-half-even(beta * n_labeled) true positives plus true negatives up to
/// n_labeled, sampled without replacement; every remaining pool sample is
/// declared unlabeled, then capped to unlabeled_cap by uniform subsampling.
/// Throws InsufficientPoolError when the pool cannot fill the labeled set,
/// InvalidArgumentError for out-of-range config.
CorruptionResult corrupt_to_pu(std::span<const PoolSample> pool,
                               const ProtocolConfig& cfg,
                               AreaMode mode = AreaMode::RankEquivalent);

} // namespace pucorrect::simulate
