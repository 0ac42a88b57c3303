#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "uurefine/risk.hpp"
#include "uurefine/types.hpp"

namespace uurefine {

/// Real-valued scorer whose sign is the predicted label. Either a pure affine
/// map or a single tanh hidden layer.
///
/// Parameter layout:
///   affine:  [w_0 .. w_{d-1}, bias]                           (d + 1 values)
///   hidden h:[W row-major (h*d), input bias (h), v (h), bias] (h*d + 2h + 1)
struct LinearScorer {
    std::size_t dim = 0;
    std::optional<std::size_t> hidden;
    std::vector<double> weights;

    std::size_t parameter_count() const noexcept {
        return hidden ? *hidden * dim + 2 * *hidden + 1 : dim + 1;
    }
};

/// Weights drawn uniformly from (-1/sqrt(fan_in), 1/sqrt(fan_in)) per layer,
/// biases zero; fully determined by the seed.
LinearScorer init_scorer(std::size_t dim, std::optional<std::size_t> hidden, std::uint64_t seed);

double score(const LinearScorer& scorer, std::span<const double> features);

/// Scores for the samples with the given ids, in id order given.
std::vector<double> score_ids(const LinearScorer& scorer, const Dataset& dataset,
                              std::span<const SampleId> ids);

struct TrainConfig {
    double learning_rate = 0.05; // 0.01 suits the hidden-layer variant
    std::size_t epochs = 50;
    std::size_t batch_size = 64; // total across both corpora per step
    LossKind loss_kind = LossKind::logistic;
    RobustConfig robust{};
    Estimator estimator = Estimator::robust_uu;
    std::uint64_t seed = 0;
    double weight_decay = 0.0;
    double val_fraction = 0.125; // carved per corpus from the pseudo-labeled data
    std::optional<std::size_t> hidden; // scorer architecture
};

/// Epoch traces and the selected snapshot. Index 0 of both traces is the
/// freshly initialized scorer before any update; best_epoch points at the
/// minimum of val_objective_per_epoch (earliest on ties).
struct TrainReport {
    std::size_t best_epoch = 0;
    std::vector<double> train_objective_per_epoch;
    std::vector<double> val_objective_per_epoch;
    LinearScorer final_scorer;
};

/// Minibatch gradient descent on the selected estimator's objective over the
/// pseudo-labeled corpora. Each corpus is first partitioned into train and
/// validation portions by val_fraction; minibatches draw from both corpora in
/// proportion to their sizes, without replacement within an epoch. Returns
/// the scorer snapshot with the lowest full-batch validation objective.
TrainReport train(const Dataset& dataset, const CorpusSplit& split, const ClassPriors& priors,
                  const TrainConfig& cfg);

/// sign(score) over the whole dataset; a score of exactly 0 maps to +1.
PseudoLabeling relabel(const LinearScorer& scorer, const Dataset& dataset, int iteration);

} // namespace uurefine
