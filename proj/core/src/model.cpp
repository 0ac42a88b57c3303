#include "uurefine/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "uurefine/errors.hpp"
#include "uurefine/rng.hpp"

namespace uurefine {

namespace {

// Fixed sub-seed streams of TrainConfig::seed.
constexpr std::uint64_t kInitStream = 0xA1;
constexpr std::uint64_t kPartitionStream = 0xA2;
constexpr std::uint64_t kEpochStream = 0xA3;

void check_dim(const LinearScorer& scorer, std::size_t dim) {
    if (scorer.dim != dim) {
        throw ValidationError("dimension-mismatch",
                              "scorer expects dimension " + std::to_string(scorer.dim) +
                                  ", got " + std::to_string(dim));
    }
}

void validate_train_config(const TrainConfig& cfg) {
    if (!(cfg.learning_rate > 0.0) || !std::isfinite(cfg.learning_rate)) {
        throw ValidationError("config", "learning_rate must be positive and finite");
    }
    if (cfg.epochs == 0) {
        throw ValidationError("config", "epochs must be at least 1");
    }
    if (cfg.batch_size < 2) {
        throw ValidationError("config", "batch_size must be at least 2 so both corpora are drawn");
    }
    if (!(cfg.val_fraction > 0.0 && cfg.val_fraction <= 0.5)) {
        throw ValidationError("config", "val_fraction must lie in (0, 0.5]");
    }
    if (cfg.weight_decay < 0.0 || !std::isfinite(cfg.weight_decay)) {
        throw ValidationError("config", "weight_decay must be non-negative and finite");
    }
    if (cfg.hidden && *cfg.hidden == 0) {
        throw ValidationError("config", "hidden width must be positive when set");
    }
    if (cfg.estimator == Estimator::robust_uu) {
        validate(cfg.robust);
    }
}

// Feature rows of the given ids, in order.
std::vector<const std::vector<double>*> feature_rows(const Dataset& dataset,
                                                     std::span<const SampleId> ids) {
    std::vector<const std::vector<double>*> rows;
    rows.reserve(ids.size());
    for (SampleId id : ids) rows.push_back(&dataset.by_id(id).features);
    return rows;
}

// Splits one corpus into validation (first) and train (second) id lists.
std::pair<std::vector<SampleId>, std::vector<SampleId>> carve_validation(
    std::vector<SampleId> ids, double val_fraction, Rng& rng) {
    rng.shuffle(ids);
    std::size_t n = ids.size();
    std::size_t n_val = static_cast<std::size_t>(std::floor(val_fraction * static_cast<double>(n)));
    n_val = std::clamp<std::size_t>(n_val, 1, n - 1);
    std::vector<SampleId> val(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(n_val));
    std::vector<SampleId> tr(ids.begin() + static_cast<std::ptrdiff_t>(n_val), ids.end());
    std::sort(val.begin(), val.end());
    std::sort(tr.begin(), tr.end());
    return {std::move(val), std::move(tr)};
}

class ScorerGradient {
public:
    explicit ScorerGradient(const LinearScorer& scorer)
        : grad_(scorer.weights.size(), 0.0) {}

    void reset() { std::fill(grad_.begin(), grad_.end(), 0.0); }

    // Adds upstream * d score / d params for one sample. `tanh_cache` holds
    // the hidden activations from the forward pass (unused for affine).
    void accumulate(const LinearScorer& scorer, std::span<const double> x, double upstream,
                    std::span<const double> tanh_cache) {
        const std::size_t d = scorer.dim;
        if (!scorer.hidden) {
            for (std::size_t j = 0; j < d; ++j) grad_[j] += upstream * x[j];
            grad_[d] += upstream;
            return;
        }
        const std::size_t h = *scorer.hidden;
        const double* v = scorer.weights.data() + h * d + h;
        for (std::size_t j = 0; j < h; ++j) {
            double t = tanh_cache[j];
            grad_[h * d + h + j] += upstream * t;                   // v
            double gz = upstream * v[j] * (1.0 - t * t);
            for (std::size_t k = 0; k < d; ++k) grad_[j * d + k] += gz * x[k]; // W
            grad_[h * d + j] += gz;                                 // input bias
        }
        grad_[h * d + 2 * h] += upstream; // output bias
    }

    void apply(LinearScorer& scorer, double learning_rate, double weight_decay) const {
        for (std::size_t i = 0; i < grad_.size(); ++i) {
            scorer.weights[i] -= learning_rate * (grad_[i] + weight_decay * scorer.weights[i]);
        }
    }

private:
    std::vector<double> grad_;
};

// Forward pass caching hidden activations for the backward pass.
double score_cached(const LinearScorer& scorer, std::span<const double> x,
                    std::vector<double>& tanh_cache) {
    if (!scorer.hidden) {
        double s = scorer.weights[scorer.dim];
        for (std::size_t j = 0; j < scorer.dim; ++j) s += scorer.weights[j] * x[j];
        return s;
    }
    const std::size_t d = scorer.dim;
    const std::size_t h = *scorer.hidden;
    const double* w = scorer.weights.data();
    tanh_cache.resize(h);
    double s = w[h * d + 2 * h];
    for (std::size_t j = 0; j < h; ++j) {
        double z = w[h * d + j];
        for (std::size_t k = 0; k < d; ++k) z += w[j * d + k] * x[k];
        double t = std::tanh(z);
        tanh_cache[j] = t;
        s += w[h * d + h + j] * t;
    }
    return s;
}

} // namespace

LinearScorer init_scorer(std::size_t dim, std::optional<std::size_t> hidden, std::uint64_t seed) {
    if (dim == 0) {
        throw ValidationError("config", "scorer dimension must be positive");
    }
    if (hidden && *hidden == 0) {
        throw ValidationError("config", "hidden width must be positive when set");
    }
    LinearScorer scorer;
    scorer.dim = dim;
    scorer.hidden = hidden;
    scorer.weights.assign(scorer.parameter_count(), 0.0);
    Rng rng(seed);
    auto uniform_sym = [&rng](double s) { return s * (2.0 * rng.next_unit() - 1.0); };
    if (!hidden) {
        double s = 1.0 / std::sqrt(static_cast<double>(dim));
        for (std::size_t j = 0; j < dim; ++j) scorer.weights[j] = uniform_sym(s);
        return scorer; // bias stays 0
    }
    const std::size_t h = *hidden;
    double s_in = 1.0 / std::sqrt(static_cast<double>(dim));
    for (std::size_t i = 0; i < h * dim; ++i) scorer.weights[i] = uniform_sym(s_in);
    double s_out = 1.0 / std::sqrt(static_cast<double>(h));
    for (std::size_t j = 0; j < h; ++j) scorer.weights[h * dim + h + j] = uniform_sym(s_out);
    return scorer; // both biases stay 0
}

double score(const LinearScorer& scorer, std::span<const double> features) {
    if (features.size() != scorer.dim) {
        throw ValidationError("dimension-mismatch",
                              "feature vector has length " + std::to_string(features.size()) +
                                  ", scorer expects " + std::to_string(scorer.dim));
    }
    std::vector<double> scratch;
    return score_cached(scorer, features, scratch);
}

std::vector<double> score_ids(const LinearScorer& scorer, const Dataset& dataset,
                              std::span<const SampleId> ids) {
    check_dim(scorer, dataset.dim());
    std::vector<double> out;
    out.reserve(ids.size());
    std::vector<double> scratch;
    for (SampleId id : ids) {
        out.push_back(score_cached(scorer, dataset.by_id(id).features, scratch));
    }
    return out;
}

TrainReport train(const Dataset& dataset, const CorpusSplit& split, const ClassPriors& priors,
                  const TrainConfig& cfg) {
    validate_train_config(cfg);
    if (split.positive_ids.size() < 2 || split.negative_ids.size() < 2) {
        throw ValidationError("degenerate-split",
                              "both corpora need at least 2 samples to carve a validation "
                              "portion (got " +
                                  std::to_string(split.positive_ids.size()) + " / " +
                                  std::to_string(split.negative_ids.size()) + ")");
    }
    const UUCoefficients coeffs = compute_coefficients(priors);

    Rng partition_rng(derive_seed(cfg.seed, kPartitionStream));
    auto [val_p, train_p] = carve_validation(split.positive_ids, cfg.val_fraction, partition_rng);
    auto [val_n, train_n] = carve_validation(split.negative_ids, cfg.val_fraction, partition_rng);

    auto rows_train_p = feature_rows(dataset, train_p);
    auto rows_train_n = feature_rows(dataset, train_n);

    LinearScorer scorer = init_scorer(dataset.dim(), cfg.hidden, derive_seed(cfg.seed, kInitStream));

    // Proportional batch composition; both corpora appear in every step.
    const std::size_t np = train_p.size();
    const std::size_t nn = train_n.size();
    std::size_t n_p_step = static_cast<std::size_t>(
        std::ceil(static_cast<double>(cfg.batch_size) * static_cast<double>(np) /
                  static_cast<double>(np + nn)));
    n_p_step = std::clamp<std::size_t>(n_p_step, 1, np);
    std::size_t n_n_step = cfg.batch_size > n_p_step ? cfg.batch_size - n_p_step : 1;
    n_n_step = std::clamp<std::size_t>(n_n_step, 1, nn);
    const std::size_t steps = std::max<std::size_t>(1, std::min(np / n_p_step, nn / n_n_step));

    auto full_objective = [&](std::span<const SampleId> ids_p, std::span<const SampleId> ids_n) {
        std::vector<double> sp = score_ids(scorer, dataset, ids_p);
        std::vector<double> sn = score_ids(scorer, dataset, ids_n);
        return objective_value(cfg.estimator, partial_risks(sp, sn, cfg.loss_kind), priors,
                               coeffs, cfg.robust);
    };

    TrainReport report;
    report.train_objective_per_epoch.reserve(cfg.epochs + 1);
    report.val_objective_per_epoch.reserve(cfg.epochs + 1);
    report.train_objective_per_epoch.push_back(full_objective(train_p, train_n));
    report.val_objective_per_epoch.push_back(full_objective(val_p, val_n));
    report.best_epoch = 0;
    report.final_scorer = scorer;
    double best_val = report.val_objective_per_epoch[0];
    if (!std::isfinite(best_val) || !std::isfinite(report.train_objective_per_epoch[0])) {
        throw RuntimeFailure("divergence", "non-finite objective at epoch 0");
    }

    Rng epoch_rng(derive_seed(cfg.seed, kEpochStream));
    ScorerGradient grad(scorer);
    std::vector<std::size_t> order_p(np), order_n(nn);
    for (std::size_t i = 0; i < np; ++i) order_p[i] = i;
    for (std::size_t i = 0; i < nn; ++i) order_n[i] = i;
    std::vector<double> scores_p(n_p_step), scores_n(n_n_step);
    std::vector<std::vector<double>> tanh_p(n_p_step), tanh_n(n_n_step);

    for (std::size_t epoch = 1; epoch <= cfg.epochs; ++epoch) {
        epoch_rng.shuffle(order_p);
        epoch_rng.shuffle(order_n);
        for (std::size_t step = 0; step < steps; ++step) {
            const std::size_t base_p = step * n_p_step;
            const std::size_t base_n = step * n_n_step;
            for (std::size_t i = 0; i < n_p_step; ++i) {
                scores_p[i] = score_cached(scorer, *rows_train_p[order_p[base_p + i]], tanh_p[i]);
            }
            for (std::size_t i = 0; i < n_n_step; ++i) {
                scores_n[i] = score_cached(scorer, *rows_train_n[order_n[base_n + i]], tanh_n[i]);
            }
            ScoreGradients sg = objective_score_grad(cfg.estimator, scores_p, scores_n,
                                                     cfg.loss_kind, priors, coeffs, cfg.robust);
            grad.reset();
            for (std::size_t i = 0; i < n_p_step; ++i) {
                grad.accumulate(scorer, *rows_train_p[order_p[base_p + i]], sg.positive[i],
                                tanh_p[i]);
            }
            for (std::size_t i = 0; i < n_n_step; ++i) {
                grad.accumulate(scorer, *rows_train_n[order_n[base_n + i]], sg.negative[i],
                                tanh_n[i]);
            }
            grad.apply(scorer, cfg.learning_rate, cfg.weight_decay);
        }

        double train_obj = full_objective(train_p, train_n);
        double val_obj = full_objective(val_p, val_n);
        if (!std::isfinite(train_obj) || !std::isfinite(val_obj)) {
            throw RuntimeFailure("divergence",
                                 "non-finite objective at epoch " + std::to_string(epoch));
        }
        report.train_objective_per_epoch.push_back(train_obj);
        report.val_objective_per_epoch.push_back(val_obj);
        if (val_obj < best_val) {
            best_val = val_obj;
            report.best_epoch = epoch;
            report.final_scorer = scorer;
        }
    }
    return report;
}

PseudoLabeling relabel(const LinearScorer& scorer, const Dataset& dataset, int iteration) {
    check_dim(scorer, dataset.dim());
    PseudoLabeling labeling;
    labeling.iteration = iteration;
    std::vector<double> scratch;
    for (const Sample& s : dataset.samples()) {
        double v = score_cached(scorer, s.features, scratch);
        labeling.labels[s.id] = v < 0.0 ? -1 : 1;
    }
    return labeling;
}

} // namespace uurefine
