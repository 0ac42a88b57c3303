#include "uurefine/types.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "uurefine/errors.hpp"

namespace uurefine {

Dataset::Dataset(std::size_t dim, std::vector<Sample> samples, std::string name)
    : dim_(dim), name_(std::move(name)), samples_(std::move(samples)) {
    if (dim_ == 0) {
        throw ValidationError("dimension-mismatch", "dataset dimension must be positive");
    }
    index_.reserve(samples_.size());
    std::size_t with_truth = 0;
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        const Sample& s = samples_[i];
        if (!index_.emplace(s.id, i).second) {
            throw ValidationError("duplicate-id",
                                  "duplicate sample id " + std::to_string(s.id));
        }
        if (s.features.size() != dim_) {
            throw ValidationError(
                "dimension-mismatch",
                "sample " + std::to_string(s.id) + " has " +
                    std::to_string(s.features.size()) + " features, expected " +
                    std::to_string(dim_));
        }
        for (double f : s.features) {
            if (!std::isfinite(f)) {
                throw ValidationError("non-finite-feature",
                                      "sample " + std::to_string(s.id) +
                                          " has a non-finite feature value");
            }
        }
        if (s.true_label.has_value()) {
            if (*s.true_label != 1 && *s.true_label != -1) {
                throw ValidationError("invalid-label",
                                      "sample " + std::to_string(s.id) +
                                          " true label must be +1 or -1");
            }
            ++with_truth;
        }
    }
    if (with_truth != 0 && with_truth != samples_.size()) {
        throw ValidationError("mixed-truth",
                              "either every sample carries a true label or none does (" +
                                  std::to_string(with_truth) + " of " +
                                  std::to_string(samples_.size()) + " labeled)");
    }
    has_truth_ = !samples_.empty() && with_truth == samples_.size();
}

const Sample& Dataset::by_id(SampleId id) const {
    auto it = index_.find(id);
    if (it == index_.end()) {
        throw ValidationError("unknown-id", "no sample with id " + std::to_string(id));
    }
    return samples_[it->second];
}

std::vector<SampleId> Dataset::ids() const {
    std::vector<SampleId> out;
    out.reserve(samples_.size());
    for (const Sample& s : samples_) out.push_back(s.id);
    return out;
}

Dataset new_dataset(std::size_t dim, std::vector<Sample> samples, std::string name) {
    return Dataset(dim, std::move(samples), std::move(name));
}

Dataset subset_dataset(const Dataset& dataset, std::span<const SampleId> ids, std::string name) {
    std::vector<Sample> picked;
    picked.reserve(ids.size());
    for (SampleId id : ids) picked.push_back(dataset.by_id(id));
    return Dataset(dataset.dim(), std::move(picked), std::move(name));
}

PseudoLabeling labeling_from_map(const Dataset& dataset, int iteration,
                                 const std::map<SampleId, int>& labels) {
    if (iteration < 0) {
        throw ValidationError("invalid-iteration", "iteration must be non-negative");
    }
    for (const auto& [id, label] : labels) {
        if (label != 1 && label != -1) {
            throw ValidationError("invalid-label", "label for id " + std::to_string(id) +
                                                       " must be +1 or -1, got " +
                                                       std::to_string(label));
        }
        if (!dataset.contains(id)) {
            throw ValidationError("unknown-id",
                                  "labeling references unknown id " + std::to_string(id));
        }
    }
    if (labels.size() != dataset.size()) {
        for (const Sample& s : dataset.samples()) {
            if (labels.count(s.id) == 0) {
                throw ValidationError("coverage",
                                      "labeling is missing id " + std::to_string(s.id));
            }
        }
    }
    return PseudoLabeling{iteration, labels};
}

CorpusSplit split_from_labeling(const Dataset& dataset, const PseudoLabeling& labeling) {
    CorpusSplit split;
    for (const Sample& s : dataset.samples()) {
        auto it = labeling.labels.find(s.id);
        if (it == labeling.labels.end()) {
            throw ValidationError("coverage",
                                  "labeling is missing id " + std::to_string(s.id));
        }
        (it->second == 1 ? split.positive_ids : split.negative_ids).push_back(s.id);
    }
    if (split.positive_ids.empty() || split.negative_ids.empty()) {
        const char* side = split.positive_ids.empty() ? "positive" : "negative";
        throw ValidationError("degenerate-split",
                              std::string("pseudo-") + side + " corpus is empty");
    }
    std::sort(split.positive_ids.begin(), split.positive_ids.end());
    std::sort(split.negative_ids.begin(), split.negative_ids.end());
    return split;
}

PseudoLabeling labeling_from_split(const CorpusSplit& split, int iteration) {
    PseudoLabeling labeling;
    labeling.iteration = iteration;
    for (SampleId id : split.positive_ids) labeling.labels[id] = 1;
    for (SampleId id : split.negative_ids) {
        if (!labeling.labels.emplace(id, -1).second) {
            throw ValidationError("duplicate-id",
                                  "id " + std::to_string(id) + " appears on both sides");
        }
    }
    return labeling;
}

ClassPriors::ClassPriors(double pi_plus, double theta_p, double theta_n, double gap_floor)
    : pi_plus_(pi_plus), theta_p_(theta_p), theta_n_(theta_n), gap_floor_(gap_floor) {
    if (!std::isfinite(pi_plus_) || !std::isfinite(theta_p_) || !std::isfinite(theta_n_)) {
        throw ValidationError("degenerate-priors", "priors must be finite");
    }
    if (!(pi_plus_ > 0.0 && pi_plus_ < 1.0)) {
        throw ValidationError("degenerate-priors",
                              "pi_plus must lie strictly inside (0, 1), got " +
                                  std::to_string(pi_plus_));
    }
    if (theta_p_ < 0.0 || theta_p_ > 1.0 || theta_n_ < 0.0 || theta_n_ > 1.0) {
        throw ValidationError("degenerate-priors", "theta_p and theta_n must lie in [0, 1]");
    }
    if (!(gap_floor_ > 0.0)) {
        throw ValidationError("degenerate-priors", "prior gap floor must be positive");
    }
    if (!(theta_p_ - theta_n_ >= gap_floor_)) {
        throw ValidationError("degenerate-priors",
                              "theta_p - theta_n = " + std::to_string(theta_p_ - theta_n_) +
                                  " is below the gap floor " + std::to_string(gap_floor_) +
                                  " (annotator no better than chance?)");
    }
}

std::string_view to_string(LossKind kind) {
    switch (kind) {
        case LossKind::logistic: return "logistic";
        case LossKind::sigmoid: return "sigmoid";
    }
    return "logistic";
}

LossKind loss_kind_from_string(std::string_view text) {
    if (text == "logistic") return LossKind::logistic;
    if (text == "sigmoid") return LossKind::sigmoid;
    throw ValidationError("config", "unknown loss kind \"" + std::string(text) +
                                        "\" (expected logistic or sigmoid)");
}

} // namespace uurefine
