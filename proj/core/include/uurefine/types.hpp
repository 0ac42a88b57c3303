#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace uurefine {

using SampleId = std::uint64_t;

inline constexpr double kDefaultPriorGapFloor = 1e-3;

/// One observation: a feature vector plus an optional hidden ground-truth
/// label (+1/-1). Ground truth is consulted only by evaluation and
/// oracle-prior code paths.
struct Sample {
    SampleId id = 0;
    std::vector<double> features;
    std::optional<int> true_label;
};

/// Immutable collection of samples with a fixed feature dimension. Either
/// every sample carries a true label or none does.
class Dataset {
public:
    Dataset(std::size_t dim, std::vector<Sample> samples, std::string name);

    std::size_t dim() const noexcept { return dim_; }
    const std::string& name() const noexcept { return name_; }
    std::size_t size() const noexcept { return samples_.size(); }
    bool empty() const noexcept { return samples_.empty(); }
    bool has_truth() const noexcept { return has_truth_; }

    const std::vector<Sample>& samples() const noexcept { return samples_; }
    const Sample& sample(std::size_t index) const { return samples_[index]; }

    bool contains(SampleId id) const { return index_.count(id) != 0; }

    /// Sample with the given id; throws ValidationError if absent.
    const Sample& by_id(SampleId id) const;

    /// Ids in sample order.
    std::vector<SampleId> ids() const;

private:
    std::size_t dim_;
    std::string name_;
    std::vector<Sample> samples_;
    std::unordered_map<SampleId, std::size_t> index_;
    bool has_truth_ = false;
};

/// Validating factory; order of samples is preserved.
Dataset new_dataset(std::size_t dim, std::vector<Sample> samples, std::string name);

/// New dataset holding the samples with the given ids, in the given order.
Dataset subset_dataset(const Dataset& dataset, std::span<const SampleId> ids, std::string name);

/// A +1/-1 label for every sample of a dataset at refinement step `iteration`.
struct PseudoLabeling {
    int iteration = 0;
    std::map<SampleId, int> labels;
};

/// Validates coverage and label values against `dataset` and returns the
/// labeling. Errors: unknown id, missing id, label outside {+1, -1}.
PseudoLabeling labeling_from_map(const Dataset& dataset, int iteration,
                                 const std::map<SampleId, int>& labels);

/// The dataset partition induced by a labeling: ids currently labeled +1 and
/// ids currently labeled -1. Both sides are non-empty and sorted ascending.
struct CorpusSplit {
    std::vector<SampleId> positive_ids;
    std::vector<SampleId> negative_ids;
};

/// Splits by label sign. Throws a degenerate-split error naming the empty
/// side if every label agrees.
CorpusSplit split_from_labeling(const Dataset& dataset, const PseudoLabeling& labeling);

/// Inverse of split_from_labeling.
PseudoLabeling labeling_from_split(const CorpusSplit& split, int iteration);

/// The three prior quantities driving the unlabeled-unlabeled risk: the true
/// positive-class prior pi_plus and the positive fractions theta_p/theta_n of
/// the pseudo-positive/pseudo-negative corpora. Validated on construction;
/// theta_p must exceed theta_n by at least `gap_floor`.
class ClassPriors {
public:
    ClassPriors(double pi_plus, double theta_p, double theta_n,
                double gap_floor = kDefaultPriorGapFloor);

    double pi_plus() const noexcept { return pi_plus_; }
    double theta_p() const noexcept { return theta_p_; }
    double theta_n() const noexcept { return theta_n_; }
    double gap_floor() const noexcept { return gap_floor_; }

private:
    double pi_plus_;
    double theta_p_;
    double theta_n_;
    double gap_floor_;
};

/// Closed-form weights of the unlabeled-unlabeled risk rewrite. All four are
/// finite and non-negative, and satisfy a - c = pi_plus, d - b = 1 - pi_plus.
struct UUCoefficients {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
};

enum class LossKind { logistic, sigmoid };

std::string_view to_string(LossKind kind);
LossKind loss_kind_from_string(std::string_view text);

} // namespace uurefine
