#include "uurefine/metrics.hpp"

#include <string>

#include "uurefine/errors.hpp"

namespace uurefine {

namespace {

int truth_of(const Dataset& dataset, SampleId id) {
    const Sample& s = dataset.by_id(id);
    if (!s.true_label.has_value()) {
        throw ValidationError("missing-truth",
                              "sample " + std::to_string(id) + " has no ground-truth label");
    }
    return *s.true_label;
}

} // namespace

Confusion confusion(const Dataset& dataset, const PseudoLabeling& labeling) {
    if (!dataset.has_truth()) {
        throw ValidationError("missing-truth",
                              "dataset \"" + dataset.name() + "\" carries no ground truth");
    }
    Confusion c;
    for (const Sample& s : dataset.samples()) {
        auto it = labeling.labels.find(s.id);
        if (it == labeling.labels.end()) {
            throw ValidationError("coverage",
                                  "labeling is missing id " + std::to_string(s.id));
        }
        bool predicted_pos = it->second == 1;
        bool actually_pos = *s.true_label == 1;
        if (predicted_pos) {
            actually_pos ? ++c.tp : ++c.fp;
        } else {
            actually_pos ? ++c.fn : ++c.tn;
        }
    }
    return c;
}

double accuracy(const Confusion& c) {
    if (c.total() == 0) {
        throw ValidationError("empty-corpus", "cannot compute accuracy over zero samples");
    }
    return static_cast<double>(c.tp + c.tn) / static_cast<double>(c.total());
}

double accuracy(const Dataset& dataset, const PseudoLabeling& labeling) {
    return accuracy(confusion(dataset, labeling));
}

MeasuredPriors measured_priors(const Dataset& dataset, const CorpusSplit& split) {
    if (split.positive_ids.empty() || split.negative_ids.empty()) {
        const char* side = split.positive_ids.empty() ? "positive" : "negative";
        throw ValidationError("empty-corpus",
                              std::string("pseudo-") + side + " corpus is empty");
    }
    std::uint64_t pos_in_p = 0;
    std::uint64_t pos_in_n = 0;
    for (SampleId id : split.positive_ids) pos_in_p += truth_of(dataset, id) == 1;
    for (SampleId id : split.negative_ids) pos_in_n += truth_of(dataset, id) == 1;
    MeasuredPriors m;
    m.theta_p = static_cast<double>(pos_in_p) / static_cast<double>(split.positive_ids.size());
    m.theta_n = static_cast<double>(pos_in_n) / static_cast<double>(split.negative_ids.size());
    return m;
}

} // namespace uurefine
