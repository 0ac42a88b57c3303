#include "uurefine/priors.hpp"

#include <algorithm>
#include <string>

#include "uurefine/errors.hpp"
#include "uurefine/metrics.hpp"
#include "uurefine/rng.hpp"

namespace uurefine {

namespace {

void require_truth(const Dataset& dataset, const char* what) {
    if (!dataset.has_truth()) {
        throw ValidationError("missing-truth", std::string(what) +
                                                   " requires ground-truth labels, but dataset \"" +
                                                   dataset.name() + "\" carries none");
    }
}

} // namespace

FewLabeledSubset select_few_labeled(const Dataset& dataset, std::size_t size, std::uint64_t seed) {
    if (size < 2) {
        throw ValidationError("config", "few-labeled subset size must be at least 2");
    }
    if (size > dataset.size()) {
        throw ValidationError("config", "few-labeled subset size " + std::to_string(size) +
                                            " exceeds dataset size " +
                                            std::to_string(dataset.size()));
    }
    require_truth(dataset, "few-labeled selection");
    std::vector<SampleId> ids = dataset.ids();
    Rng rng(seed);
    rng.shuffle(ids);
    ids.resize(size);
    return FewLabeledSubset{std::move(ids)};
}

ClassPriors oracle_priors(const Dataset& dataset, const CorpusSplit& split, double gap_floor) {
    require_truth(dataset, "oracle prior computation");
    MeasuredPriors m = measured_priors(dataset, split);
    std::uint64_t positives = 0;
    for (const Sample& s : dataset.samples()) positives += *s.true_label == 1;
    double pi = static_cast<double>(positives) / static_cast<double>(dataset.size());
    return ClassPriors(pi, m.theta_p, m.theta_n, gap_floor);
}

ClassPriors estimate_priors(const Dataset& dataset, const PseudoLabeling& labeling,
                            const FewLabeledSubset& subset,
                            const PriorEstimationOptions& options) {
    require_truth(dataset, "prior estimation");
    if (subset.ids.empty()) {
        throw ValidationError("insufficient-coverage", "few-labeled subset is empty");
    }

    std::size_t n1 = 0, n0 = 0;           // subset counts per pseudo-corpus
    std::size_t pos1 = 0, pos0 = 0;       // true positives within each
    std::size_t subset_pos = 0;
    for (SampleId id : subset.ids) {
        const Sample& s = dataset.by_id(id);
        auto it = labeling.labels.find(id);
        if (it == labeling.labels.end()) {
            throw ValidationError("coverage",
                                  "labeling is missing subset id " + std::to_string(id));
        }
        bool truly_pos = *s.true_label == 1;
        subset_pos += truly_pos;
        if (it->second == 1) {
            ++n1;
            pos1 += truly_pos;
        } else {
            ++n0;
            pos0 += truly_pos;
        }
    }
    if (n1 == 0 || n0 == 0) {
        throw ValidationError("insufficient-coverage",
                              std::string("few-labeled subset never hits the pseudo-") +
                                  (n1 == 0 ? "positive" : "negative") + " corpus");
    }

    const double eps = options.clamp_epsilon;
    auto clamp01 = [eps](double x) { return std::clamp(x, eps, 1.0 - eps); };
    double theta_p = clamp01(static_cast<double>(pos1) / static_cast<double>(n1));
    double theta_n = clamp01(static_cast<double>(pos0) / static_cast<double>(n0));
    if (theta_p <= theta_n) {
        throw ValidationError("degenerate-priors",
                              "estimated theta_p " + std::to_string(theta_p) +
                                  " does not exceed theta_n " + std::to_string(theta_n));
    }

    std::size_t n_pos = 0, n_neg = 0;
    for (const auto& [id, label] : labeling.labels) (label == 1 ? n_pos : n_neg) += 1;

    double pi = options.pi_from_subset_fraction
                    ? std::clamp(static_cast<double>(subset_pos) /
                                     static_cast<double>(subset.ids.size()),
                                 eps, 1.0 - eps)
                    : derive_pi_plus(theta_p, theta_n, n_pos, n_neg, eps);
    return ClassPriors(pi, theta_p, theta_n, options.gap_floor);
}

double derive_pi_plus(double theta_p, double theta_n, std::size_t n_pos, std::size_t n_neg,
                      double clamp_epsilon) {
    if (n_pos == 0 || n_neg == 0) {
        throw ValidationError("empty-corpus", "corpus sizes must be positive");
    }
    double np = static_cast<double>(n_pos);
    double nn = static_cast<double>(n_neg);
    double pi = (theta_p * np + theta_n * nn) / (np + nn);
    return std::clamp(pi, clamp_epsilon, 1.0 - clamp_epsilon);
}

} // namespace uurefine
