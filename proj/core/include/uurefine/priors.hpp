#pragma once

#include <cstdint>
#include <vector>

#include "uurefine/types.hpp"

namespace uurefine {

/// Ids of the few samples whose true labels are revealed for prior
/// estimation (typical sizes: 50 or 100).
struct FewLabeledSubset {
    std::vector<SampleId> ids;

    std::size_t size() const noexcept { return ids.size(); }
};

/// Uniformly selects `size` distinct ids from the dataset.
FewLabeledSubset select_few_labeled(const Dataset& dataset, std::size_t size, std::uint64_t seed);

/// Exact priors from ground truth: theta_p/theta_n are the true-positive
/// fractions of each corpus side, pi_plus the positive fraction of the whole
/// dataset.
ClassPriors oracle_priors(const Dataset& dataset, const CorpusSplit& split,
                          double gap_floor = kDefaultPriorGapFloor);

struct PriorEstimationOptions {
    double clamp_epsilon = 1e-3;   // estimated thetas are clamped into [eps, 1-eps]
    bool pi_from_subset_fraction = false; // default derives pi via the mixture identity
    double gap_floor = kDefaultPriorGapFloor;
};

/// Conditional-frequency estimates from a few revealed labels:
/// theta_p = p(y=+1 | pseudo +1), theta_n = p(y=+1 | pseudo -1), both over
/// the subset and clamped. pi_plus comes from derive_pi_plus over the full
/// corpus sizes (or from the subset's raw positive fraction when configured).
/// Errors: subset entirely inside one pseudo-corpus (insufficient-coverage);
/// clamped theta_p <= theta_n (degenerate-priors).
ClassPriors estimate_priors(const Dataset& dataset, const PseudoLabeling& labeling,
                            const FewLabeledSubset& subset,
                            const PriorEstimationOptions& options = {});

/// Mixture identity pi = (theta_p n_pos + theta_n n_neg) / (n_pos + n_neg),
/// clamped into [eps, 1-eps].
double derive_pi_plus(double theta_p, double theta_n, std::size_t n_pos, std::size_t n_neg,
                      double clamp_epsilon = 1e-3);

} // namespace uurefine
