#pragma once

#include <cstdint>

#include "uurefine/types.hpp"

namespace uurefine {

struct Confusion {
    std::uint64_t tp = 0;
    std::uint64_t fp = 0;
    std::uint64_t tn = 0;
    std::uint64_t fn = 0;

    std::uint64_t total() const noexcept { return tp + fp + tn + fn; }
};

/// Confusion counts of a labeling against the dataset's ground truth.
/// Errors if truth is absent or the labeling misses an id.
Confusion confusion(const Dataset& dataset, const PseudoLabeling& labeling);

/// (tp + tn) / total.
double accuracy(const Confusion& c);

double accuracy(const Dataset& dataset, const PseudoLabeling& labeling);

/// True-positive fractions of each corpus side, measured against ground
/// truth. Unlike the oracle-prior path this performs no validity checks, so
/// degenerate values are observable rather than errors.
struct MeasuredPriors {
    double theta_p = 0.0;
    double theta_n = 0.0;
};

MeasuredPriors measured_priors(const Dataset& dataset, const CorpusSplit& split);

} // namespace uurefine
