#pragma once

#include <span>

namespace uurefine {

/// Pairwise (cascade) summation. Deterministic for a given element order and
/// substantially more accurate than sequential accumulation on long inputs.
double pairwise_sum(std::span<const double> xs);

/// Arithmetic mean via pairwise_sum. Requires a non-empty input.
double mean(std::span<const double> xs);

} // namespace uurefine
