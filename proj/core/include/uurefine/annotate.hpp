#pragma once

#include <cstdint>
#include <map>

#include "uurefine/types.hpp"

namespace uurefine {

/// Stochastic stand-in for an external annotator with class-conditional
/// accuracy: a true positive receives +1 with probability acc_pos, a true
/// negative receives -1 with probability acc_neg.
struct AnnotatorSpec {
    double acc_pos = 0.7;
    double acc_neg = 0.7;
    std::uint64_t seed = 0;
};

/// Iteration-0 labeling from simulated annotation. Randomness is a pure hash
/// of (seed, sample id), so a sample's label does not depend on dataset order
/// or on which other samples are present.
PseudoLabeling simulate_annotator(const Dataset& dataset, const AnnotatorSpec& spec);

/// Iteration-0 labeling from an externally produced id -> {+1,-1} map.
/// Errors: missing or unknown ids, values outside {+1,-1}.
PseudoLabeling import_labeling(const Dataset& dataset, const std::map<SampleId, int>& labels);

} // namespace uurefine
