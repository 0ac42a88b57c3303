#include "uurefine/numeric.hpp"

#include <cstddef>

namespace uurefine {

namespace {
constexpr std::size_t kBlock = 32;
}

double pairwise_sum(std::span<const double> xs) {
    if (xs.size() <= kBlock) {
        double s = 0.0;
        for (double x : xs) s += x;
        return s;
    }
    std::size_t half = xs.size() / 2;
    return pairwise_sum(xs.subspan(0, half)) + pairwise_sum(xs.subspan(half));
}

double mean(std::span<const double> xs) {
    return pairwise_sum(xs) / static_cast<double>(xs.size());
}

} // namespace uurefine
