#pragma once

#include <cstdint>
#include <vector>

#include "dagtopo/histogram.hpp"

namespace dagtopo {

// One probe of the power-law tail estimator:
// alpha = 1 + n / sum_{d >= d_min} count(d) * ln(d / d_min),
// n = tail sample count. alpha is NaN when all tail mass sits at d_min.
struct AlphaEntry {
    std::uint64_t d_min = 1;
    double alpha = 0.0;
    std::uint64_t n_tail = 0;

    bool defined() const { return alpha == alpha; }  // not NaN
};

struct AlphaSweep {
    std::vector<AlphaEntry> entries;
};

enum class SweepGrid {
    All,  // every distinct key >= 1
    Log,  // distinct keys nearest to 10^(k/8)
};

// Keys equal to 0 are excluded from the tail. Throws DomainError if the
// histogram has no key >= 1.
AlphaSweep alpha_sweep(const Histogram& h, SweepGrid grid);

// log10(max key / min positive key). Throws DomainError without a positive key.
double decade_amplitude(const Histogram& h);

struct KsResult {
    double statistic = 0.0;        // in [0, 1]
    std::uint64_t support_size = 0;  // size of the union support
};

// Max absolute difference of the weight-normalized cumulative distributions
// over the union support. Throws DomainError on zero-total-weight input.
KsResult ks_distance(const WeightedDistribution& a, const WeightedDistribution& b);

}  // namespace dagtopo
