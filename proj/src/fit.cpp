#include "dagtopo/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dagtopo/errors.hpp"

namespace dagtopo {

namespace {

// Positive keys with counts, ascending.
std::vector<std::pair<std::uint64_t, std::uint64_t>> positive_keys(
    const Histogram& h) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> keys;
    for (const auto& [v, c] : h.counts())
        if (v >= 1) keys.emplace_back(v, c);
    return keys;
}

}  // namespace

AlphaSweep alpha_sweep(const Histogram& h, SweepGrid grid) {
    auto keys = positive_keys(h);
    if (keys.empty())
        throw DomainError("alpha_sweep: histogram has no key >= 1");

    const std::size_t k = keys.size();
    // Suffix sums of counts and count*ln(d) let every probe evaluate in O(1):
    // sum_{d >= dmin} c_d ln(d/dmin) = suffix_clnd - n * ln(dmin).
    std::vector<std::uint64_t> suffix_n(k + 1, 0);
    std::vector<double> suffix_clnd(k + 1, 0.0);
    for (std::size_t i = k; i-- > 0;) {
        suffix_n[i] = suffix_n[i + 1] + keys[i].second;
        suffix_clnd[i] = suffix_clnd[i + 1] +
                         static_cast<double>(keys[i].second) *
                             std::log(static_cast<double>(keys[i].first));
    }

    std::vector<std::size_t> probe_indices;
    if (grid == SweepGrid::All) {
        probe_indices.resize(k);
        for (std::size_t i = 0; i < k; ++i) probe_indices[i] = i;
    } else {
        // Distinct keys nearest to 10^(j/8), deduplicated, up to max key.
        const double max_key = static_cast<double>(keys.back().first);
        for (int j = 0;; ++j) {
            double target = std::pow(10.0, j / 8.0);
            if (target > max_key) break;
            std::size_t best = 0;
            double best_gap = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < k; ++i) {
                double gap = std::abs(static_cast<double>(keys[i].first) - target);
                if (gap < best_gap) {
                    best_gap = gap;
                    best = i;
                }
            }
            if (probe_indices.empty() || probe_indices.back() != best)
                probe_indices.push_back(best);
        }
    }

    AlphaSweep sweep;
    sweep.entries.reserve(probe_indices.size());
    for (std::size_t i : probe_indices) {
        AlphaEntry e;
        e.d_min = keys[i].first;
        e.n_tail = suffix_n[i];
        double n = static_cast<double>(e.n_tail);
        double denom = suffix_clnd[i] - n * std::log(static_cast<double>(e.d_min));
        e.alpha = denom > 0.0 ? 1.0 + n / denom
                              : std::numeric_limits<double>::quiet_NaN();
        sweep.entries.push_back(e);
    }
    return sweep;
}

double decade_amplitude(const Histogram& h) {
    auto keys = positive_keys(h);
    if (keys.empty())
        throw DomainError("decade_amplitude: histogram has no positive key");
    return std::log10(static_cast<double>(keys.back().first) /
                      static_cast<double>(keys.front().first));
}

KsResult ks_distance(const WeightedDistribution& a, const WeightedDistribution& b) {
    if (a.total_weight() <= 0.0 || b.total_weight() <= 0.0)
        throw DomainError("ks_distance: zero total weight");

    KsResult r;
    auto ia = a.weights().begin();
    auto ib = b.weights().begin();
    double ca = 0.0, cb = 0.0;
    while (ia != a.weights().end() || ib != b.weights().end()) {
        std::uint64_t x;
        if (ib == b.weights().end() ||
            (ia != a.weights().end() && ia->first <= ib->first)) {
            x = ia->first;
        } else {
            x = ib->first;
        }
        if (ia != a.weights().end() && ia->first == x) ca += (ia++)->second;
        if (ib != b.weights().end() && ib->first == x) cb += (ib++)->second;
        double diff = std::abs(ca / a.total_weight() - cb / b.total_weight());
        if (diff > r.statistic) r.statistic = diff;
        ++r.support_size;
    }
    return r;
}

}  // namespace dagtopo
