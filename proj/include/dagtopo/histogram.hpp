#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace dagtopo {

// Sparse value -> count map over non-negative integers. Mergeable; the
// building block for every distribution this project reports.
class Histogram {
public:
    void add(std::uint64_t value, std::uint64_t count = 1) {
        if (count == 0) return;
        counts_[value] += count;
        total_ += count;
    }

    void merge(const Histogram& other) {
        for (const auto& [v, c] : other.counts_) add(v, c);
    }

    std::uint64_t total() const { return total_; }
    bool empty() const { return counts_.empty(); }
    std::size_t distinct() const { return counts_.size(); }

    std::uint64_t count(std::uint64_t value) const {
        auto it = counts_.find(value);
        return it == counts_.end() ? 0 : it->second;
    }

    // Smallest/largest stored key; only valid when non-empty.
    std::uint64_t min_key() const { return counts_.begin()->first; }
    std::uint64_t max_key() const { return counts_.rbegin()->first; }

    const std::map<std::uint64_t, std::uint64_t>& counts() const { return counts_; }

    // (value, number of samples >= value), ascending in value.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> ccdf() const {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> out(counts_.begin(),
                                                                 counts_.end());
        std::uint64_t suffix = 0;
        for (auto it = out.rbegin(); it != out.rend(); ++it) {
            suffix += it->second;
            it->second = suffix;
        }
        return out;
    }

    bool operator==(const Histogram& other) const {
        return counts_ == other.counts_;
    }

private:
    std::map<std::uint64_t, std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

// Empirical distribution with non-uniform sample weights, as produced by the
// origin-weighted component-size analysis.
class WeightedDistribution {
public:
    void add(std::uint64_t value, double weight) {
        if (weight == 0.0) return;
        weights_[value] += weight;
        total_ += weight;
    }

    double total_weight() const { return total_; }
    bool empty() const { return weights_.empty(); }
    const std::map<std::uint64_t, double>& weights() const { return weights_; }

    static WeightedDistribution from_histogram(const Histogram& h) {
        WeightedDistribution d;
        for (const auto& [v, c] : h.counts()) d.add(v, static_cast<double>(c));
        return d;
    }

private:
    std::map<std::uint64_t, double> weights_;
    double total_ = 0.0;
};

}  // namespace dagtopo
