#include "lapspec/sampling.hpp"

#include <string>

#include "lapspec/errors.hpp"

namespace lapspec {

StandardizedLaplacian sample_standardized(int n, SplitMix64& rng, double density) {
    if (n < 1) throw BadIndexError("matrix order must be at least 1, got " + std::to_string(n));
    DenseMatrix m(n);
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            // The presence draw happens for every slot, so the stream layout
            // does not depend on earlier outcomes within the row order.
            const double keep = rng.next_double();
            const double magnitude = rng.next_double();
            if (keep < density) {
                m(i, j) = -magnitude / n;
                row += magnitude / n;
            }
        }
        m(i, i) = row;
    }
    return make_standardized(std::move(m), Provenance::Sampled);
}

WeightedDigraph sample_digraph(int n, SplitMix64& rng, double density, const Rat& b) {
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const double keep = rng.next_double();
            const double magnitude = rng.next_double();
            if (keep < density)
                arcs.push_back(Arc{i, j, b * rational_from_double(1.0 - magnitude)});
        }
    }
    return WeightedDigraph(n, std::move(arcs), b);
}

WeightedDigraph sample_digraph_quantized(int n, SplitMix64& rng, double density, int denominator,
                                         const Rat& b) {
    if (denominator < 1)
        throw BadIndexError("weight denominator must be at least 1, got " + std::to_string(denominator));
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const double keep = rng.next_double();
            const std::uint64_t step = rng.next_below(static_cast<std::uint64_t>(denominator));
            if (keep < density)
                arcs.push_back(Arc{i, j, b * Rat(static_cast<long long>(step) + 1, denominator)});
        }
    }
    return WeightedDigraph(n, std::move(arcs), b);
}

} // namespace lapspec
