#pragma once

#include "lapspec/graph.hpp"
#include "lapspec/laplacian.hpp"
#include "lapspec/rng.hpp"

namespace lapspec {

/// Random standardized Laplacian: off-diagonal entries i.i.d. uniform on
/// [-1/n, 0], kept with probability `density` (so density 1 is the dense
/// case and density 0 the zero matrix); the diagonal balances each row.
StandardizedLaplacian sample_standardized(int n, SplitMix64& rng, double density = 1.0);

/// Random digraph in class G_b: every ordered pair (i, j), i != j, carries
/// an arc with probability `density`, weighted uniformly on (0, b].  The
/// sampled double weight is stored as an exact binary rational.
WeightedDigraph sample_digraph(int n, SplitMix64& rng, double density, const Rat& b);

/// Random digraph with weights quantized to multiples of b/denominator.
/// Exact characteristic polynomials of such instances stay narrow, which
/// keeps bulk rational verification fast.
WeightedDigraph sample_digraph_quantized(int n, SplitMix64& rng, double density, int denominator,
                                         const Rat& b = Rat(1));

} // namespace lapspec
