#pragma once

#include <vector>

#include "lapspec/errors.hpp"
#include "lapspec/rational.hpp"

namespace lapspec {

/// One weighted arc. Weights are kept as exact rationals so that
/// complementation and the exact Laplacian constructions never round; a
/// double view is derived on demand.
struct Arc {
    int source = 0;
    int target = 0;
    Rat weight;
};

/// Weighted digraph with strictly positive arc weights bounded by b.
/// Arcs are stored sorted by (source, target) and iteration order is
/// deterministic, so every derived matrix is reproducible byte for byte.
class WeightedDigraph {
public:
    WeightedDigraph(int n, std::vector<Arc> arcs, Rat b);

    int order() const { return n_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const Rat& bound() const { return b_; }
    double bound_d() const { return to_double(b_); }

    /// Index into arcs() of arc (i, j), or -1.
    int find_arc(int i, int j) const;

private:
    int n_;
    std::vector<Arc> arcs_;
    Rat b_;
};

/// Convenience constructor mirroring the validated type invariants.
WeightedDigraph new_digraph(int n, std::vector<Arc> arcs, Rat b);

/// Complementary digraph: arc (i,j) carries weight b - w_ij; a full-weight
/// arc disappears and a missing arc comes back with weight b. Exact, so
/// complement(complement(g)) == g including weights.
WeightedDigraph complement(const WeightedDigraph& g);

/// Strongly connected components and their DAG. Components are numbered by
/// the smallest vertex they contain.
struct Condensation {
    std::vector<int> component_of;          // vertex -> component id
    int component_count = 0;
    std::vector<std::vector<int>> dag_adj;  // component -> sorted distinct successors
    std::vector<int> sinks;                 // sorted ids of components without successors
};

Condensation condensation(const WeightedDigraph& g);

/// Minimum number of trees in a spanning converging forest; computed as the
/// number of sink components of the condensation.
int in_forest_dimension(const WeightedDigraph& g);

/// True iff the arc set is exactly one directed cycle through all vertices.
bool is_hamiltonian_cycle(const WeightedDigraph& g);

/// Directed n-cycle i -> i+1 (mod n), all weights w, class bound b (= w by
/// default so the standardized Laplacian is (1/n)(I - Q)).
WeightedDigraph cycle_digraph(int n, const Rat& w);
WeightedDigraph cycle_digraph(int n, const Rat& w, const Rat& b);

/// Complete digraph on n vertices, all weights b.
WeightedDigraph complete_digraph(int n, const Rat& b);

/// Digraph with no arcs.
WeightedDigraph empty_digraph(int n, const Rat& b);

} // namespace lapspec
