#include "lapspec/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace lapspec {

WeightedDigraph::WeightedDigraph(int n, std::vector<Arc> arcs, Rat b)
    : n_(n), arcs_(std::move(arcs)), b_(std::move(b)) {
    if (n_ < 1) throw BadIndexError("digraph needs at least one vertex");
    if (b_ <= 0) throw InvalidWeightError("class weight bound must be positive");

    std::sort(arcs_.begin(), arcs_.end(), [](const Arc& x, const Arc& y) {
        return x.source != y.source ? x.source < y.source : x.target < y.target;
    });

    for (std::size_t k = 0; k < arcs_.size(); ++k) {
        const Arc& a = arcs_[k];
        if (a.source < 0 || a.source >= n_ || a.target < 0 || a.target >= n_)
            throw BadIndexError("arc endpoint out of range: (" + std::to_string(a.source) +
                                ", " + std::to_string(a.target) + ")");
        if (a.source == a.target)
            throw SelfLoopError("self-loop at vertex " + std::to_string(a.source));
        if (a.weight <= 0)
            throw InvalidWeightError("arc weight must be positive");
        if (a.weight > b_)
            throw InvalidWeightError("arc weight exceeds class bound");
        if (k > 0 && arcs_[k - 1].source == a.source && arcs_[k - 1].target == a.target)
            throw DuplicateArcError("duplicate arc (" + std::to_string(a.source) + ", " +
                                    std::to_string(a.target) + ")");
    }
}

int WeightedDigraph::find_arc(int i, int j) const {
    const Arc probe{i, j, Rat(1)};
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), probe,
                               [](const Arc& x, const Arc& y) {
                                   return x.source != y.source ? x.source < y.source
                                                               : x.target < y.target;
                               });
    if (it != arcs_.end() && it->source == i && it->target == j)
        return static_cast<int>(it - arcs_.begin());
    return -1;
}

WeightedDigraph new_digraph(int n, std::vector<Arc> arcs, Rat b) {
    return WeightedDigraph(n, std::move(arcs), std::move(b));
}

WeightedDigraph complement(const WeightedDigraph& g) {
    const int n = g.order();
    const Rat& b = g.bound();
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(n) * (n - 1));
    std::size_t next = 0;
    const auto& in = g.arcs();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (next < in.size() && in[next].source == i && in[next].target == j) {
                Rat w = b - in[next].weight;
                ++next;
                if (w > 0) arcs.push_back({i, j, std::move(w)});
            } else {
                arcs.push_back({i, j, b});
            }
        }
    }
    return WeightedDigraph(n, std::move(arcs), b);
}

namespace {

// Iterative Tarjan SCC; explicit stack so deep graphs cannot overflow the
// call stack.
struct TarjanState {
    const std::vector<std::vector<int>>& adj;
    std::vector<int> index, lowlink, component;
    std::vector<bool> on_stack;
    std::vector<int> stack;
    int next_index = 0;
    int components = 0;

    explicit TarjanState(const std::vector<std::vector<int>>& a)
        : adj(a), index(a.size(), -1), lowlink(a.size(), 0),
          component(a.size(), -1), on_stack(a.size(), false) {}

    void run(int root) {
        struct Frame { int v; std::size_t child; };
        std::vector<Frame> frames{{root, 0}};
        while (!frames.empty()) {
            Frame& f = frames.back();
            const int v = f.v;
            if (f.child == 0) {
                index[v] = lowlink[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            bool descended = false;
            while (f.child < adj[v].size()) {
                const int w = adj[v][f.child++];
                if (index[w] == -1) {
                    frames.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w]) lowlink[v] = std::min(lowlink[v], index[w]);
            }
            if (descended) continue;
            if (lowlink[v] == index[v]) {
                for (;;) {
                    const int w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    component[w] = components;
                    if (w == v) break;
                }
                ++components;
            }
            frames.pop_back();
            if (!frames.empty()) {
                const int parent = frames.back().v;
                lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
            }
        }
    }
};

} // namespace

Condensation condensation(const WeightedDigraph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const Arc& a : g.arcs()) adj[static_cast<std::size_t>(a.source)].push_back(a.target);

    TarjanState t(adj);
    for (int v = 0; v < n; ++v)
        if (t.index[v] == -1) t.run(v);

    // Renumber components by the smallest vertex they contain.
    std::vector<int> min_vertex(static_cast<std::size_t>(t.components), n);
    for (int v = 0; v < n; ++v) {
        int& mv = min_vertex[static_cast<std::size_t>(t.component[v])];
        mv = std::min(mv, v);
    }
    std::vector<int> order(static_cast<std::size_t>(t.components));
    for (int c = 0; c < t.components; ++c) order[static_cast<std::size_t>(c)] = c;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return min_vertex[static_cast<std::size_t>(a)] < min_vertex[static_cast<std::size_t>(b)];
    });
    std::vector<int> relabel(static_cast<std::size_t>(t.components));
    for (int rank = 0; rank < t.components; ++rank)
        relabel[static_cast<std::size_t>(order[static_cast<std::size_t>(rank)])] = rank;

    Condensation c;
    c.component_count = t.components;
    c.component_of.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        c.component_of[static_cast<std::size_t>(v)] =
            relabel[static_cast<std::size_t>(t.component[v])];

    std::vector<std::set<int>> succ(static_cast<std::size_t>(t.components));
    for (const Arc& a : g.arcs()) {
        const int cu = c.component_of[static_cast<std::size_t>(a.source)];
        const int cv = c.component_of[static_cast<std::size_t>(a.target)];
        if (cu != cv) succ[static_cast<std::size_t>(cu)].insert(cv);
    }
    c.dag_adj.resize(static_cast<std::size_t>(t.components));
    for (int comp = 0; comp < t.components; ++comp) {
        c.dag_adj[static_cast<std::size_t>(comp)].assign(
            succ[static_cast<std::size_t>(comp)].begin(),
            succ[static_cast<std::size_t>(comp)].end());
        if (succ[static_cast<std::size_t>(comp)].empty()) c.sinks.push_back(comp);
    }
    return c;
}

int in_forest_dimension(const WeightedDigraph& g) {
    return static_cast<int>(condensation(g).sinks.size());
}

bool is_hamiltonian_cycle(const WeightedDigraph& g) {
    const int n = g.order();
    if (static_cast<int>(g.arcs().size()) != n) return false;
    std::vector<int> out(static_cast<std::size_t>(n), -1);
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    for (const Arc& a : g.arcs()) {
        if (out[static_cast<std::size_t>(a.source)] != -1) return false;
        out[static_cast<std::size_t>(a.source)] = a.target;
        ++indeg[static_cast<std::size_t>(a.target)];
    }
    for (int v = 0; v < n; ++v)
        if (out[static_cast<std::size_t>(v)] == -1 || indeg[static_cast<std::size_t>(v)] != 1)
            return false;
    // Out-degrees and in-degrees are all 1; the arc set is a permutation.
    // It is a Hamiltonian cycle iff that permutation is a single n-cycle.
    int v = 0, steps = 0;
    do {
        v = out[static_cast<std::size_t>(v)];
        ++steps;
    } while (v != 0 && steps <= n);
    return steps == n;
}

WeightedDigraph cycle_digraph(int n, const Rat& w) { return cycle_digraph(n, w, w); }

WeightedDigraph cycle_digraph(int n, const Rat& w, const Rat& b) {
    if (n < 2) throw BadIndexError("cycle digraph needs n >= 2");
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n, w});
    return WeightedDigraph(n, std::move(arcs), b);
}

WeightedDigraph complete_digraph(int n, const Rat& b) {
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(n) * (n - 1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) arcs.push_back({i, j, b});
    return WeightedDigraph(n, std::move(arcs), b);
}

WeightedDigraph empty_digraph(int n, const Rat& b) {
    return WeightedDigraph(n, {}, b);
}

} // namespace lapspec
