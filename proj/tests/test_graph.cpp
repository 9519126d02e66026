#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "lapspec/eigen.hpp"
#include "lapspec/graph.hpp"
#include "lapspec/laplacian.hpp"
#include "lapspec/rng.hpp"
#include "lapspec/sampling.hpp"

using namespace lapspec;

namespace {

/// Oracle for the in-forest dimension: try every per-vertex out-arc choice
/// (or no choice, making the vertex a root), keep the acyclic ones -- those
/// are exactly the spanning converging forests -- and minimize the number of
/// roots. Exponential, fine for n <= 5.
int brute_force_forest_dimension(const WeightedDigraph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> out(n);
    for (const Arc& a : g.arcs()) out[a.source].push_back(a.target);
    std::vector<int> choice(n, -1);
    int best = n;
    while (true) {
        std::vector<int> color(n, 0);
        bool acyclic = true;
        int roots = 0;
        for (int v = 0; v < n; ++v)
            if (choice[v] < 0) ++roots;
        for (int v = 0; v < n && acyclic; ++v) {
            int u = v;
            std::vector<int> path;
            while (u != -1 && color[u] == 0) {
                color[u] = 1;
                path.push_back(u);
                u = choice[u] < 0 ? -1 : out[u][choice[u]];
            }
            if (u != -1 && color[u] == 1) acyclic = false;
            for (int w : path) color[w] = 2;
        }
        if (acyclic) best = std::min(best, roots);
        int i = 0;
        for (; i < n; ++i) {
            if (choice[i] + 1 < static_cast<int>(out[i].size())) {
                ++choice[i];
                break;
            }
            choice[i] = -1;
        }
        if (i == n) break;
    }
    return best;
}

bool same_digraph(const WeightedDigraph& a, const WeightedDigraph& b) {
    if (a.order() != b.order() || a.bound() != b.bound()) return false;
    if (a.arcs().size() != b.arcs().size()) return false;
    for (std::size_t i = 0; i < a.arcs().size(); ++i) {
        const Arc& x = a.arcs()[i];
        const Arc& y = b.arcs()[i];
        if (x.source != y.source || x.target != y.target || x.weight != y.weight) return false;
    }
    return true;
}

} // namespace

TEST_CASE("digraph construction accepts valid inputs and rejects invalid ones") {
    CHECK(new_digraph(1, {}, Rat(1)).order() == 1);
    CHECK(new_digraph(3, {{0, 1, Rat(1)}, {1, 2, Rat(1)}, {2, 0, Rat(1)}}, Rat(1)).arcs().size() ==
          3);
    CHECK_THROWS_AS(new_digraph(2, {{0, 1, Rat(2)}}, Rat(1)), InvalidWeightError);
    CHECK_THROWS_AS(new_digraph(2, {{0, 1, Rat(0)}}, Rat(1)), InvalidWeightError);
    CHECK_THROWS_AS(new_digraph(2, {{0, 1, Rat(-1, 2)}}, Rat(1)), InvalidWeightError);
    CHECK_THROWS_AS(new_digraph(2, {{0, 0, Rat(1)}}, Rat(1)), SelfLoopError);
    CHECK_THROWS_AS(
        new_digraph(2, {{0, 1, Rat(1, 2)}, {0, 1, Rat(1, 3)}}, Rat(1)), DuplicateArcError);
    CHECK_THROWS_AS(new_digraph(2, {{0, 2, Rat(1)}}, Rat(1)), BadIndexError);
    CHECK_THROWS_AS(new_digraph(0, {}, Rat(1)), BadIndexError);
}

TEST_CASE("complement swaps complete and empty digraphs") {
    const WeightedDigraph complete = complete_digraph(4, Rat(1));
    CHECK(complement(complete).arcs().empty());

    const WeightedDigraph empty = empty_digraph(3, Rat(1));
    const WeightedDigraph full = complement(empty);
    CHECK(full.arcs().size() == 6);
    for (const Arc& a : full.arcs()) CHECK(a.weight == Rat(1));
}

TEST_CASE("complement is an exact involution") {
    for (std::uint64_t t = 0; t < 40; ++t) {
        SplitMix64 rng = trial_rng(101, t);
        const WeightedDigraph g = sample_digraph(2 + static_cast<int>(t % 5), rng, 0.6, Rat(1));
        CHECK(same_digraph(complement(complement(g)), g));
    }
    // weights off the float grid survive the round trip too
    const WeightedDigraph g =
        new_digraph(3, {{0, 1, Rat(1, 3)}, {2, 1, Rat(2, 7)}}, Rat(1));
    CHECK(same_digraph(complement(complement(g)), g));
}

TEST_CASE("condensation of canonical digraphs") {
    SUBCASE("3-cycle is one strongly connected component with one sink") {
        const Condensation c = condensation(cycle_digraph(3, Rat(1)));
        CHECK(c.component_count == 1);
        CHECK(c.sinks == std::vector<int>{0});
    }
    SUBCASE("out-star 0->1, 0->2 has three components and two sinks") {
        const WeightedDigraph g = new_digraph(3, {{0, 1, Rat(1)}, {0, 2, Rat(1)}}, Rat(1));
        const Condensation c = condensation(g);
        CHECK(c.component_count == 3);
        CHECK(c.sinks.size() == 2);
        CHECK(c.component_of[0] != c.component_of[1]);
        CHECK(c.component_of[1] != c.component_of[2]);
    }
    SUBCASE("empty digraph splits into n singleton sinks") {
        const Condensation c = condensation(empty_digraph(4, Rat(1)));
        CHECK(c.component_count == 4);
        CHECK(c.sinks == std::vector<int>{0, 1, 2, 3});
    }
    SUBCASE("sinks are exactly the components without outgoing DAG edges") {
        for (std::uint64_t t = 0; t < 30; ++t) {
            SplitMix64 rng = trial_rng(55, t);
            const WeightedDigraph g =
                sample_digraph(2 + static_cast<int>(t % 6), rng, 0.4, Rat(1));
            const Condensation c = condensation(g);
            std::vector<int> expected;
            for (int comp = 0; comp < c.component_count; ++comp)
                if (c.dag_adj[comp].empty()) expected.push_back(comp);
            CHECK(c.sinks == expected);
        }
    }
}

TEST_CASE("in-forest dimension matches the brute-force forest oracle") {
    CHECK(in_forest_dimension(complete_digraph(5, Rat(1))) == 1);
    CHECK(in_forest_dimension(empty_digraph(4, Rat(1))) == 4);
    const WeightedDigraph path = new_digraph(3, {{0, 1, Rat(1)}, {1, 2, Rat(1)}}, Rat(1));
    CHECK(in_forest_dimension(path) == 1);
    CHECK(brute_force_forest_dimension(path) == 1);

    for (int n = 2; n <= 5; ++n) {
        for (std::uint64_t t = 0; t < 60; ++t) {
            SplitMix64 rng = trial_rng(1000 + n, t);
            const double density = 0.15 + 0.8 * (t % 7) / 6.0;
            const WeightedDigraph g = sample_digraph(n, rng, density, Rat(1));
            const int d = in_forest_dimension(g);
            CHECK(d == brute_force_forest_dimension(g));
            CHECK(d >= 1);
            CHECK(d <= n);
            CHECK((d == n) == g.arcs().empty());
        }
    }
}

TEST_CASE("in-forest dimension equals n minus the Laplacian rank") {
    for (int n = 2; n <= 6; ++n) {
        for (std::uint64_t t = 0; t < 25; ++t) {
            SplitMix64 rng = trial_rng(2000 + n, t);
            const WeightedDigraph g = sample_digraph(n, rng, 0.2 + 0.1 * (t % 8), Rat(1));
            const StandardizedLaplacian lap = standardize(g);
            CHECK(in_forest_dimension(g) == n - rank(lap.matrix));
        }
    }
}

TEST_CASE("Hamiltonian cycle detection") {
    CHECK(is_hamiltonian_cycle(cycle_digraph(3, Rat(1))));
    CHECK(is_hamiltonian_cycle(cycle_digraph(2, Rat(1, 2))));
    CHECK_FALSE(is_hamiltonian_cycle(complete_digraph(3, Rat(1))));
    CHECK_FALSE(is_hamiltonian_cycle(empty_digraph(3, Rat(1))));

    // cycle plus a chord: every vertex still reaches every other, but the
    // out-degree of 0 is 2
    const WeightedDigraph chord = new_digraph(
        4, {{0, 1, Rat(1)}, {1, 2, Rat(1)}, {2, 3, Rat(1)}, {3, 0, Rat(1)}, {0, 2, Rat(1)}},
        Rat(1));
    CHECK_FALSE(is_hamiltonian_cycle(chord));

    // two disjoint 2-cycles cover all vertices with degree 1 but are not a
    // single cycle
    const WeightedDigraph pairs = new_digraph(
        4, {{0, 1, Rat(1)}, {1, 0, Rat(1)}, {2, 3, Rat(1)}, {3, 2, Rat(1)}}, Rat(1));
    CHECK_FALSE(is_hamiltonian_cycle(pairs));
}

TEST_CASE("cycle digraph construction") {
    const WeightedDigraph c2 = cycle_digraph(2, Rat(1));
    REQUIRE(c2.arcs().size() == 2);
    CHECK(c2.arcs()[0].source == 0);
    CHECK(c2.arcs()[0].target == 1);
    CHECK(c2.arcs()[1].source == 1);
    CHECK(c2.arcs()[1].target == 0);

    CHECK_THROWS_AS(cycle_digraph(1, Rat(1)), BadIndexError);
    CHECK_THROWS_AS(cycle_digraph(3, Rat(2), Rat(1)), InvalidWeightError);
}
