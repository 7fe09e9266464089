#pragma once

#include <string>
#include <vector>

#include "arrival/graphgen.hpp"
#include "arrival/multigraph.hpp"
#include "arrival/philox.hpp"

namespace testutil {

using namespace arrival;

inline int uniform_int(Philox4x32& rng, int lo, int hi) {
    return lo + static_cast<int>(rng.next_u32() % static_cast<std::uint32_t>(hi - lo + 1));
}

inline Rational random_probability(Philox4x32& rng) {
    static const Rational pool[] = {Rational(1, 4), Rational(1, 3), Rational(1, 2),
                                    Rational(2, 3), Rational(3, 4), Rational(1)};
    return pool[uniform_int(rng, 0, 5)];
}

struct GraphCase {
    MultiGraph<Rational> graph;
    int s;
    int t;
};

// Connected random multigraph on 2..max_vertices vertices: a random spanning
// tree plus up to n extra edges (duplicates allowed, so parallel edges
// occur). Probabilities are per-edge random unless a uniform value is given.
inline GraphCase random_multigraph(Philox4x32& rng, int max_vertices,
                                   std::optional<Rational> uniform = {}) {
    int n = uniform_int(rng, 2, max_vertices);
    std::vector<Edge<Rational>> edges;
    for (int v = 1; v < n; ++v) {
        int parent = uniform_int(rng, 0, v - 1);
        edges.push_back({parent, v, Rational(1)});
    }
    int extra = uniform_int(rng, 0, n);
    for (int k = 0; k < extra; ++k) {
        int u = uniform_int(rng, 0, n - 1);
        int v = uniform_int(rng, 0, n - 2);
        if (v >= u) ++v;
        edges.push_back({u, v, Rational(1)});
    }
    for (auto& e : edges) e.p = uniform ? *uniform : random_probability(rng);

    std::vector<std::string> names;
    for (int v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));

    int s = uniform_int(rng, 0, n - 1);
    int t = uniform_int(rng, 0, n - 2);
    if (t >= s) ++t;
    return {MultiGraph<Rational>(std::move(names), std::move(edges)), s, t};
}

}  // namespace testutil
