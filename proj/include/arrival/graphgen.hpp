#pragma once

#include <string>
#include <vector>

#include "arrival/multigraph.hpp"
#include "arrival/special.hpp"

namespace arrival {

// Standard two-terminal families. Conventions: the source is vertex 0 and
// the target is the last vertex (paths) or vertex 1 (complete graphs and
// parallel-path bundles).

template <class S>
MultiGraph<S> make_path(int n_edges, const S& p) {
    if (n_edges < 1) throw DomainError("path needs at least one edge");
    std::vector<std::string> names;
    for (int i = 0; i <= n_edges; ++i) names.push_back("v" + std::to_string(i));
    std::vector<Edge<S>> edges;
    for (int i = 0; i < n_edges; ++i) edges.push_back({i, i + 1, p});
    return MultiGraph<S>(std::move(names), std::move(edges));
}

template <class S>
MultiGraph<S> make_cycle(int n, const S& p) {
    if (n < 3) throw DomainError("cycle needs at least three vertices");
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<Edge<S>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, p});
    return MultiGraph<S>(std::move(names), std::move(edges));
}

template <class S>
MultiGraph<S> make_complete(int n, const S& p) {
    if (n < 2) throw DomainError("complete graph needs at least two vertices");
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<Edge<S>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j, p});
    return MultiGraph<S>(std::move(names), std::move(edges));
}

template <class S>
MultiGraph<S> make_parallel_edges(int k, const S& p) {
    if (k < 1) throw DomainError("need at least one edge");
    std::vector<std::string> names{"s", "t"};
    std::vector<Edge<S>> edges;
    for (int i = 0; i < k; ++i) edges.push_back({0, 1, p});
    return MultiGraph<S>(std::move(names), std::move(edges));
}

// H(m_1..m_n): n internally disjoint s-t paths with the given edge counts.
// s = vertex 0, t = vertex 1.
template <class S>
MultiGraph<S> make_parallel_paths(const ParallelPathSpec& spec, const S& p) {
    std::vector<std::string> names{"s", "t"};
    std::vector<Edge<S>> edges;
    for (std::size_t i = 0; i < spec.lengths.size(); ++i) {
        int prev = 0;
        for (int step = 0; step + 1 < spec.lengths[i]; ++step) {
            int mid = static_cast<int>(names.size());
            names.push_back("b" + std::to_string(i) + "_" + std::to_string(step));
            edges.push_back({prev, mid, p});
            prev = mid;
        }
        edges.push_back({prev, 1, p});
    }
    return MultiGraph<S>(std::move(names), std::move(edges));
}

template <class S>
MultiGraph<S> make_star(int leaves, const S& p) {
    if (leaves < 1) throw DomainError("star needs at least one leaf");
    std::vector<std::string> names{"c"};
    std::vector<Edge<S>> edges;
    for (int i = 0; i < leaves; ++i) {
        names.push_back("l" + std::to_string(i));
        edges.push_back({0, i + 1, p});
    }
    return MultiGraph<S>(std::move(names), std::move(edges));
}

}  // namespace arrival
