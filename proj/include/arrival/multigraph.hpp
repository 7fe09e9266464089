#pragma once

#include <fstream>
#include <istream>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "arrival/error.hpp"
#include "arrival/scalar.hpp"
#include "arrival/vertexset.hpp"

namespace arrival {

inline constexpr int kMaxVertices = 30;

template <class S>
struct Edge {
    int u;
    int v;
    S p;  // infection probability, 0 < p <= 1
};

// Immutable loopless undirected multigraph with per-edge infection
// probabilities. Vertex index = bit position in every VertexSet that refers
// to this graph.
template <class S>
class MultiGraph {
public:
    MultiGraph(std::vector<std::string> names, std::vector<Edge<S>> edges)
        : names_(std::move(names)), edges_(std::move(edges)) {
        const int n = static_cast<int>(names_.size());
        if (n > kMaxVertices)
            throw ParseError("graph has " + std::to_string(n) + " vertices, limit is " +
                             std::to_string(kMaxVertices));
        neighbor_masks_.assign(n, VertexSet());
        incident_.assign(n, {});
        for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
            const auto& e = edges_[i];
            if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
                throw DomainError("edge endpoint out of range");
            if (e.u == e.v) throw ParseError("loops are not allowed");
            if (!(e.p > S(0)) || e.p > S(1))
                throw ParseError("edge probability must lie in (0,1]");
            neighbor_masks_[e.u] = neighbor_masks_[e.u].with(e.v);
            neighbor_masks_[e.v] = neighbor_masks_[e.v].with(e.u);
            incident_[e.u].push_back(i);
            incident_[e.v].push_back(i);
        }
        if (!edges_.empty()) {
            uniform_p_ = edges_.front().p;
            for (const auto& e : edges_)
                if (!(e.p == *uniform_p_)) {
                    uniform_p_.reset();
                    break;
                }
        }
    }

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::vector<Edge<S>>& edges() const { return edges_; }

    int vertex_index(std::string_view name) const {
        for (int i = 0; i < vertex_count(); ++i)
            if (names_[i] == name) return i;
        return -1;
    }

    VertexSet vertices() const { return VertexSet::first_n(vertex_count()); }
    VertexSet neighbor_mask(int v) const { return neighbor_masks_[v]; }
    const std::vector<int>& incident(int v) const { return incident_[v]; }

    // Set iff all edges carry the same probability.
    const std::optional<S>& uniform_p() const { return uniform_p_; }

private:
    std::vector<std::string> names_;
    std::vector<Edge<S>> edges_;
    std::vector<VertexSet> neighbor_masks_;
    std::vector<std::vector<int>> incident_;
    std::optional<S> uniform_p_;
};

template <class To, class From>
MultiGraph<To> convert_graph(const MultiGraph<From>& g) {
    std::vector<Edge<To>> edges;
    edges.reserve(g.edges().size());
    for (const auto& e : g.edges())
        edges.push_back({e.u, e.v, scalar_from_rational<To>(Rational(e.p))});
    return MultiGraph<To>(g.vertex_names(), std::move(edges));
}

template <>
inline MultiGraph<double> convert_graph<double, Rational>(const MultiGraph<Rational>& g) {
    std::vector<Edge<double>> edges;
    edges.reserve(g.edges().size());
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v, to_double(e.p)});
    return MultiGraph<double>(g.vertex_names(), std::move(edges));
}

// N(a) = union of neighborhoods minus a itself.
template <class S>
VertexSet open_neighborhood(const MultiGraph<S>& g, VertexSet a) {
    VertexSet result;
    for_each_vertex(a, [&](int v) { result = result | g.neighbor_mask(v); });
    return result - a;
}

// Indices of edges with one endpoint in a and the other in b; parallel edges
// are listed individually.
template <class S>
std::vector<int> cut_edges(const MultiGraph<S>& g, VertexSet a, VertexSet b) {
    std::vector<int> result;
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edges()[i];
        bool ua = a.test(e.u), va = a.test(e.v);
        bool ub = b.test(e.u), vb = b.test(e.v);
        if ((ua && vb) || (va && ub)) result.push_back(i);
    }
    return result;
}

// |(a, {x})|: number of edges joining the set a to the single vertex x.
template <class S>
int edge_multiplicity(const MultiGraph<S>& g, VertexSet a, int x) {
    int count = 0;
    for (int ei : g.incident(x)) {
        const auto& e = g.edges()[ei];
        int other = e.u == x ? e.v : e.u;
        if (a.test(other)) ++count;
    }
    return count;
}

// Product of (1 - p_e) over all edges joining a to x: the probability that
// x stays uninfected for one step while a is the labelled set.
template <class S>
S noninfection_product(const MultiGraph<S>& g, VertexSet a, int x) {
    S q(1);
    for (int ei : g.incident(x)) {
        const auto& e = g.edges()[ei];
        int other = e.u == x ? e.v : e.u;
        if (a.test(other)) q *= S(1) - e.p;
    }
    return q;
}

// Contracts the subset x into a single vertex. The merged vertex takes the
// slot of the lowest-indexed member of x; remaining vertices keep their
// relative order. Edges inside x vanish, boundary edges keep their
// probabilities, so the result may be non-simple.
template <class S>
MultiGraph<S> merge_vertices(const MultiGraph<S>& g, VertexSet x) {
    if (x.empty()) throw EmptyMergeSet("merge set must be nonempty");
    const int n = g.vertex_count();

    std::string merged_name;
    for_each_vertex(x, [&](int v) {
        if (!merged_name.empty()) merged_name += "+";
        merged_name += g.vertex_names()[v];
    });

    std::vector<std::string> names;
    std::vector<int> remap(n, -1);
    int merged_index = -1;
    for (int v = 0; v < n; ++v) {
        if (x.test(v)) {
            if (merged_index < 0) {
                merged_index = static_cast<int>(names.size());
                names.push_back(merged_name);
            }
            remap[v] = merged_index;
        } else {
            remap[v] = static_cast<int>(names.size());
            names.push_back(g.vertex_names()[v]);
        }
    }

    std::vector<Edge<S>> edges;
    for (const auto& e : g.edges()) {
        if (x.test(e.u) && x.test(e.v)) continue;
        edges.push_back({remap[e.u], remap[e.v], e.p});
    }
    return MultiGraph<S>(std::move(names), std::move(edges));
}

inline VertexSet merged_vertex_set(VertexSet x) {
    // After merge_vertices, the merged vertex sits at the slot of the lowest
    // member of x; with all lower vertices preserved that slot equals the
    // count of vertices below it, i.e. the lowest set bit's index.
    return VertexSet::single(std::countr_zero(x.bits));
}

// Collapses every parallel class {e_1..e_k} into a single edge with
// p = 1 - prod(1 - p_i).
template <class S>
MultiGraph<S> simplify_parallel(const MultiGraph<S>& g) {
    std::vector<Edge<S>> edges;
    std::unordered_map<std::uint64_t, int> seen;  // pair key -> index into edges
    for (const auto& e : g.edges()) {
        int a = e.u < e.v ? e.u : e.v;
        int b = e.u < e.v ? e.v : e.u;
        std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
        auto it = seen.find(key);
        if (it == seen.end()) {
            seen.emplace(key, static_cast<int>(edges.size()));
            edges.push_back(e);
        } else {
            S& p = edges[it->second].p;
            p = p + e.p - p * e.p;
        }
    }
    return MultiGraph<S>(g.vertex_names(), std::move(edges));
}

// Hop count of a shortest s-t path; nullopt when t is not reachable.
template <class S>
std::optional<int> distance(const MultiGraph<S>& g, int s, int t) {
    if (s == t) return 0;
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> queue;
    dist[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int ei : g.incident(v)) {
            const auto& e = g.edges()[ei];
            int w = e.u == v ? e.v : e.u;
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                if (w == t) return dist[w];
                queue.push(w);
            }
        }
    }
    return std::nullopt;
}

// --- graph text format ---------------------------------------------------
//
//   # comment
//   p 1/2              default probability for subsequent edge lines
//   edge u v [p]       vertices are introduced by first mention
//
// A probability override replaces every file probability (uniform graph).
// With missing_ok, edges that resolve to no probability default to 1, for
// commands that only consume the structure.

template <class S>
MultiGraph<S> parse_graph(std::istream& in, std::optional<Rational> override_p = {},
                          bool missing_ok = false) {
    std::vector<std::string> names;
    std::unordered_map<std::string, int> index;
    struct RawEdge {
        int u, v;
        std::optional<Rational> p;
    };
    std::vector<RawEdge> raw;
    std::optional<Rational> default_p;

    auto intern = [&](const std::string& name, int line_no) {
        auto it = index.find(name);
        if (it != index.end()) return it->second;
        if (static_cast<int>(names.size()) >= kMaxVertices)
            throw ParseError("line " + std::to_string(line_no) + ": vertex limit " +
                             std::to_string(kMaxVertices) + " exceeded");
        int id = static_cast<int>(names.size());
        names.push_back(name);
        index.emplace(name, id);
        return id;
    };

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string keyword;
        if (!(fields >> keyword)) continue;

        if (keyword == "p") {
            std::string value, extra;
            if (!(fields >> value) || (fields >> extra))
                throw ParseError("line " + std::to_string(line_no) + ": expected 'p <value>'");
            default_p = parse_rational(value);
        } else if (keyword == "edge") {
            std::string u, v, pstr, extra;
            if (!(fields >> u >> v))
                throw ParseError("line " + std::to_string(line_no) + ": expected 'edge <u> <v> [<p>]'");
            bool has_p = static_cast<bool>(fields >> pstr);
            if (fields >> extra)
                throw ParseError("line " + std::to_string(line_no) + ": trailing tokens");
            if (u == v)
                throw ParseError("line " + std::to_string(line_no) + ": loops are not allowed");
            RawEdge e;
            e.u = intern(u, line_no);
            e.v = intern(v, line_no);
            if (has_p) e.p = parse_rational(pstr);
            else e.p = default_p;
            raw.push_back(e);
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unknown directive '" +
                             keyword + "'");
        }
    }

    std::vector<Edge<S>> edges;
    edges.reserve(raw.size());
    for (const auto& e : raw) {
        Rational p;
        if (override_p) p = *override_p;
        else if (e.p) p = *e.p;
        else if (missing_ok) p = 1;
        else throw ParseError("edge with no probability and no default");
        if (!(p > 0) || p > 1) throw ParseError("edge probability must lie in (0,1]");
        edges.push_back({e.u, e.v, scalar_from_rational<S>(p)});
    }
    return MultiGraph<S>(std::move(names), std::move(edges));
}

template <class S>
MultiGraph<S> load_graph(const std::string& path, std::optional<Rational> override_p = {},
                         bool missing_ok = false) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open graph file '" + path + "'");
    return parse_graph<S>(in, override_p, missing_ok);
}

}  // namespace arrival
