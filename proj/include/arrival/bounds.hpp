#pragma once

#include <optional>
#include <vector>

#include "arrival/exact.hpp"
#include "arrival/multigraph.hpp"
#include "arrival/resistance.hpp"

namespace arrival {

inline constexpr int kMaxReliabilityEdges = 24;

// Integer coefficients of the s-t reliability polynomial
// R(q) = c_0 + c_1 q + ... + c_m q^m: the probability of at least one intact
// s-t path when edges fail independently with probability q.
struct ReliabilityCoefficients {
    std::vector<BigInt> c;  // size m+1
    int m = 0;
};

namespace detail {

class DisjointSet {
public:
    explicit DisjointSet(int n) : parent_(n) { reset(); }
    void reset() {
        for (int i = 0; i < static_cast<int>(parent_.size()); ++i) parent_[i] = i;
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
    std::vector<int> parent_;
};

// Fraction-free (Bareiss) determinant; all intermediate divisions are exact.
inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return BigInt(1);
    BigInt prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return BigInt(0);
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : BigInt(-m[n - 1][n - 1]);
}

}  // namespace detail

// Exact coefficients by enumerating all 2^m edge-failure subsets; N_k counts
// size-k failing sets that leave s-t connected, and
// c_i = sum_k N_k (-1)^{i-k} C(m-k, i-k) expands sum_k N_k q^k (1-q)^{m-k}.
template <class S>
ReliabilityCoefficients reliability_polynomial(const MultiGraph<S>& g, int s, int t) {
    const int m = g.edge_count();
    if (m > kMaxReliabilityEdges)
        throw TooManyEdges("reliability enumeration is capped at " +
                           std::to_string(kMaxReliabilityEdges) + " edges");

    std::vector<BigInt> count_by_size(m + 1, BigInt(0));  // N_k
    detail::DisjointSet dsu(g.vertex_count());
    const auto& edges = g.edges();
    for (std::uint32_t fail = 0; fail < (std::uint32_t{1} << m); ++fail) {
        dsu.reset();
        for (int e = 0; e < m; ++e)
            if (!((fail >> e) & 1u)) dsu.unite(edges[e].u, edges[e].v);
        if (dsu.find(s) == dsu.find(t)) count_by_size[std::popcount(fail)] += 1;
    }

    ReliabilityCoefficients r;
    r.m = m;
    r.c.assign(m + 1, BigInt(0));
    for (int k = 0; k <= m; ++k) {
        if (count_by_size[k] == 0) continue;
        for (int i = k; i <= m; ++i) {
            BigInt term = count_by_size[k] * binomial(m - k, i - k);
            if ((i - k) % 2 == 0) r.c[i] += term;
            else r.c[i] -= term;
        }
    }
    return r;
}

// R~(q) = sum_{i>=1} c_i / (q^i - 1): the expected first round at which the
// evolving random subgraph connects s to t. Equals 1 at q = 0.
inline Rational insertion_probability(const ReliabilityCoefficients& r, const Rational& q) {
    if (q < 0 || q >= 1) throw DomainError("insertion probability requires 0 <= q < 1");
    Rational acc(0);
    Rational qi(1);
    for (int i = 1; i <= r.m; ++i) {
        qi *= q;
        if (r.c[i] != 0) acc += Rational(r.c[i]) / (qi - 1);
    }
    return acc;
}

template <class S>
Rational lower_bound_reliability(const MultiGraph<S>& g, int s, int t, const Rational& q) {
    auto d = distance(g, s, t);
    if (!d) throw UnreachableTarget("no s-t path");
    return Rational(*d) - 1 + insertion_probability(reliability_polynomial(g, s, t), q);
}

template <class S>
Rational upper_bound_distance(const MultiGraph<S>& g, int s, int t, const Rational& q) {
    if (q < 0 || q >= 1) throw DomainError("bound requires 0 <= q < 1");
    auto d = distance(g, s, t);
    if (!d) throw UnreachableTarget("no s-t path");
    return Rational(*d) / (Rational(1) - q);
}

// Electrical resistance between s and t with unit-resistance edges (parallel
// edges add conductance), as the exact ratio of spanning 2-forest and
// spanning tree counts on the component containing s and t:
//   Res = det(L minus rows/cols {s,t}) / det(L minus row/col {t}).
template <class S>
Rational effective_resistance(const MultiGraph<S>& g, int s, int t) {
    if (s == t) return Rational(0);

    VertexSet component = VertexSet::single(s);
    while (true) {
        VertexSet next = component | open_neighborhood(g, component);
        if (next == component) break;
        component = next;
    }
    if (!component.test(t)) throw UnreachableTarget("no s-t path");

    std::vector<int> local(g.vertex_count(), -1);
    int n = 0;
    for_each_vertex(component, [&](int v) { local[v] = n++; });

    std::vector<std::vector<BigInt>> laplacian(n, std::vector<BigInt>(n, BigInt(0)));
    for (const auto& e : g.edges()) {
        int u = local[e.u], v = local[e.v];
        if (u < 0 || v < 0) continue;
        laplacian[u][u] += 1;
        laplacian[v][v] += 1;
        laplacian[u][v] -= 1;
        laplacian[v][u] -= 1;
    }

    auto minor_det = [&](VertexSet removed) {
        std::vector<int> keep;
        for (int i = 0; i < n; ++i)
            if (!removed.test(i)) keep.push_back(i);
        std::vector<std::vector<BigInt>> sub(keep.size(), std::vector<BigInt>(keep.size()));
        for (std::size_t a = 0; a < keep.size(); ++a)
            for (std::size_t b = 0; b < keep.size(); ++b) sub[a][b] = laplacian[keep[a]][keep[b]];
        return detail::bareiss_determinant(std::move(sub));
    };

    BigInt trees = minor_det(VertexSet::single(local[t]));
    BigInt forests = minor_det(VertexSet::of({local[s], local[t]}));
    if (trees == 0) throw UnreachableTarget("no s-t path");
    return Rational(forests, trees);
}

// Lyons' bound Res_st/(1-q) <= tau_st; a lower bound on the exponential
// model's expectation, not on T itself.
template <class S>
Rational lower_bound_lyons_tau(const MultiGraph<S>& g, int s, int t, const Rational& q) {
    if (q < 0 || q >= 1) throw DomainError("bound requires 0 <= q < 1");
    return effective_resistance(g, s, t) / (Rational(1) - q);
}

struct BoundsReport {
    Rational lower_reliability;
    Rational lower_lyons_tau;
    Rational upper_distance;
    std::optional<Rational> exact_expectation;   // T_st at the given q
    std::optional<Rational> exact_exponential;   // tau_st = rho/(1-q)
};

// Builds a uniform copy of the structure at noninfection probability q.
template <class S>
MultiGraph<Rational> uniform_structure(const MultiGraph<S>& g, const Rational& q) {
    std::vector<Edge<Rational>> edges;
    edges.reserve(g.edges().size());
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v, Rational(1) - q});
    return MultiGraph<Rational>(g.vertex_names(), std::move(edges));
}

template <class S>
BoundsReport bounds_report(const MultiGraph<S>& g, int s, int t, const Rational& q,
                           bool with_exact = true, int max_states = kDefaultMaxStates) {
    BoundsReport report;
    report.lower_reliability = lower_bound_reliability(g, s, t, q);
    report.lower_lyons_tau = lower_bound_lyons_tau(g, s, t, q);
    report.upper_distance = upper_bound_distance(g, s, t, q);
    if (with_exact) {
        MultiGraph<Rational> uniform = uniform_structure(g, q);
        report.exact_expectation = expected_first_arrival(uniform, s, t, max_states);
        report.exact_exponential =
            spreading_resistance_st(uniform, s, t, max_states) / (Rational(1) - q);
    }
    return report;
}

struct ConjectureRow {
    Rational q;
    Rational tau;
    Rational expectation;
    bool violation = false;  // tau > T
};

struct ConjectureReport {
    std::vector<ConjectureRow> rows;
    bool any_violation = false;
};

// Compares tau = rho/(1-q) against the exact expectation across a q grid.
// Reports only; a violation is flagged, never asserted away.
template <class S>
ConjectureReport conjecture_scan(const MultiGraph<S>& g, int s, int t,
                                 const std::vector<Rational>& q_grid,
                                 int max_states = kDefaultMaxStates) {
    ConjectureReport report;
    Rational rho = spreading_resistance_st(uniform_structure(g, Rational(1, 2)), s, t, max_states);
    for (const Rational& q : q_grid) {
        if (q < 0 || q >= 1) throw DomainError("grid values must lie in [0,1)");
        ConjectureRow row;
        row.q = q;
        row.tau = rho / (Rational(1) - q);
        row.expectation = expected_first_arrival(uniform_structure(g, q), s, t, max_states);
        row.violation = row.tau > row.expectation;
        report.any_violation = report.any_violation || row.violation;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace arrival
