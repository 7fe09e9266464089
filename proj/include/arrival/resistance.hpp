#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "arrival/exact.hpp"
#include "arrival/multigraph.hpp"

namespace arrival {

namespace detail {

// Shared solver for the edge-count recursions
//   rho_A = (1/|(A,N(A))|) [unit + sum_c |(A,{c})| rho_{A+c}],   rho = 0 once
// t is covered. With unit = 1 this is the spreading resistance; with
// unit = 1/p it is the expected shortest-path length of the exponential
// edge-weight model.
template <class R, class S>
R edge_count_recursion(const MultiGraph<S>& g, VertexSet a0, int t, const R& unit,
                       int max_states) {
    std::vector<VertexSet> states = reachable_states(g, a0, t, max_states);
    if (states.empty()) return R(0);  // t already in a0

    std::unordered_map<std::uint32_t, int> index;
    index.reserve(states.size());
    for (std::size_t i = 0; i < states.size(); ++i)
        index.emplace(states[i].bits, static_cast<int>(i));

    std::vector<R> value(states.size(), R(0));
    for (int i = static_cast<int>(states.size()) - 1; i >= 0; --i) {
        VertexSet a = states[i];
        long total = 0;
        R acc = unit;
        for_each_vertex(open_neighborhood(g, a), [&](int c) {
            int mult = edge_multiplicity(g, a, c);
            total += mult;
            if (c == t) return;  // absorbing sets contribute 0
            acc += R(mult) * value[index.at(a.with(c).bits)];
        });
        value[i] = acc / R(total);
    }
    return value[index.at(a0.bits)];
}

}  // namespace detail

// A-t spreading resistance: the q -> 1 limit of (1-q) T_At. A pure graph
// functional (edge multiplicities only), always computed exactly.
template <class S>
Rational spreading_resistance(const MultiGraph<S>& g, VertexSet a0, int t,
                              int max_states = kDefaultMaxStates) {
    if (!g.uniform_p())
        throw NonUniformProbabilities("spreading resistance requires a uniform-probability graph");
    return detail::edge_count_recursion<Rational>(g, a0, t, Rational(1), max_states);
}

template <class S>
Rational spreading_resistance_st(const MultiGraph<S>& g, int s, int t,
                                 int max_states = kDefaultMaxStates) {
    return spreading_resistance(g, VertexSet::single(s), t, max_states);
}

// Expected length of a shortest A-t path when every edge carries an
// independent exponential weight with intensity p. Equals resistance / p.
template <class S>
S exponential_expectation(const MultiGraph<S>& g, VertexSet a0, int t, const S& p,
                          int max_states = kDefaultMaxStates) {
    if (!g.uniform_p())
        throw NonUniformProbabilities("exponential model requires a uniform-probability graph");
    if (!(p > S(0)) || p > S(1)) throw DomainError("intensity must lie in (0,1]");
    return detail::edge_count_recursion<S>(g, a0, t, S(S(1) / p), max_states);
}

// Diagnostic for the limit definition: evaluates (1-q) T_st at q = 1-epsilon
// (exactly, on a uniform copy of the structure) next to the resistance.
template <class S>
std::pair<Rational, Rational> resistance_limit_check(const MultiGraph<S>& g, int s, int t,
                                                     const Rational& epsilon,
                                                     int max_states = kDefaultMaxStates) {
    if (!(epsilon > 0) || !(epsilon < 1)) throw DomainError("epsilon must lie in (0,1)");
    std::vector<Edge<Rational>> edges;
    edges.reserve(g.edges().size());
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v, epsilon});
    MultiGraph<Rational> uniform(g.vertex_names(), std::move(edges));

    Rational rho = spreading_resistance(uniform, VertexSet::single(s), t, max_states);
    if (s == t) return {Rational(0), rho};
    Rational expectation = expected_first_arrival(uniform, s, t, max_states);
    return {epsilon * expectation, rho};
}

}  // namespace arrival
