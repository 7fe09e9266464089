#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "arrival/multigraph.hpp"

namespace arrival {

inline constexpr int kDefaultMaxStates = 1 << 22;

// One-step probability that the labelled set grows from a exactly to b.
// Nonzero only for a <= b <= a + N(a): edges from a to N(a)\b must all stay
// silent, and every vertex of b\a must receive the label along at least one
// of its edges into a.
template <class S>
S transition_probability(const MultiGraph<S>& g, VertexSet a, VertexSet b) {
    if (!b.contains(a)) throw NotSuperset("transition requires a subset of b");
    VertexSet nbhd = open_neighborhood(g, a);
    if (!(a | nbhd).contains(b)) return S(0);

    S prob(1);
    for_each_vertex(nbhd, [&](int v) {
        S q = noninfection_product(g, a, v);
        if (b.test(v)) prob *= S(1) - q;
        else prob *= q;
    });
    return prob;
}

template <class S>
struct Transition {
    std::int32_t target;  // state index; strict superset or absorbed
    S prob;
};

// Subsets reachable from a0 by repeated neighbor additions, excluding any
// set containing t, sorted by (popcount, bits). This order is a linear
// extension of inclusion, shared by the arrival-time and resistance solvers.
template <class S>
std::vector<VertexSet> reachable_states(const MultiGraph<S>& g, VertexSet a0, int t,
                                        int max_states = kDefaultMaxStates) {
    if (a0.empty()) throw DomainError("source set must be nonempty");
    if (t < 0 || t >= g.vertex_count()) throw DomainError("target vertex out of range");

    // Saturation check: the closure of a0 must cover t.
    VertexSet closure = a0;
    while (true) {
        VertexSet next = closure | open_neighborhood(g, closure);
        if (next == closure) break;
        closure = next;
    }
    if (!closure.test(t)) throw UnreachableTarget("target not reachable from source set");

    if (a0.test(t)) return {};  // source is already absorbed

    std::vector<VertexSet> states{a0};
    std::unordered_map<std::uint32_t, bool> seen{{a0.bits, true}};
    for (std::size_t head = 0; head < states.size(); ++head) {
        VertexSet a = states[head];
        VertexSet nbhd = open_neighborhood(g, a);
        for_each_subset(nbhd, [&](VertexSet sub) {
            if (sub.empty()) return;
            VertexSet b = a | sub;
            if (b.test(t)) return;  // collapsed into the absorbed state
            if (seen.emplace(b.bits, true).second) states.push_back(b);
        });
        if (static_cast<int>(states.size()) > max_states)
            throw StateSpaceExceeded("state space exceeds " + std::to_string(max_states));
    }
    std::sort(states.begin(), states.end(), [](VertexSet a, VertexSet b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a.bits < b.bits;
    });
    return states;
}

// The Markov chain of labelled sets restricted to states reachable from the
// source, with every set containing the target collapsed into one absorbing
// state (index state_count()-1 == absorbed_index()).
template <class S>
class StateSpace {
public:
    StateSpace(MultiGraph<S> g, VertexSet a0, int t, int max_states = kDefaultMaxStates)
        : graph_(std::move(g)), source_set_(a0), target_(t) {
        std::vector<VertexSet> sets = reachable_states(graph_, a0, t, max_states);
        states_ = std::move(sets);

        std::unordered_map<std::uint32_t, std::int32_t> index;
        index.reserve(states_.size());
        for (std::size_t i = 0; i < states_.size(); ++i)
            index.emplace(states_[i].bits, static_cast<std::int32_t>(i));

        const std::int32_t absorbed = absorbed_index();
        source_index_ = states_.empty() ? absorbed : index.at(a0.bits);

        self_loop_.assign(states_.size(), S(0));
        transitions_.resize(states_.size());
        for (std::size_t i = 0; i < states_.size(); ++i) {
            VertexSet a = states_[i];
            VertexSet nbhd = open_neighborhood(graph_, a);
            std::vector<int> frontier;
            std::vector<S> stay;  // noninfection product per frontier vertex
            for_each_vertex(nbhd, [&](int v) {
                frontier.push_back(v);
                stay.push_back(noninfection_product(graph_, a, v));
            });

            std::unordered_map<std::int32_t, S> acc;
            for_each_subset(nbhd, [&](VertexSet sub) {
                S prob(1);
                for (std::size_t k = 0; k < frontier.size(); ++k) {
                    if (sub.test(frontier[k])) prob *= S(1) - stay[k];
                    else prob *= stay[k];
                }
                if (sub.empty()) {
                    self_loop_[i] = prob;
                    return;
                }
                VertexSet b = a | sub;
                std::int32_t j = b.test(target_) ? absorbed : index.at(b.bits);
                auto [it, fresh] = acc.emplace(j, prob);
                if (!fresh) it->second += prob;
            });

            auto& out = transitions_[i];
            out.reserve(acc.size());
            for (auto& [j, p] : acc) out.push_back({j, std::move(p)});
            std::sort(out.begin(), out.end(),
                      [](const Transition<S>& x, const Transition<S>& y) { return x.target < y.target; });
        }
    }

    const MultiGraph<S>& graph() const { return graph_; }
    VertexSet source_set() const { return source_set_; }
    int target() const { return target_; }

    // Number of non-absorbed states; the absorbed state sits one past them.
    int mask_state_count() const { return static_cast<int>(states_.size()); }
    std::int32_t absorbed_index() const { return static_cast<std::int32_t>(states_.size()); }
    std::int32_t source_index() const { return source_index_; }

    VertexSet state(int i) const { return states_[i]; }
    const std::vector<Transition<S>>& transitions(int i) const { return transitions_[i]; }
    const S& self_loop(int i) const { return self_loop_[i]; }

private:
    MultiGraph<S> graph_;
    VertexSet source_set_;
    int target_;
    std::vector<VertexSet> states_;
    std::int32_t source_index_ = 0;
    std::vector<std::vector<Transition<S>>> transitions_;
    std::vector<S> self_loop_;
};

template <class S>
StateSpace<S> build_state_space(const MultiGraph<S>& g, VertexSet a0, int t,
                                int max_states = kDefaultMaxStates) {
    return StateSpace<S>(g, a0, t, max_states);
}

// Expected first arrival time, solved in reverse inclusion order:
//   T_A = (1 + sum_{C > A} P(A,C) T_C) / (1 - P(A,A)),  T = 0 once t is covered.
template <class S>
S expected_arrival(const StateSpace<S>& space) {
    const int n = space.mask_state_count();
    std::vector<S> value(n + 1, S(0));  // value[absorbed] = 0
    for (int i = n - 1; i >= 0; --i) {
        S acc(1);
        for (const auto& tr : space.transitions(i)) acc += tr.prob * value[tr.target];
        value[i] = acc / (S(1) - space.self_loop(i));
    }
    S result = value[space.source_index()];
    if constexpr (!scalar_traits<S>::exact) {
        // the arrival time is at least the hop distance; a float solve that
        // breaks this has lost accuracy
        int d = space.graph().vertex_count();
        for_each_vertex(space.source_set(), [&](int v) {
            if (auto dv = distance(space.graph(), v, space.target()); dv && *dv < d) d = *dv;
        });
        if (to_double(result) < d - 1e-9 * (1.0 + to_double(result)))
            throw DomainError("float expectation fell below the distance lower bound");
    }
    return result;
}

template <class S>
struct ArrivalPmf {
    std::vector<S> probs;  // probs[n] = Pr(Z = n), n = 0..N
    S tail;                // 1 - sum(probs)
};

// Distribution of the first arrival time up to n_max, by forward dynamic
// programming on Pr(Z_A = n) = sum_C P(A,C) Pr(Z_C = n-1).
template <class S>
ArrivalPmf<S> arrival_pmf(const StateSpace<S>& space, int n_max) {
    if (n_max < 0) throw DomainError("n_max must be nonnegative");
    const int n = space.mask_state_count();
    const int source = space.source_index();

    std::vector<S> cur(n + 1, S(0));
    cur[space.absorbed_index()] = S(1);  // Pr(Z = 0) = 1 only when absorbed

    ArrivalPmf<S> pmf;
    pmf.probs.reserve(n_max + 1);
    pmf.probs.push_back(cur[source]);
    std::vector<S> next(n + 1, S(0));
    for (int step = 1; step <= n_max; ++step) {
        for (int i = 0; i < n; ++i) {
            S acc = space.self_loop(i) * cur[i];
            for (const auto& tr : space.transitions(i)) acc += tr.prob * cur[tr.target];
            next[i] = acc;
        }
        next[space.absorbed_index()] = S(0);
        cur.swap(next);
        pmf.probs.push_back(cur[source]);
    }
    S total(0);
    for (const auto& p : pmf.probs) total += p;
    pmf.tail = S(1) - total;
    return pmf;
}

// Extends n_max by doubling until the truncated tail drops below tail_target
// (or n_cap is hit), so float-mode callers get a <= 1e-9 tail by default.
template <class S>
ArrivalPmf<S> arrival_pmf_auto(const StateSpace<S>& space, double tail_target = 1e-9,
                               int n_cap = 1 << 14) {
    int n_max = 64;
    while (true) {
        ArrivalPmf<S> pmf = arrival_pmf(space, n_max);
        if (to_double(pmf.tail) < tail_target || n_max >= n_cap) return pmf;
        n_max *= 2;
    }
}

// Numeric value of the arrival-time OGF  Phi_A(z) = sum_n Pr(Z_A = n) z^n,
// via Phi_A = z sum_{C > A} P(A,C) Phi_C / (1 - z P(A,A)), Phi = 1 at the
// absorbing state.
template <class S>
S ogf_eval(const StateSpace<S>& space, const S& z) {
    const int n = space.mask_state_count();
    std::vector<S> phi(n + 1, S(0));
    phi[space.absorbed_index()] = S(1);
    for (int i = n - 1; i >= 0; --i) {
        if (abs_scalar(S(z * space.self_loop(i))) >= S(1))
            throw DivergentDiagonal("|z * P(A,A)| >= 1");
        S acc(0);
        for (const auto& tr : space.transitions(i)) acc += tr.prob * phi[tr.target];
        phi[i] = z * acc / (S(1) - z * space.self_loop(i));
    }
    return phi[space.source_index()];
}

// Convenience wrappers for single-vertex source queries.
template <class S>
S expected_first_arrival(const MultiGraph<S>& g, int s, int t,
                         int max_states = kDefaultMaxStates) {
    return expected_arrival(build_state_space(g, VertexSet::single(s), t, max_states));
}

}  // namespace arrival
