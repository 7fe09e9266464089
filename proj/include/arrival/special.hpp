#pragma once

#include <vector>

#include "arrival/multigraph.hpp"

namespace arrival {

// Bundle of parallel paths H(m_1..m_n) between two terminals.
struct ParallelPathSpec {
    std::vector<int> lengths;

    explicit ParallelPathSpec(std::vector<int> m) : lengths(std::move(m)) {
        if (lengths.empty()) throw DomainError("at least one path required");
        for (int len : lengths)
            if (len < 1) throw DomainError("path lengths must be positive");
    }
};

// Expected arrival time on K_n from an i-vertex labelled set to a fixed
// target, via the cardinality-indexed recurrence
//   T_i = (1/(1-q^{i(n-i)})) [1 + sum_{j>i} C(n-1-i, j-i) q^{i(n-j)} (1-q^i)^{j-i} T_j]
// with T_{n-1} = 1/(1-q^{n-1}). i = 1 gives T_st(K_n).
template <class S>
S kn_expected(int n, const S& q, int i = 1) {
    if (n < 2) throw DomainError("complete graph needs n >= 2");
    if (i < 1 || i > n - 1) throw DomainError("labelled-set size must lie in [1, n-1]");
    if (!(q > S(0)) || !(q < S(1))) throw DomainError("q must lie in (0,1)");

    std::vector<S> t(n, S(0));
    t[n - 1] = S(1) / (S(1) - pow_scalar(q, static_cast<unsigned long>(n - 1)));
    for (int a = n - 2; a >= i; --a) {
        S acc(1);
        S one_minus_qa = S(1) - pow_scalar(q, static_cast<unsigned long>(a));
        for (int j = a + 1; j <= n - 1; ++j) {
            S coeff = scalar_from_rational<S>(Rational(binomial(n - 1 - a, j - a)));
            acc += coeff * pow_scalar(q, static_cast<unsigned long>(a) * (n - j)) *
                   pow_scalar(one_minus_qa, static_cast<unsigned long>(j - a)) * t[j];
        }
        t[a] = acc / (S(1) - pow_scalar(q, static_cast<unsigned long>(a) * (n - a)));
    }
    return t[i];
}

// s-t spreading resistance of K_n: H_{n-1} / (n-1).
inline Rational kn_resistance(int n) {
    if (n < 2) throw DomainError("complete graph needs n >= 2");
    Rational harmonic(0);
    for (int k = 1; k <= n - 1; ++k) harmonic += Rational(1, k);
    return harmonic / (n - 1);
}

// s-t spreading resistance of H(m_1..m_n):
//   sum_{j>=0} sum_{i_1+..+i_n=j, i_k<m_k} multinomial(j; i_1..i_n) / n^{j+1},
// accumulated over a common denominator n^{J+1}, J = sum (m_k - 1).
inline Rational parallel_paths_resistance(const ParallelPathSpec& spec) {
    const int n = static_cast<int>(spec.lengths.size());
    int j_max = 0;
    for (int len : spec.lengths) j_max += len - 1;

    // multinomial_total[j] = sum over admissible compositions of j
    std::vector<BigInt> multinomial_total(j_max + 1, BigInt(0));
    BigInt j_factorial(1);
    for (int j = 0; j <= j_max; ++j) {
        if (j > 0) j_factorial *= j;
        // enumerate i_1..i_n with sum j, i_k < m_k
        auto recurse = [&](auto&& self, int k, int remaining, BigInt denom) -> void {
            if (k == n - 1) {
                if (remaining < spec.lengths[k]) multinomial_total[j] += j_factorial / (denom * factorial(remaining));
                return;
            }
            int cap = spec.lengths[k] - 1;
            if (cap > remaining) cap = remaining;
            for (int i = 0; i <= cap; ++i) self(self, k + 1, remaining - i, denom * factorial(i));
        };
        recurse(recurse, 0, j, BigInt(1));
    }

    BigInt big_n(n);
    BigInt numerator(0);
    for (int j = 0; j <= j_max; ++j)
        numerator += multinomial_total[j] * boost::multiprecision::pow(big_n, static_cast<unsigned>(j_max - j));
    return Rational(numerator, boost::multiprecision::pow(big_n, static_cast<unsigned>(j_max + 1)));
}

// On a tree the two endpoints are joined by a unique path, so the expected
// arrival time is d(s,t)/p.
template <class S>
S tree_expected(const MultiGraph<S>& g, int s, int t, const S& p) {
    if (!(p > S(0)) || p > S(1)) throw DomainError("p must lie in (0,1]");
    const int n = g.vertex_count();
    if (g.edge_count() != n - 1) throw NotATree("a tree on n vertices has exactly n-1 edges");
    // connected with n-1 edges => acyclic (a parallel pair already counts as a cycle)
    VertexSet reached = VertexSet::single(0);
    while (true) {
        VertexSet next = reached | open_neighborhood(g, reached);
        if (next == reached) break;
        reached = next;
    }
    if (reached != g.vertices()) throw NotATree("graph is not connected");
    return S(*distance(g, s, t)) / p;
}

}  // namespace arrival
