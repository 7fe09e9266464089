#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "arrival/multigraph.hpp"
#include "arrival/philox.hpp"

namespace arrival {

struct SimConfig {
    std::uint64_t seed = 1;
    int replicas = 1;
    std::uint64_t samples_per_replica = 100000;
    int hist_cap = 1024;  // arrival times above the cap land in the overflow bucket
};

struct SimEstimate {
    double mean = 0.0;
    double stderr_of_mean = 0.0;
    std::uint64_t n = 0;
    std::vector<std::uint64_t> histogram;  // index = arrival time, 0..hist_cap
    std::uint64_t overflow = 0;
};

namespace detail {

// Distinct sub-stream per (sampler, replica) pair, so different samplers on
// the same seed stay independent.
enum class StreamKind : std::uint64_t { Spread = 0, GeometricPath = 1, ExponentialPath = 2 };

inline Philox4x32 replica_rng(const SimConfig& cfg, StreamKind kind, int replica) {
    return Philox4x32(cfg.seed,
                      (static_cast<std::uint64_t>(kind) << 32) | static_cast<std::uint32_t>(replica));
}

template <class Sampler>
SimEstimate run_replicas(const SimConfig& cfg, StreamKind kind, Sampler&& one_sample) {
    if (cfg.replicas < 1 || cfg.samples_per_replica < 1)
        throw DomainError("replicas and samples_per_replica must be positive");
    SimEstimate est;
    est.histogram.assign(cfg.hist_cap + 1, 0);
    double sum = 0.0, sum_sq = 0.0;
    for (int r = 0; r < cfg.replicas; ++r) {
        Philox4x32 rng = replica_rng(cfg, kind, r);
        for (std::uint64_t i = 0; i < cfg.samples_per_replica; ++i) {
            double x = one_sample(rng);
            sum += x;
            sum_sq += x * x;
            auto bucket = static_cast<std::uint64_t>(x);
            if (x <= static_cast<double>(cfg.hist_cap)) ++est.histogram[bucket];
            else ++est.overflow;
        }
    }
    est.n = static_cast<std::uint64_t>(cfg.replicas) * cfg.samples_per_replica;
    est.mean = sum / static_cast<double>(est.n);
    if (est.n > 1) {
        double variance = (sum_sq - sum * sum / static_cast<double>(est.n)) /
                          static_cast<double>(est.n - 1);
        if (variance < 0.0) variance = 0.0;
        est.stderr_of_mean = std::sqrt(variance / static_cast<double>(est.n));
    }
    return est;
}

inline void require_reachable(const MultiGraph<double>& g, int s, int t) {
    if (!distance(g, s, t)) throw UnreachableTarget("target not reachable from source");
}

// Geometric on {1,2,...} with success probability p, by inverse transform.
inline std::uint64_t sample_geometric(Philox4x32& rng, double p) {
    if (p >= 1.0) return 1;
    double u = rng.next_open01();
    return static_cast<std::uint64_t>(std::ceil(std::log(u) / std::log1p(-p)));
}

// Dijkstra without a heap; the graphs here are desk scale.
template <class W>
W shortest_path(const MultiGraph<double>& g, int s, int t, const std::vector<W>& weight) {
    const int n = g.vertex_count();
    constexpr W inf = std::numeric_limits<W>::max();
    std::vector<W> dist(n, inf);
    std::vector<bool> done(n, false);
    dist[s] = W(0);
    for (int iter = 0; iter < n; ++iter) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!done[v] && dist[v] < inf && (best < 0 || dist[v] < dist[best])) best = v;
        if (best < 0) break;
        if (best == t) return dist[t];
        done[best] = true;
        for (int ei : g.incident(best)) {
            const auto& e = g.edges()[ei];
            int w = e.u == best ? e.v : e.u;
            if (dist[best] + weight[ei] < dist[w]) dist[w] = dist[best] + weight[ei];
        }
    }
    return dist[t];
}

}  // namespace detail

// Simulates the spread process itself: every edge with exactly one labelled
// endpoint fires independently with its own probability each step; the
// sample is the first step at which t is labelled.
inline SimEstimate simulate_spread(const MultiGraph<double>& g, int s, int t,
                                   const SimConfig& cfg) {
    detail::require_reachable(g, s, t);
    return detail::run_replicas(cfg, detail::StreamKind::Spread, [&](Philox4x32& rng) {
        if (s == t) return 0.0;
        VertexSet labelled = VertexSet::single(s);
        std::uint64_t step = 0;
        while (true) {
            ++step;
            VertexSet next = labelled;
            for (const auto& e : g.edges()) {
                bool lu = labelled.test(e.u), lv = labelled.test(e.v);
                if (lu == lv) continue;
                if (rng.next_open01() < e.p) next = next.with(lu ? e.v : e.u);
            }
            labelled = next;
            if (labelled.test(t)) return static_cast<double>(step);
        }
    });
}

// Draws an independent geometric length for every edge and measures the
// shortest s-t path; distributed identically to the spread arrival time.
inline SimEstimate sample_geometric_sp(const MultiGraph<double>& g, int s, int t,
                                       const SimConfig& cfg) {
    detail::require_reachable(g, s, t);
    std::vector<std::uint64_t> weight(g.edge_count());
    return detail::run_replicas(cfg, detail::StreamKind::GeometricPath, [&, weight](Philox4x32& rng) mutable {
        if (s == t) return 0.0;
        for (int e = 0; e < g.edge_count(); ++e)
            weight[e] = detail::sample_geometric(rng, g.edges()[e].p);
        return static_cast<double>(detail::shortest_path(g, s, t, weight));
    });
}

// Exponential edge weights with intensity p (Kulkarni's model); the sample is
// the real-valued shortest-path length.
inline SimEstimate sample_exponential_sp(const MultiGraph<double>& g, int s, int t, double p,
                                         const SimConfig& cfg) {
    detail::require_reachable(g, s, t);
    if (!(p > 0.0) || p > 1.0) throw DomainError("intensity must lie in (0,1]");
    std::vector<double> weight(g.edge_count());
    return detail::run_replicas(cfg, detail::StreamKind::ExponentialPath, [&, weight](Philox4x32& rng) mutable {
        if (s == t) return 0.0;
        for (int e = 0; e < g.edge_count(); ++e) weight[e] = -std::log(rng.next_open01()) / p;
        return detail::shortest_path(g, s, t, weight);
    });
}

}  // namespace arrival
