#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab {

using Rng = std::mt19937_64;

/// G(n, p).
Graph random_graph(int n, double p, Rng& rng);
/// A uniformly attached random tree plus G(n, p) edges; always connected.
Graph random_connected_graph(int n, double p, Rng& rng);
/// Random r-partite graph: vertices get random parts (every part non-empty
/// when n >= r), cross pairs are edges with probability p.
Graph random_r_partite(int n, int r, double p, Rng& rng);

/// Outcome of a randomised property sweep.
struct SweepReport {
    std::string name;
    std::size_t checked = 0;
    std::size_t failures = 0;
    /// Smallest observed slack (bound minus value, or rho increase). Negative
    /// slack on a failing check.
    double worst_margin = 0.0;
    /// Up to five failing instances as "graph6 ..." descriptions.
    std::vector<std::string> examples;
    /// Sweep-specific counters, e.g. equality cases seen.
    std::size_t special = 0;
    bool passed() const { return failures == 0 && checked > 0; }
};

/// rho(G) <= (1 - 1/r) n on random r-partite graphs, r cycling through rs,
/// n uniform in [1, n_max].
SweepReport wilf_sweep(std::span<const int> rs, int n_max, int trials, std::uint64_t seed);

/// rho(G) <= sqrt(rho(G - v)^2 + 2 d(v) - 1) on random (G, v) pairs mixing
/// complete graphs, stars and random connected graphs. A check fails if the
/// bound fails or the equality flag disagrees with "G complete, or G a star
/// and d(v) = 1". `special` counts detected equality cases.
SweepReport deletion_sweep(int n_max, int trials, std::uint64_t seed);

/// Random connected G, vertices u, v with x_u >= x_v and a random non-empty
/// S of N(v) \ N[u]; fails unless rho rises by more than margin.
SweepReport rotation_sweep(int n_max, int trials, std::uint64_t seed, double margin = 1e-9);

/// x^T A x / x^T x <= rho + tol for random vectors on a random corpus.
SweepReport rayleigh_sweep(int graphs, int vectors_per_graph, std::uint64_t seed, double tol = 1e-9);

/// e(Y_r(n)) = e(T_r(n)) - floor(n/r) + 1 and
/// e(Y_r(n)) >= (1 - 1/r) n^2 / 2 - n/r - r/8 + 1 for n in [2r, n_max].
SweepReport lemma28_sweep(int r, int n_max);

} // namespace spexlab
