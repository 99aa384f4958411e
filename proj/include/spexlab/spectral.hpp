#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab {

struct SpectralOptions {
    double tol = 1e-10;
    std::size_t max_iterations = 1'000'000;
    std::uint64_t seed = 0;
    /// Extended-precision accumulation; used for tie re-checks at tol 1e-13.
    bool high_precision = false;

    static SpectralOptions precise() { return {1e-13, 1'000'000, 0, true}; }
};

struct SpectralResult {
    double rho = 0.0;
    /// Perron vector scaled so its largest entry is 1. On disconnected input it
    /// is supported on the component attaining rho and zero elsewhere.
    std::vector<double> vector;
    double residual = 0.0;
    std::size_t iterations = 0;
    bool disconnected = false;
};

/// Largest adjacency eigenvalue by power iteration on A + I.
/// Throws ConvergenceError if the residual stays above tol.
SpectralResult spectral_radius(const Graph& g, const SpectralOptions& opts = {});

/// Convenience wrapper returning only rho.
double rho(const Graph& g, const SpectralOptions& opts = {});

/// x^T A x / x^T x.
double rayleigh_quotient(const Graph& g, std::span<const double> x);

struct WilfReport {
    double bound = 0.0;
    double rho = 0.0;
    bool holds = false;
};

/// rho(G) <= (1 - 1/r) n for K_{r+1}-free G. Reports only; the caller is
/// responsible for the clique-freeness hypothesis.
WilfReport check_wilf(const Graph& g, int r, double tol = 1e-9);

struct DeletionReport {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
    bool equality = false;
};

/// rho(G) <= sqrt(rho(G - v)^2 + 2 d(v) - 1), with equality flagged within tol.
DeletionReport deletion_bound(const Graph& g, int v, double tol = 1e-9);

/// G - {vw : w in S} + {uw : w in S}; S must be a non-empty subset of N(v) \ N[u].
Graph rotate_edges(const Graph& g, int u, int v, std::span<const int> moved);

} // namespace spexlab
