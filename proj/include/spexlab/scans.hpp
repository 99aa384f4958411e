#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spexlab/graph.hpp"
#include "spexlab/predicate.hpp"

namespace spexlab {

// ---------------------------------------------------------------------------
// Family scan around Y_r(n)

struct Lemma27Report {
    int r = 0;
    int n = 0;
    std::size_t configs_scanned = 0;
    double max_rho = 0.0;
    std::vector<int> argmax_parts; // (n1, n2, n3, ...) of the maximiser
    double rho_y = 0.0;
    /// rho(Y_r(n)) minus the best configuration not isomorphic to Y_r(n).
    std::optional<double> margin;
    bool argmax_is_Y = false;
};

/// Builds K_{n1,...,nr} on n-1 vertices plus a vertex u, with v in V_1 and
/// w in V_2: removes vw and joins u to v, w and every vertex of V_3..V_r.
/// Part vectors are (n1, n2, rest...); v = 0, w = n1, u = n - 1.
Graph lemma27_graph(const std::vector<int>& parts);

/// Scans all part-size vectors up to the symmetries n1 <-> n2 and permutations
/// of parts 3..r. argmax_is_Y needs the maximiser isomorphic to Y_r(n) and all
/// non-isomorphic configurations below it by more than `margin_tol`.
/// Throws FeasibilityError above `max_configs` configurations.
Lemma27Report lemma27_scan(int r, int n, double margin_tol = 1e-9, std::size_t max_configs = 200000);

// ---------------------------------------------------------------------------
// Local search

struct ClimbStep {
    std::string move; // "start", "add 3 7", "remove 3 7", "rotate u=3 v=7 S=[1,2]"
    double rho = 0.0;
    std::string graph6;
};

struct ClimbResult {
    Graph graph;
    std::vector<ClimbStep> trace;
    bool local_max = false; // stopped because no improving feasible move exists
    std::size_t moves_evaluated = 0;
};

/// Greedy ascent in rho. Each round evaluates every edge addition, edge
/// removal and rotation (u, v, S) with x_u >= x_v, where S is N(v) \ N[u] or a
/// single vertex of it; the best move whose rho gain exceeds tol and whose
/// result satisfies pred is taken. Throws InvalidInput if g0 violates pred.
ClimbResult hill_climb(const Graph& g0, const PredicateSpec& pred, int budget, double tol = 1e-9);

// ---------------------------------------------------------------------------
// Conjecture scans over small graphs

enum class ConjectureKind { nosal_book, liu_miao_U, sqrt_2m_bound };

std::optional<ConjectureKind> conjecture_from_name(const std::string& name);
std::string conjecture_name(ConjectureKind kind);

struct ConjectureOptions {
    int max_n = 7;
    int r = 2;  // sqrt_2m_bound only
    int k = 2;  // book size B_{r,k}; r is fixed to 2 for the other kinds
    double tol = 1e-9;
    int jobs = 1;
};

struct ScanEntry {
    std::string graph6;
    int n = 0;
    int m = 0;
    double rho = 0.0;
    double bound = 0.0;
    bool complete_bipartite = false;
};

struct LiuMiaoRow {
    int m = 0;
    std::string champion;
    double rho = 0.0;
    double rho_u = 0.0;
    bool champion_is_u = false;
    std::size_t graphs = 0;
};

struct ConjectureReport {
    ConjectureKind kind = ConjectureKind::nosal_book;
    ConjectureOptions options;
    std::size_t scanned = 0;            // graphs meeting the hypotheses
    std::vector<ScanEntry> violations;  // rho > bound + tol
    std::vector<ScanEntry> equality;    // |rho - bound| <= tol
    std::vector<LiuMiaoRow> by_size;    // liu_miao_U only
    /// nosal_book: every equality witness is complete bipartite and every
    /// K_{a,b} with a + b <= max_n is a witness.
    std::optional<bool> witnesses_exact;
};

bool is_complete_bipartite(const Graph& g);

/// Scans every graph with 1 <= n <= max_n vertices, no isolated vertices and
/// at least one edge that meets the kind's hypotheses:
///   nosal_book     B_{2,k}-free; bound sqrt(m)
///   liu_miao_U     non-bipartite and B_{2,k}-free; bound rho(U) for its m
///   sqrt_2m_bound  B_{r,k}-free; bound sqrt((1 - 1/r) 2m)
ConjectureReport conjecture_scan(ConjectureKind kind, const ConjectureOptions& opts);

} // namespace spexlab
