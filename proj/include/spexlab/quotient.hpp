#pragma once

#include <optional>
#include <string>

#include "spexlab/graph.hpp"
#include "spexlab/intpoly.hpp"
#include "spexlab/partition.hpp"

namespace spexlab {

/// Coarsest equitable partition refining `initial` (colour refinement).
/// A cell that splits is replaced in place by its pieces, ordered by their
/// neighbour-count signature; cells that do not split keep their position.
Partition equitable_refine(const Graph& g, const Partition& initial);

bool is_equitable(const Graph& g, const Partition& p);

/// b_ij = |N(v) ∩ V_j| for any v in V_i. Throws EquitabilityError if p is
/// not equitable, naming the cell pair and two disagreeing vertices.
IntMatrix quotient_matrix(const Graph& g, const Partition& p);

/// Equitable partition of y_graph(r, n): {v}, {u}, {w}, T_1 \ {v},
/// T_2 \ {u, w}, then every remaining Turán part in block order. For r = 3
/// this is the six-cell partition behind the 729-scaled polynomials; it
/// requires n >= 9 there so that T_2 \ {u, w} is non-empty. For r >= 4 an
/// empty T_2 \ {u, w} cell is dropped.
Partition y_graph_partition(int r, int n);

/// 729 times the closed-form characteristic polynomial of the six-cell
/// quotient of y_graph(3, n), selected by n mod 3. Requires n >= 6.
IntPoly lemma32_polynomial(int n);

struct Lemma32Report {
    int n = 0;
    bool poly_match = false;
    /// First coefficient index where the computed and closed-form
    /// polynomials differ (when poly_match is false).
    std::optional<int> mismatch_index;
    IntPoly computed;
    IntPoly expected;
    /// 12^6 * (729 f)(2n/3 - 7/12), an exact integer.
    BigInt scaled_value_at_bound;
    bool sign_ok = false;
    double rho_quotient = 0.0;
    double rho_dense = 0.0;
    bool rho_agree = false;
    /// rho_dense > 2n/3 - 7/12.
    bool above_bound = false;

    bool passed() const { return poly_match && sign_ok && rho_agree && above_bound; }
};

/// Exact characteristic polynomial of the quotient of y_graph(3, n) compared
/// coefficient by coefficient with lemma32_polynomial(n); exact sign at
/// 2n/3 - 7/12; largest root versus the dense spectral radius. n >= 9.
Lemma32Report verify_lemma32(int n, double agree_tol = 1e-8);

struct YQuotientReport {
    int r = 0;
    int n = 0;
    std::size_t cells = 0;
    IntPoly char_poly;
    double rho_quotient = 0.0;
    double rho_dense = 0.0;
    bool rho_agree = false;
    /// (r-1)n/r - 2/r - r/(4n) for r >= 4, 2n/3 - 7/12 for r = 3.
    double lower_bound = 0.0;
    bool above_bound = false;

    bool passed() const { return rho_agree && above_bound; }
};

/// Generic pipeline for any r >= 3: build y_graph(r, n), check the partition
/// is equitable, take the quotient's characteristic polynomial and compare
/// its largest root with the dense spectral radius, then test the lower
/// bound on rho(Y_r(n)).
YQuotientReport verify_y_quotient(int r, int n, double agree_tol = 1e-8, double margin = 1e-8);

} // namespace spexlab
