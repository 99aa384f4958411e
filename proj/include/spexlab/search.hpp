#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spexlab/graph.hpp"
#include "spexlab/predicate.hpp"

namespace spexlab {

enum class Objective { rho, edges };

std::string objective_name(Objective o);

struct Champion {
    std::string graph6; // canonical representative
    double value = 0.0; // rho at high precision, or the edge count
};

/// A graph whose scan-precision value was within the tie tolerance of the
/// maximum. Champions are the entries that survive the precise re-check.
struct TieEntry {
    std::string graph6;
    double scan_value = 0.0;
    double precise_value = 0.0;
};

struct SearchOptions {
    int jobs = 1;
    double scan_tol = 1e-10;      // power-iteration residual during the scan
    double tie_tol = 1e-8;        // candidates within this of the scan maximum
    double precise_tie_tol = 1e-11; // champions within this after the re-check
};

struct SearchReport {
    int n = 0;
    PredicateSpec predicate;
    Objective objective = Objective::rho;
    std::vector<Champion> champions; // ordered by canonical code
    /// Best champion value minus best non-champion value; empty when every
    /// feasible graph is a champion.
    std::optional<double> gap_to_runner_up;
    bool exhaustive = false;
    std::size_t graphs_scanned = 0;
    std::size_t feasible_count = 0;
    std::vector<TieEntry> ties_within_tol;
};

/// Maximum spectral radius over all isomorphism classes of order n that
/// satisfy pred. Deterministic for any job count.
SearchReport spex_search(int n, const PredicateSpec& pred, const SearchOptions& opts = {});

/// Maximum edge count over the same feasible set; ties are exact.
SearchReport ex_search(int n, const PredicateSpec& pred, const SearchOptions& opts = {});

/// One row of a full census dump.
struct CensusRow {
    std::string graph6;
    int n = 0;
    int m = 0;
    double rho = 0.0;
    int chi = 0;
    bool connected = false;
    bool feasible = false;
};

/// Every isomorphism class of order n with its invariants; `feasible` marks
/// the graphs satisfying pred. Rows are in canonical-code order.
std::vector<CensusRow> census(int n, const PredicateSpec& pred, int jobs = 1);

/// True if the report has exactly one champion and it is isomorphic to h.
bool unique_champion_is(const SearchReport& rep, const Graph& h);

} // namespace spexlab
