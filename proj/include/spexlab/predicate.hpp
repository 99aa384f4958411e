#pragma once

#include <optional>
#include <string>
#include <utility>

#include "spexlab/graph.hpp"

namespace spexlab {

/// Constraints defining a feasible set for the searches.
struct PredicateSpec {
    std::optional<std::pair<int, int>> forbid_book; // (r, k): B_{r,k}-free
    std::optional<int> require_non_r_partite;       // chi > r
    bool require_connected = false;
    std::optional<int> forbid_clique; // K_q-free

    bool any() const
    {
        return forbid_book || require_non_r_partite || require_connected || forbid_clique;
    }
    /// Human-readable form, e.g. "B_{3,1}-free, non-3-partite".
    std::string describe() const;
    /// Throws InvalidInput for out-of-range parameters.
    void validate() const;

    bool operator==(const PredicateSpec&) const = default;
};

/// Name of the first constraint g violates, or nullopt if g satisfies all.
/// Checks run cheapest first; non-r-partiteness is decided exactly.
std::optional<std::string> first_violation(const Graph& g, const PredicateSpec& pred);

inline bool satisfies(const Graph& g, const PredicateSpec& pred) { return !first_violation(g, pred); }

} // namespace spexlab
