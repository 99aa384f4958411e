#pragma once

#include <cstdint>
#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab {

inline constexpr int kMaxEnumerationOrder = 10;

/// Canonical codes (see canonical_code) of every isomorphism class of graphs
/// on n vertices, sorted ascending. Graphs are generated by adding a
/// minimum-degree vertex to each class of order n-1 and deduplicated by
/// canonical code; work is split over `jobs` threads with identical output.
/// Throws FeasibilityError for n > 10.
std::vector<std::uint64_t> enumerate_codes(int n, int jobs = 1);

/// One canonical representative per isomorphism class, in code order.
std::vector<Graph> enumerate_graphs(int n, int jobs = 1);

} // namespace spexlab
