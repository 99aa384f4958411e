#pragma once

#include <optional>
#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab {

/// Proper colouring with colours 0..r-1, if one exists. Exact: backtracking in
/// DSATUR order, new colours opened only in increasing order.
std::optional<std::vector<int>> find_r_coloring(const Graph& g, int r);

inline bool is_r_colorable(const Graph& g, int r) { return find_r_coloring(g, r).has_value(); }

bool is_proper_coloring(const Graph& g, const std::vector<int>& colors);

/// Greedy DSATUR colouring (an upper bound for chi).
std::vector<int> dsatur_coloring(const Graph& g);

/// Exact chromatic number; exponential in the worst case, meant for n up to ~60.
int chromatic_number(const Graph& g);

/// An edge whose removal lowers chi, if one exists. Throws PreconditionError
/// on an edgeless graph.
std::optional<Edge> find_critical_edge(const Graph& g);

inline bool is_color_critical(const Graph& g) { return find_critical_edge(g).has_value(); }

} // namespace spexlab
