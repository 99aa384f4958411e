#pragma once

#include <optional>
#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab {

/// Vertices of some q-clique, if one exists.
std::optional<std::vector<int>> find_clique(const Graph& g, int q);

inline bool contains_clique(const Graph& g, int q) { return find_clique(g, q).has_value(); }

/// Size of a maximum clique (branch and bound with greedy-colouring bound).
int clique_number(const Graph& g);

/// Witness for B_{r,k} ⊆ G: an r-clique and k common neighbours outside it.
struct BookWitness {
    std::vector<int> clique;
    std::vector<int> pages;
};

/// B_{r,k} ⊆ G iff some r-clique has at least k common neighbours.
/// Cliques are enumerated in degeneracy order by bitset intersection.
std::optional<BookWitness> find_generalized_book(const Graph& g, int r, int k);

inline bool contains_generalized_book(const Graph& g, int r, int k)
{
    return find_generalized_book(g, r, k).has_value();
}

/// Smallest-last (degeneracy) vertex order.
std::vector<int> degeneracy_order(const Graph& g);

} // namespace spexlab
