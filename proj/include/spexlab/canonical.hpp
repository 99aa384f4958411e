#pragma once

#include <cstdint>
#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab {

struct CanonicalForm {
    Graph graph;
    /// Vertex v of the input becomes vertex position[v] of `graph`.
    std::vector<int> position;
};

/// Canonical representative of g's isomorphism class.
///
/// The representative minimises the upper-triangle bit string (graph6 column
/// order) over all vertex orders that respect the colour-refined degree
/// partition. The search is depth-first with prefix pruning; interchangeable
/// twin vertices (N(x) \ {y} = N(y) \ {x}) are branched on only once.
CanonicalForm canonical_form(const Graph& g);

inline Graph canonical_graph(const Graph& g) { return canonical_form(g).graph; }

bool are_isomorphic(const Graph& a, const Graph& b);

/// Upper triangle in graph6 bit order packed into an integer, first bit most
/// significant. Requires n <= 11.
std::uint64_t pack_upper_triangle(const Graph& g);
Graph unpack_upper_triangle(int n, std::uint64_t code);

/// pack_upper_triangle(canonical_graph(g)); n <= 11.
inline std::uint64_t canonical_code(const Graph& g) { return pack_upper_triangle(canonical_graph(g)); }

} // namespace spexlab
