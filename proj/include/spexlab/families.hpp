#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab {

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
/// K_{1,n-1} with vertex 0 as the centre.
Graph star_graph(int n);

/// Complete multipartite graph; part i occupies the next parts[i] indices.
Graph make_multipartite(const std::vector<int>& parts);

/// Part sizes of T_r(n): the n mod r larger parts come first.
std::vector<int> turan_parts(int r, int n);
Graph turan(int r, int n);

/// G ∨ H with G's vertices first.
Graph join(const Graph& g, const Graph& h);

/// B_{r,k} = K_r ∨ kK_1; clique on 0..r-1, pages r..r+k-1.
Graph generalized_book(int r, int k);

/// Vertex layout of y_graph(r, n).
struct YGraphLayout {
    std::vector<std::vector<int>> parts; ///< Turán parts in block order
    std::size_t t1 = 0;                  ///< index of T_1 in `parts`
    std::size_t t2 = 0;                  ///< index of T_2 in `parts`
    int u = 0;                           ///< first vertex of T_2
    int w = 0;                           ///< second vertex of T_2
    int v = 0;                           ///< first vertex of T_1, u's only T_1-neighbour
};

YGraphLayout y_graph_layout(int r, int n);

/// T_r(n) plus an edge uw inside a largest part T_2, with u keeping only the
/// first vertex of a smallest part T_1 and w losing exactly that vertex.
Graph y_graph(int r, int n);

/// Triangle on {0,1,2} with m-3 pendant vertices attached to vertex 0.
Graph u_graph(int m);

enum class FamilyTag { complete, multipartite, turan, book, ygraph, ugraph, join, union_ };

struct FamilySpec {
    FamilyTag tag = FamilyTag::complete;
    int r = 0;
    int k = 0;
    int n = 0;
    int m = 0;
    std::vector<int> parts;
    /// Operands for join / union.
    std::vector<FamilySpec> operands;
};

Graph make_family(const FamilySpec& spec);

std::optional<FamilyTag> family_from_name(const std::string& name);
std::string family_name(FamilyTag tag);

} // namespace spexlab
