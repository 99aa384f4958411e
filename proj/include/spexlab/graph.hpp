#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "spexlab/bitset.hpp"

namespace spexlab {

using Edge = std::pair<int, int>;

class GraphBuilder;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as n bit-packed rows; row v holds N(v). The rows are
/// kept symmetric and loop-free, so every edge appears twice in the bit
/// matrix. Edits go through GraphBuilder and produce a new value.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const Edge> edges);

    int order() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_; }
    int words_per_row() const noexcept { return words_; }

    bool adjacent(int u, int v) const noexcept
    {
        return (bits_[static_cast<std::size_t>(u) * words_ + v / kWordBits] >> (v % kWordBits)) & 1U;
    }

    std::span<const Word> row(int v) const noexcept
    {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
    }

    int degree(int v) const noexcept;
    std::vector<int> degrees() const;
    VertexSet neighbors(int v) const { return VertexSet(n_, row(v)); }
    std::vector<Edge> edges() const;

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;
    Graph without_vertex(int v) const;

    /// Subgraph induced on `vertices`; vertex vertices[i] becomes i.
    Graph induced(std::span<const int> vertices) const;

    /// Same graph with vertex i renamed to new_label[i].
    Graph relabeled(std::span<const int> new_label) const;

    bool operator==(const Graph& o) const noexcept
    {
        return n_ == o.n_ && bits_ == o.bits_;
    }

private:
    friend class GraphBuilder;

    int n_ = 0;
    int words_ = 0;
    std::size_t edges_ = 0;
    std::vector<Word> bits_;
};

/// Mutable staging area for building a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    explicit GraphBuilder(const Graph& g);

    int order() const noexcept { return g_.n_; }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const noexcept { return g_.adjacent(u, v); }

    Graph build() &&;
    Graph build() const&;

private:
    void set(int u, int v, bool on) noexcept;
    void check_pair(int u, int v) const;

    Graph g_;
};

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Disjoint union with g's vertices first.
Graph disjoint_union(const Graph& g, const Graph& h);

} // namespace spexlab
