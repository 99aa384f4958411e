#include "spexlab/graph.hpp"

#include <bit>
#include <string>

#include "spexlab/error.hpp"

namespace spexlab {

Graph::Graph(int n)
{
    if (n < 0)
        throw InvalidInput("graph order must be non-negative, got " + std::to_string(n));
    n_ = n;
    words_ = words_for(n);
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges)
{
    GraphBuilder b(n);
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    return std::move(b).build();
}

int Graph::degree(int v) const noexcept
{
    int d = 0;
    for (Word w : row(v))
        d += std::popcount(w);
    return d;
}

std::vector<int> Graph::degrees() const
{
    std::vector<int> out(n_);
    for (int v = 0; v < n_; ++v)
        out[v] = degree(v);
    return out;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edges_);
    for (int u = 0; u < n_; ++u)
        neighbors(u).for_each([&](int v) {
            if (u < v)
                out.emplace_back(u, v);
        });
    return out;
}

Graph Graph::with_edge(int u, int v) const
{
    GraphBuilder b(*this);
    b.add_edge(u, v);
    return std::move(b).build();
}

Graph Graph::without_edge(int u, int v) const
{
    GraphBuilder b(*this);
    b.remove_edge(u, v);
    return std::move(b).build();
}

Graph Graph::without_vertex(int v) const
{
    if (v < 0 || v >= n_)
        throw InvalidInput("vertex " + std::to_string(v) + " out of range");
    std::vector<int> keep;
    keep.reserve(n_ - 1);
    for (int x = 0; x < n_; ++x)
        if (x != v)
            keep.push_back(x);
    return induced(keep);
}

Graph Graph::induced(std::span<const int> vertices) const
{
    const int m = static_cast<int>(vertices.size());
    GraphBuilder b(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (adjacent(vertices[i], vertices[j]))
                b.add_edge(i, j);
    return std::move(b).build();
}

Graph Graph::relabeled(std::span<const int> new_label) const
{
    if (static_cast<int>(new_label.size()) != n_)
        throw InvalidInput("relabeling has wrong length");
    GraphBuilder b(n_);
    for (auto [u, v] : edges())
        b.add_edge(new_label[u], new_label[v]);
    return std::move(b).build();
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}

GraphBuilder::GraphBuilder(const Graph& g) : g_(g) {}

void GraphBuilder::check_pair(int u, int v) const
{
    if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_)
        throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) +
                           ") out of range for order " + std::to_string(g_.n_));
    if (u == v)
        throw InvalidInput("loops are not allowed (vertex " + std::to_string(u) + ")");
}

void GraphBuilder::set(int u, int v, bool on) noexcept
{
    auto flip = [&](int a, int b) {
        Word& w = g_.bits_[static_cast<std::size_t>(a) * g_.words_ + b / kWordBits];
        const Word mask = Word{1} << (b % kWordBits);
        w = on ? (w | mask) : (w & ~mask);
    };
    flip(u, v);
    flip(v, u);
}

void GraphBuilder::add_edge(int u, int v)
{
    check_pair(u, v);
    if (!g_.adjacent(u, v)) {
        set(u, v, true);
        ++g_.edges_;
    }
}

void GraphBuilder::remove_edge(int u, int v)
{
    check_pair(u, v);
    if (g_.adjacent(u, v)) {
        set(u, v, false);
        --g_.edges_;
    }
}

Graph GraphBuilder::build() && { return std::move(g_); }
Graph GraphBuilder::build() const& { return g_; }

std::vector<std::vector<int>> connected_components(const Graph& g)
{
    const int n = g.order();
    std::vector<std::vector<int>> comps;
    VertexSet unseen = VertexSet::full(n);
    while (!unseen.empty()) {
        const int start = unseen.first();
        VertexSet comp(n);
        comp.insert(start);
        unseen.erase(start);
        std::vector<int> stack{start};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            VertexSet next = unseen;
            next &= g.row(v);
            next.for_each([&](int x) {
                unseen.erase(x);
                comp.insert(x);
                stack.push_back(x);
            });
        }
        comps.push_back(comp.to_vector());
    }
    return comps;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || connected_components(g).size() == 1; }

Graph disjoint_union(const Graph& g, const Graph& h)
{
    const int a = g.order();
    GraphBuilder b(a + h.order());
    for (auto [u, v] : g.edges())
        b.add_edge(u, v);
    for (auto [u, v] : h.edges())
        b.add_edge(a + u, a + v);
    return std::move(b).build();
}

} // namespace spexlab
