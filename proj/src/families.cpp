#include "spexlab/families.hpp"

#include <string>

#include "spexlab/error.hpp"

namespace spexlab {

namespace {

void require(bool ok, const std::string& msg)
{
    if (!ok)
        throw InvalidSpec(msg);
}

} // namespace

Graph complete_graph(int n)
{
    require(n >= 0, "complete graph needs n >= 0");
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            b.add_edge(u, v);
    return std::move(b).build();
}

Graph empty_graph(int n)
{
    require(n >= 0, "empty graph needs n >= 0");
    return Graph(n);
}

Graph path_graph(int n)
{
    require(n >= 1, "path needs n >= 1");
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v)
        b.add_edge(v, v + 1);
    return std::move(b).build();
}

Graph cycle_graph(int n)
{
    require(n >= 3, "cycle needs n >= 3");
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v)
        b.add_edge(v, (v + 1) % n);
    return std::move(b).build();
}

Graph star_graph(int n)
{
    require(n >= 1, "star needs n >= 1");
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v)
        b.add_edge(0, v);
    return std::move(b).build();
}

Graph make_multipartite(const std::vector<int>& parts)
{
    require(!parts.empty(), "multipartite graph needs at least one part");
    std::vector<int> block;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        require(parts[i] >= 1, "part " + std::to_string(i) + " has size " + std::to_string(parts[i]) +
                                   ", expected >= 1");
        block.insert(block.end(), parts[i], static_cast<int>(i));
    }
    const int n = static_cast<int>(block.size());
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (block[u] != block[v])
                b.add_edge(u, v);
    return std::move(b).build();
}

std::vector<int> turan_parts(int r, int n)
{
    require(r >= 1 && r <= n, "turan graph needs 1 <= r <= n, got r=" + std::to_string(r) +
                                  " n=" + std::to_string(n));
    std::vector<int> parts(r, n / r);
    for (int i = 0; i < n % r; ++i)
        ++parts[i];
    return parts;
}

Graph turan(int r, int n) { return make_multipartite(turan_parts(r, n)); }

Graph join(const Graph& g, const Graph& h)
{
    const int a = g.order();
    GraphBuilder b(a + h.order());
    for (auto [u, v] : g.edges())
        b.add_edge(u, v);
    for (auto [u, v] : h.edges())
        b.add_edge(a + u, a + v);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < h.order(); ++v)
            b.add_edge(u, a + v);
    return std::move(b).build();
}

Graph generalized_book(int r, int k)
{
    require(r >= 2 && k >= 1, "generalized book needs r >= 2 and k >= 1");
    return join(complete_graph(r), empty_graph(k));
}

YGraphLayout y_graph_layout(int r, int n)
{
    require(r >= 2, "y_graph needs r >= 2");
    require(n >= 2 * r, "y_graph needs n >= 2r, got r=" + std::to_string(r) + " n=" + std::to_string(n));

    YGraphLayout layout;
    const auto sizes = turan_parts(r, n);
    int next = 0;
    for (int s : sizes) {
        std::vector<int> part(s);
        for (int& x : part)
            x = next++;
        layout.parts.push_back(std::move(part));
    }

    const int lo = n / r;
    const int hi = (n + r - 1) / r;
    std::size_t t1 = 0;
    while (sizes[t1] != lo)
        ++t1;
    std::size_t t2 = 0;
    while (t2 == t1 || sizes[t2] != hi)
        ++t2;

    layout.t1 = t1;
    layout.t2 = t2;
    layout.v = layout.parts[t1][0];
    layout.u = layout.parts[t2][0];
    layout.w = layout.parts[t2][1];
    return layout;
}

Graph y_graph(int r, int n)
{
    const auto layout = y_graph_layout(r, n);
    GraphBuilder b(turan(r, n));
    b.add_edge(layout.u, layout.w);
    const auto& t1 = layout.parts[layout.t1];
    for (std::size_t i = 1; i < t1.size(); ++i)
        b.remove_edge(layout.u, t1[i]);
    b.remove_edge(layout.w, layout.v);
    return std::move(b).build();
}

Graph u_graph(int m)
{
    require(m >= 3, "u_graph needs m >= 3");
    GraphBuilder b(m);
    b.add_edge(0, 1);
    b.add_edge(0, 2);
    b.add_edge(1, 2);
    for (int v = 3; v < m; ++v)
        b.add_edge(0, v);
    return std::move(b).build();
}

Graph make_family(const FamilySpec& spec)
{
    switch (spec.tag) {
    case FamilyTag::complete:
        return complete_graph(spec.n);
    case FamilyTag::multipartite:
        return make_multipartite(spec.parts);
    case FamilyTag::turan:
        return turan(spec.r, spec.n);
    case FamilyTag::book:
        return generalized_book(spec.r, spec.k);
    case FamilyTag::ygraph:
        return y_graph(spec.r, spec.n);
    case FamilyTag::ugraph:
        return u_graph(spec.m);
    case FamilyTag::join:
    case FamilyTag::union_: {
        require(spec.operands.size() == 2, family_name(spec.tag) + " needs exactly two operands");
        const Graph a = make_family(spec.operands[0]);
        const Graph b = make_family(spec.operands[1]);
        return spec.tag == FamilyTag::join ? join(a, b) : disjoint_union(a, b);
    }
    }
    throw InvalidSpec("unknown family");
}

std::optional<FamilyTag> family_from_name(const std::string& name)
{
    if (name == "complete")
        return FamilyTag::complete;
    if (name == "multipartite")
        return FamilyTag::multipartite;
    if (name == "turan")
        return FamilyTag::turan;
    if (name == "book")
        return FamilyTag::book;
    if (name == "ygraph")
        return FamilyTag::ygraph;
    if (name == "ugraph")
        return FamilyTag::ugraph;
    if (name == "join")
        return FamilyTag::join;
    if (name == "union")
        return FamilyTag::union_;
    return std::nullopt;
}

std::string family_name(FamilyTag tag)
{
    switch (tag) {
    case FamilyTag::complete:
        return "complete";
    case FamilyTag::multipartite:
        return "multipartite";
    case FamilyTag::turan:
        return "turan";
    case FamilyTag::book:
        return "book";
    case FamilyTag::ygraph:
        return "ygraph";
    case FamilyTag::ugraph:
        return "ugraph";
    case FamilyTag::join:
        return "join";
    case FamilyTag::union_:
        return "union";
    }
    return "unknown";
}

} // namespace spexlab
