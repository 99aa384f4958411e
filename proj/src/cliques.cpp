#include "spexlab/cliques.hpp"

#include <string>

#include "spexlab/error.hpp"

namespace spexlab {

namespace {

struct CliqueSearch {
    const Graph& g;
    int r;
    int k;
    std::vector<VertexSet> later;
    std::vector<int> clique;
    std::optional<BookWitness> found;

    CliqueSearch(const Graph& graph, int clique_size, int pages)
        : g(graph), r(clique_size), k(pages)
    {
        const int n = g.order();
        const auto order = degeneracy_order(g);
        later.assign(n, VertexSet(n));
        VertexSet after(n);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            later[*it] = after;
            after.insert(*it);
        }
    }

    bool extend(const VertexSet& cand, const VertexSet& common)
    {
        const int depth = static_cast<int>(clique.size());
        if (depth == r) {
            if (common.count() < k)
                return false;
            BookWitness w;
            w.clique = clique;
            common.for_each([&](int p) {
                if (static_cast<int>(w.pages.size()) < k)
                    w.pages.push_back(p);
            });
            found = std::move(w);
            return true;
        }
        const int missing = r - depth;
        if (cand.count() < missing || common.count() - missing < k)
            return false;

        bool done = false;
        cand.for_each([&](int x) {
            if (done)
                return;
            VertexSet next_cand = cand;
            next_cand &= g.row(x);
            next_cand &= later[x];
            VertexSet next_common = common;
            next_common &= g.row(x);
            clique.push_back(x);
            done = extend(next_cand, next_common);
            clique.pop_back();
        });
        return done;
    }

    std::optional<BookWitness> run()
    {
        const int n = g.order();
        for (int v = 0; v < n && !found; ++v) {
            VertexSet cand = later[v];
            cand &= g.row(v);
            clique.assign(1, v);
            extend(cand, g.neighbors(v));
        }
        return found;
    }
};

} // namespace

std::vector<int> degeneracy_order(const Graph& g)
{
    const int n = g.order();
    std::vector<int> deg = g.degrees();
    std::vector<bool> removed(n, false);
    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best < 0 || deg[v] < deg[best]))
                best = v;
        removed[best] = true;
        order.push_back(best);
        g.neighbors(best).for_each([&](int x) {
            if (!removed[x])
                --deg[x];
        });
    }
    return order;
}

std::optional<std::vector<int>> find_clique(const Graph& g, int q)
{
    if (q <= 0)
        return std::vector<int>{};
    if (q > g.order())
        return std::nullopt;
    if (q == 1)
        return std::vector<int>{0};
    auto w = CliqueSearch(g, q, 0).run();
    if (!w)
        return std::nullopt;
    return w->clique;
}

int clique_number(const Graph& g)
{
    int q = 0;
    while (q < g.order() && contains_clique(g, q + 1))
        ++q;
    return q;
}

std::optional<BookWitness> find_generalized_book(const Graph& g, int r, int k)
{
    if (r < 2 || k < 1)
        throw InvalidInput("generalized book needs r >= 2 and k >= 1, got r=" + std::to_string(r) +
                           " k=" + std::to_string(k));
    if (r + k > g.order())
        return std::nullopt;
    return CliqueSearch(g, r, k).run();
}

} // namespace spexlab
