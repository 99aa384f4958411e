#include "spexlab/coloring.hpp"

#include <algorithm>
#include <numeric>

#include "spexlab/cliques.hpp"
#include "spexlab/error.hpp"

namespace spexlab {

namespace {

class Backtracker {
public:
    Backtracker(const Graph& g, int r)
        : g_(g), n_(g.order()), r_(r), color_(n_, -1), forbid_(static_cast<std::size_t>(n_) * r, 0),
          sat_(n_, 0), degree_(g.degrees())
    {
    }

    std::optional<std::vector<int>> solve()
    {
        if (search(0, 0))
            return color_;
        return std::nullopt;
    }

private:
    int pick() const
    {
        int best = -1;
        for (int v = 0; v < n_; ++v) {
            if (color_[v] >= 0)
                continue;
            if (best < 0 || sat_[v] > sat_[best] || (sat_[v] == sat_[best] && degree_[v] > degree_[best]))
                best = v;
        }
        return best;
    }

    void assign(int v, int c)
    {
        color_[v] = c;
        g_.neighbors(v).for_each([&](int x) {
            if (forbid_[static_cast<std::size_t>(x) * r_ + c]++ == 0)
                ++sat_[x];
        });
    }

    void unassign(int v)
    {
        const int c = color_[v];
        color_[v] = -1;
        g_.neighbors(v).for_each([&](int x) {
            if (--forbid_[static_cast<std::size_t>(x) * r_ + c] == 0)
                --sat_[x];
        });
    }

    bool search(int colored, int opened)
    {
        if (colored == n_)
            return true;
        const int v = pick();
        if (sat_[v] >= r_)
            return false;
        const int limit = std::min(opened + 1, r_);
        for (int c = 0; c < limit; ++c) {
            if (forbid_[static_cast<std::size_t>(v) * r_ + c] != 0)
                continue;
            assign(v, c);
            if (search(colored + 1, std::max(opened, c + 1)))
                return true;
            unassign(v);
        }
        return false;
    }

    const Graph& g_;
    int n_;
    int r_;
    std::vector<int> color_;
    std::vector<int> forbid_;
    std::vector<int> sat_;
    std::vector<int> degree_;
};

} // namespace

bool is_proper_coloring(const Graph& g, const std::vector<int>& colors)
{
    if (static_cast<int>(colors.size()) != g.order())
        return false;
    for (auto [u, v] : g.edges())
        if (colors[u] == colors[v])
            return false;
    return true;
}

std::optional<std::vector<int>> find_r_coloring(const Graph& g, int r)
{
    const int n = g.order();
    if (n == 0)
        return std::vector<int>{};
    if (r < 1)
        return std::nullopt;
    if (r >= n) {
        std::vector<int> c(n);
        std::iota(c.begin(), c.end(), 0);
        return c;
    }
    if (contains_clique(g, r + 1))
        return std::nullopt;
    auto res = Backtracker(g, r).solve();
    if (res && !is_proper_coloring(g, *res))
        throw Error("internal: colouring witness is not proper");
    return res;
}

std::vector<int> dsatur_coloring(const Graph& g)
{
    const int n = g.order();
    std::vector<int> color(n, -1);
    std::vector<VertexSet> seen(n, VertexSet(n + 1));
    const auto deg = g.degrees();
    for (int step = 0; step < n; ++step) {
        int best = -1;
        int best_sat = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0)
                continue;
            const int s = seen[v].count();
            if (s > best_sat || (s == best_sat && deg[v] > deg[best])) {
                best = v;
                best_sat = s;
            }
        }
        int c = 0;
        while (seen[best].contains(c))
            ++c;
        color[best] = c;
        g.neighbors(best).for_each([&](int x) { seen[x].insert(c); });
    }
    return color;
}

int chromatic_number(const Graph& g)
{
    if (g.order() == 0)
        return 0;
    const auto greedy = dsatur_coloring(g);
    const int upper = *std::max_element(greedy.begin(), greedy.end()) + 1;
    for (int c = clique_number(g); c < upper; ++c)
        if (is_r_colorable(g, c))
            return c;
    return upper;
}

std::optional<Edge> find_critical_edge(const Graph& g)
{
    if (g.edge_count() == 0)
        throw PreconditionError("colour-criticality needs at least one edge");
    const int chi = chromatic_number(g);
    for (auto e : g.edges())
        if (is_r_colorable(g.without_edge(e.first, e.second), chi - 1))
            return e;
    return std::nullopt;
}

} // namespace spexlab
