#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "spexlab/cliques.hpp"
#include "spexlab/coloring.hpp"
#include "spexlab/enumerate.hpp"
#include "spexlab/error.hpp"
#include "spexlab/families.hpp"
#include "spexlab/partition.hpp"
#include "spexlab/properties.hpp"

using namespace spexlab;

namespace {

int brute_clique_number(const Graph& g)
{
    const int n = g.order();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        const int size = std::popcount(mask);
        if (size <= best)
            continue;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if ((mask >> i & 1U) && (mask >> j & 1U) && !g.adjacent(i, j))
                    ok = false;
        if (ok)
            best = size;
    }
    return best;
}

/// Naive subgraph search: an injective map of h into g preserving edges.
bool brute_contains(const Graph& g, const Graph& h)
{
    const int n = g.order();
    const int k = h.order();
    if (k > n)
        return false;
    std::vector<int> image(k, -1);
    std::vector<bool> used(n, false);
    auto place = [&](auto&& self, int i) -> bool {
        if (i == k)
            return true;
        for (int x = 0; x < n; ++x) {
            if (used[x])
                continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (h.adjacent(i, j) && !g.adjacent(x, image[j]))
                    ok = false;
            if (!ok)
                continue;
            used[x] = true;
            image[i] = x;
            if (self(self, i + 1))
                return true;
            used[x] = false;
        }
        return false;
    };
    return place(place, 0);
}

int brute_chromatic(const Graph& g)
{
    const int n = g.order();
    if (n == 0)
        return 0;
    for (int r = 1;; ++r) {
        std::vector<int> c(n, 0);
        while (true) {
            if (is_proper_coloring(g, c))
                return r;
            int i = 0;
            while (i < n && ++c[i] == r)
                c[i++] = 0;
            if (i == n)
                break;
        }
    }
}

std::size_t brute_max_cut(const Graph& g, int r)
{
    const int n = g.order();
    std::vector<int> c(n, 0);
    std::size_t best = 0;
    while (true) {
        std::size_t cut = 0;
        for (auto [u, v] : g.edges())
            cut += c[u] != c[v];
        best = std::max(best, cut);
        int i = 0;
        while (i < n && ++c[i] == r)
            c[i++] = 0;
        if (i == n)
            break;
    }
    return best;
}

} // namespace

TEST_CASE("clique finder against brute force")
{
    Rng rng(3);
    for (int t = 0; t < 80; ++t) {
        const int n = 1 + t % 14;
        const Graph g = random_graph(n, 0.2 + 0.01 * t, rng);
        const int omega = brute_clique_number(g);
        CHECK(clique_number(g) == omega);
        const auto w = find_clique(g, omega);
        REQUIRE(w.has_value());
        for (std::size_t i = 0; i < w->size(); ++i)
            for (std::size_t j = i + 1; j < w->size(); ++j)
                CHECK(g.adjacent((*w)[i], (*w)[j]));
        CHECK_FALSE(contains_clique(g, omega + 1));
    }
}

TEST_CASE("book detection examples")
{
    CHECK(contains_generalized_book(complete_graph(5), 3, 1));
    CHECK_FALSE(contains_generalized_book(turan(3, 9), 3, 1));
    for (int k = 1; k <= 3; ++k) {
        CHECK_FALSE(contains_generalized_book(y_graph(3, 12), 3, k));
        CHECK_FALSE(contains_generalized_book(y_graph(3, 9), 3, k));
    }
    const auto w = find_generalized_book(generalized_book(3, 2), 3, 2);
    REQUIRE(w.has_value());
    CHECK(w->clique.size() == 3);
    CHECK(w->pages.size() == 2);
    CHECK_THROWS_AS(contains_generalized_book(complete_graph(4), 1, 1), InvalidInput);
    CHECK_THROWS_AS(contains_generalized_book(complete_graph(4), 2, 0), InvalidInput);
}

TEST_CASE("book detection agrees with naive subgraph search on all graphs of order <= 6")
{
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            for (int r = 2; r <= 5; ++r) {
                for (int k = 1; r + k <= 6; ++k) {
                    const bool fast = contains_generalized_book(g, r, k);
                    CHECK(fast == brute_contains(g, generalized_book(r, k)));
                    if (k >= 2 && fast)
                        CHECK(contains_generalized_book(g, r, k - 1));
                }
            }
            CHECK(contains_generalized_book(g, 2, 1) == contains_clique(g, 3));
        }
    }
}

TEST_CASE("book witness is genuine on random graphs")
{
    Rng rng(17);
    for (int t = 0; t < 40; ++t) {
        const Graph g = random_graph(30, 0.5, rng);
        const auto w = find_generalized_book(g, 3, 2);
        if (!w)
            continue;
        for (std::size_t i = 0; i < w->clique.size(); ++i) {
            for (std::size_t j = i + 1; j < w->clique.size(); ++j)
                CHECK(g.adjacent(w->clique[i], w->clique[j]));
            for (int p : w->pages)
                CHECK(g.adjacent(w->clique[i], p));
        }
    }
}

TEST_CASE("r-colourability examples")
{
    CHECK(is_r_colorable(turan(3, 9), 3));
    CHECK_FALSE(is_r_colorable(y_graph(3, 9), 3));
    CHECK_FALSE(is_r_colorable(cycle_graph(5), 2));
    CHECK(is_r_colorable(cycle_graph(5), 3));
    const auto c = find_r_coloring(y_graph(4, 20), 5);
    REQUIRE(c.has_value());
    CHECK(is_proper_coloring(y_graph(4, 20), *c));
    CHECK_FALSE(is_r_colorable(complete_graph(3), 0));
    CHECK(is_r_colorable(Graph(0), 0));
}

TEST_CASE("chromatic number")
{
    CHECK(chromatic_number(cycle_graph(5)) == 3);
    CHECK(chromatic_number(generalized_book(3, 2)) == 4);
    CHECK(chromatic_number(y_graph(3, 9)) == 4);
    CHECK(chromatic_number(complete_graph(8)) == 8);
    CHECK(chromatic_number(make_multipartite({1, 4})) == 2);
    CHECK(chromatic_number(Graph(3)) == 1);
    CHECK(chromatic_number(Graph(0)) == 0);

    Rng rng(5);
    for (int t = 0; t < 40; ++t) {
        const Graph g = random_graph(1 + t % 8, 0.5, rng);
        CHECK(chromatic_number(g) == brute_chromatic(g));
    }
}

TEST_CASE("colour-criticality")
{
    CHECK(is_color_critical(complete_graph(4)));
    CHECK_FALSE(is_color_critical(cycle_graph(4)));
    CHECK(is_color_critical(generalized_book(3, 2)));
    CHECK(is_color_critical(cycle_graph(7)));
    const auto e = find_critical_edge(cycle_graph(5));
    REQUIRE(e.has_value());
    CHECK(chromatic_number(cycle_graph(5).without_edge(e->first, e->second)) == 2);
    CHECK_THROWS_AS(is_color_critical(Graph(4)), PreconditionError);
}

TEST_CASE("partition validation")
{
    CHECK_THROWS_AS(Partition(3, {{0, 1}, {1, 2}}), InvalidInput);
    CHECK_THROWS_AS(Partition(3, {{0, 1}}), InvalidInput);
    CHECK_THROWS_AS(Partition(3, {{0, 1, 2}, {}}), InvalidInput);
    CHECK_NOTHROW(Partition(3, {{0, 1, 2}, {}}, true));
    const Partition p(4, {{3, 1}, {0, 2}});
    CHECK(p.cell(0) == std::vector<int>{1, 3});
    CHECK(p.cell_of(2) == 1);
}

TEST_CASE("max cross partition examples")
{
    CHECK(max_cross_partition(cycle_graph(5), 2, CrossMode::exact).cross_edges == 4);
    CHECK(max_cross_partition(make_multipartite({3, 3}), 2, CrossMode::exact).cross_edges == 9);
    CHECK(max_cross_partition(complete_graph(4), 2, CrossMode::exact).cross_edges == 4);
    const auto t = max_cross_partition(turan(3, 9), 3, CrossMode::exact);
    CHECK(t.exact);
    CHECK(t.cross_edges == 27);
    CHECK_THROWS_AS(max_cross_partition(cycle_graph(17), 2, CrossMode::exact), FeasibilityError);
    CHECK_THROWS_AS(max_cross_partition(cycle_graph(13), 3, CrossMode::exact), FeasibilityError);
    CHECK_THROWS_AS(max_cross_partition(cycle_graph(5), 1, CrossMode::exact), InvalidInput);
    CHECK_FALSE(max_cross_partition(cycle_graph(40), 3, CrossMode::local).exact);
}

TEST_CASE("exact max cut against brute force; local mode is stable and never better")
{
    Rng rng(23);
    for (int t = 0; t < 30; ++t) {
        const int r = 2 + t % 2;
        const Graph g = random_graph(3 + t % 6, 0.5, rng);
        const auto ex = max_cross_partition(g, r, CrossMode::exact);
        CHECK(ex.cross_edges == brute_max_cut(g, r));
        CHECK(internal_edges(g, ex.partition) + ex.cross_edges == g.edge_count());
        const auto lo = max_cross_partition(g, r, CrossMode::local);
        CHECK(lo.cross_edges <= ex.cross_edges);
        CHECK(is_locally_stable(g, lo.partition));
        CHECK(internal_edges(g, lo.partition) + lo.cross_edges == g.edge_count());
        CHECK(cross_edges(g, lo.partition) == lo.cross_edges);
    }
}

TEST_CASE("degree classes")
{
    const auto lay = y_graph_layout(3, 9);
    const Partition natural(9, lay.parts);

    const auto t = degree_classes(turan(3, 9), natural, 0.01);
    CHECK(t.W.empty());
    CHECK(t.L.empty());
    CHECK(t.exact_thresholds);

    const auto y = degree_classes(y_graph(3, 9), natural, 0.0001);
    CHECK(std::find(y.L.begin(), y.L.end(), lay.u) != y.L.end());
    // d_{V_i}(v) >= 0.27: exactly the endpoints of the edge inside T_2
    CHECK(y.W == std::vector<int>{std::min(lay.u, lay.w), std::max(lay.u, lay.w)});

    // eps near 1: the L threshold (2/3 - 5 sqrt(eps)) n is negative, so no
    // degree can sit below it, and the W threshold exceeds every degree
    const auto near_one = degree_classes(y_graph(3, 9), natural, 0.999);
    CHECK(near_one.L.empty());
    CHECK(near_one.W.empty());
    // tiny eps: threshold 5.955, exactly the degree-5 vertices (u and T_1)
    const auto tight = degree_classes(y_graph(3, 9), natural, 1e-6);
    std::vector<int> deg5;
    for (int v = 0; v < 9; ++v)
        if (y_graph(3, 9).degree(v) == 5)
            deg5.push_back(v);
    CHECK(deg5.size() == 4);
    CHECK(tight.L == deg5);

    CHECK_THROWS_AS(degree_classes(turan(3, 9), natural, 0.0), InvalidInput);
    CHECK_THROWS_AS(degree_classes(turan(3, 9), natural, 1.0), InvalidInput);
}

TEST_CASE("degree class boundary ties are inclusive")
{
    // K_{2,2} plus nothing: d_{V_i} = 0, d(v) = 2, n = 4, r = 2.
    // L threshold (1/2 - 5 sqrt(eps)) 4 = 2 when sqrt(eps) = 0 is impossible;
    // pick eps = 1/400: 5 sqrt(eps) = 1/4, threshold 1 -> L empty.
    const Partition p(4, {{0, 1}, {2, 3}});
    const Graph c4 = make_multipartite({2, 2});
    CHECK(degree_classes(c4, p, 1.0 / 400).L.empty());
    // eps = 1/2500: sqrt = 1/50; W threshold 3/50 * 4 = 0.24 > 0, L threshold (1/2 - 1/10) 4 = 1.6
    CHECK(degree_classes(c4, p, 1.0 / 2500).L.empty());
    // Path 0-1-2 with cells {0,1},{2}: d_{V_0}(0) = 1 = 3 sqrt(eps) 3 when sqrt(eps) = 1/9
    const Graph p3 = path_graph(3);
    const Partition q(3, {{0, 1}, {2}});
    const auto dc = degree_classes(p3, q, 1.0 / 81);
    CHECK(dc.exact_thresholds);
    CHECK(dc.W == std::vector<int>{0, 1});
}
