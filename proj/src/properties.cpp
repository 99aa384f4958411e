#include "spexlab/properties.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spexlab/error.hpp"
#include "spexlab/families.hpp"
#include "spexlab/graph6.hpp"
#include "spexlab/spectral.hpp"

namespace spexlab {

namespace {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
double uniform_real(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

void record(SweepReport& rep, double margin, bool ok, const std::string& what)
{
    if (rep.checked == 0 || margin < rep.worst_margin)
        rep.worst_margin = margin;
    ++rep.checked;
    if (!ok) {
        ++rep.failures;
        if (rep.examples.size() < 5)
            rep.examples.push_back(what);
    }
}

bool is_star(const Graph& g)
{
    const int n = g.order();
    if (n < 2 || g.edge_count() != static_cast<std::size_t>(n - 1))
        return false;
    for (int c = 0; c < n; ++c)
        if (g.degree(c) == n - 1)
            return true;
    return false;
}

} // namespace

Graph random_graph(int n, double p, Rng& rng)
{
    std::bernoulli_distribution coin(p);
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng))
                b.add_edge(i, j);
    return std::move(b).build();
}

Graph random_connected_graph(int n, double p, Rng& rng)
{
    GraphBuilder b(random_graph(n, p, rng));
    for (int i = 1; i < n; ++i)
        b.add_edge(i, uniform_int(rng, 0, i - 1));
    return std::move(b).build();
}

Graph random_r_partite(int n, int r, double p, Rng& rng)
{
    if (r < 1)
        throw InvalidInput("random_r_partite needs r >= 1");
    std::vector<int> part(n);
    for (int i = 0; i < n; ++i)
        part[i] = i < r ? i : uniform_int(rng, 0, r - 1);
    std::shuffle(part.begin(), part.end(), rng);
    std::bernoulli_distribution coin(p);
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part[i] != part[j] && coin(rng))
                b.add_edge(i, j);
    return std::move(b).build();
}

SweepReport wilf_sweep(std::span<const int> rs, int n_max, int trials, std::uint64_t seed)
{
    if (rs.empty() || n_max < 1 || trials < 0)
        throw InvalidInput("wilf_sweep needs r values, n_max >= 1 and trials >= 0");
    SweepReport rep;
    rep.name = "wilf";
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        const int r = rs[t % rs.size()];
        const int n = uniform_int(rng, 1, n_max);
        const Graph g = random_r_partite(n, r, uniform_real(rng, 0.2, 1.0), rng);
        const auto w = check_wilf(g, r);
        record(rep, w.bound - w.rho, w.holds, graph6_encode(g) + " r=" + std::to_string(r));
    }
    return rep;
}

SweepReport deletion_sweep(int n_max, int trials, std::uint64_t seed)
{
    if (n_max < 3 || trials < 0)
        throw InvalidInput("deletion_sweep needs n_max >= 3 and trials >= 0");
    SweepReport rep;
    rep.name = "deletion_bound";
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        Graph g;
        switch (t % 5) {
        case 0:
            g = complete_graph(uniform_int(rng, 2, n_max));
            break;
        case 1:
            g = star_graph(uniform_int(rng, 3, n_max));
            break;
        default:
            g = random_connected_graph(uniform_int(rng, 2, n_max), uniform_real(rng, 0.05, 0.9), rng);
        }
        const int v = uniform_int(rng, 0, g.order() - 1);
        const auto d = deletion_bound(g, v);
        const bool complete = g.edge_count() == static_cast<std::size_t>(g.order()) * (g.order() - 1) / 2;
        const bool expected = complete || (is_star(g) && g.degree(v) == 1);
        if (d.equality)
            ++rep.special;
        record(rep, d.rhs - d.lhs, d.holds && d.equality == expected,
               graph6_encode(g) + " v=" + std::to_string(v) + (d.equality ? " equality" : ""));
    }
    return rep;
}

SweepReport rotation_sweep(int n_max, int trials, std::uint64_t seed, double margin)
{
    if (n_max < 3 || trials < 0)
        throw InvalidInput("rotation_sweep needs n_max >= 3 and trials >= 0");
    SweepReport rep;
    rep.name = "rotation";
    Rng rng(seed);
    int done = 0;
    while (done < trials) {
        const Graph g = random_connected_graph(uniform_int(rng, 3, n_max), uniform_real(rng, 0.05, 0.6), rng);
        const auto spec = spectral_radius(g, SpectralOptions::precise());
        int u = uniform_int(rng, 0, g.order() - 1);
        int v = uniform_int(rng, 0, g.order() - 1);
        if (u == v)
            continue;
        if (spec.vector[u] < spec.vector[v])
            std::swap(u, v);
        VertexSet avail = g.neighbors(v);
        avail.subtract(g.neighbors(u));
        avail.erase(u);
        auto pool = avail.to_vector();
        if (pool.empty())
            continue;
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(pool.size()))));
        std::sort(pool.begin(), pool.end());

        const Graph h = rotate_edges(g, u, v, pool);
        const double gain = rho(h, SpectralOptions::precise()) - spec.rho;
        record(rep, gain, gain > margin,
               graph6_encode(g) + " u=" + std::to_string(u) + " v=" + std::to_string(v));
        ++done;
    }
    return rep;
}

SweepReport rayleigh_sweep(int graphs, int vectors_per_graph, std::uint64_t seed, double tol)
{
    SweepReport rep;
    rep.name = "rayleigh";
    Rng rng(seed);
    std::normal_distribution<double> gauss;
    for (int gi = 0; gi < graphs; ++gi) {
        const int n = uniform_int(rng, 1, 60);
        const Graph g = random_graph(n, uniform_real(rng, 0.0, 1.0), rng);
        const double r = rho(g, SpectralOptions::precise());
        std::vector<double> x(n);
        for (int t = 0; t < vectors_per_graph; ++t) {
            do {
                for (auto& xi : x)
                    xi = t % 2 ? std::abs(gauss(rng)) : gauss(rng);
            } while (std::all_of(x.begin(), x.end(), [](double xi) { return xi == 0.0; }));
            const double q = rayleigh_quotient(g, x);
            record(rep, r + tol - q, q <= r + tol, graph6_encode(g));
        }
    }
    return rep;
}

SweepReport lemma28_sweep(int r, int n_max)
{
    if (r < 2)
        throw InvalidInput("lemma28_sweep needs r >= 2");
    SweepReport rep;
    rep.name = "lemma28";
    for (int n = 2 * r; n <= n_max; ++n) {
        const long long ey = static_cast<long long>(y_graph(r, n).edge_count());
        const long long et = static_cast<long long>(turan(r, n).edge_count());
        const bool identity = ey == et - n / r + 1;
        // Lower bound times 8r: 4 (r-1) n^2 - 8n - r^2 + 8r, kept in integers.
        const long long lhs = 8LL * r * ey;
        const long long rhs = 4LL * (r - 1) * n * n - 8LL * n - 1LL * r * r + 8LL * r;
        record(rep, static_cast<double>(lhs - rhs) / (8.0 * r), identity && lhs >= rhs,
               "r=" + std::to_string(r) + " n=" + std::to_string(n));
    }
    return rep;
}

} // namespace spexlab
