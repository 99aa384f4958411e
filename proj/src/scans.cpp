#include "spexlab/scans.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

#include "spexlab/canonical.hpp"
#include "spexlab/cliques.hpp"
#include "spexlab/coloring.hpp"
#include "spexlab/enumerate.hpp"
#include "spexlab/error.hpp"
#include "spexlab/families.hpp"
#include "spexlab/graph6.hpp"
#include "spexlab/parallel.hpp"
#include "spexlab/spectral.hpp"

namespace spexlab {

namespace {

/// Non-increasing sequences of `count` positive parts summing to `total`.
void for_each_partition(int total, int count, int max_part, std::vector<int>& cur,
                        const std::function<void(const std::vector<int>&)>& f)
{
    if (count == 0) {
        if (total == 0)
            f(cur);
        return;
    }
    for (int p = std::min(max_part, total - (count - 1)); p >= 1; --p) {
        if (p * count < total)
            break;
        cur.push_back(p);
        for_each_partition(total - p, count - 1, p, cur, f);
        cur.pop_back();
    }
}

} // namespace

Graph lemma27_graph(const std::vector<int>& parts)
{
    if (parts.size() < 2 || std::any_of(parts.begin(), parts.end(), [](int p) { return p < 1; }))
        throw InvalidInput("lemma27_graph needs at least two positive part sizes");
    const int base = std::accumulate(parts.begin(), parts.end(), 0);
    const int n = base + 1;
    const Graph k = make_multipartite(parts);
    GraphBuilder b(n);
    for (auto [x, y] : k.edges())
        b.add_edge(x, y);
    const int v = 0;
    const int w = parts[0];
    const int u = n - 1;
    b.remove_edge(v, w);
    b.add_edge(u, v);
    b.add_edge(u, w);
    for (int z = parts[0] + parts[1]; z < base; ++z)
        b.add_edge(u, z);
    return std::move(b).build();
}

Lemma27Report lemma27_scan(int r, int n, double margin_tol, std::size_t max_configs)
{
    if (r < 2 || n < 2 * r)
        throw InvalidInput("lemma27_scan needs r >= 2 and n >= 2r");

    std::vector<std::vector<int>> configs;
    const int base = n - 1;
    for (int n1 = 1; n1 <= base; ++n1) {
        for (int n2 = n1; n1 + n2 + (r - 2) <= base; ++n2) {
            std::vector<int> rest;
            for_each_partition(base - n1 - n2, r - 2, base, rest, [&](const std::vector<int>& tail) {
                if (configs.size() >= max_configs)
                    throw FeasibilityError("lemma27_scan: more than " + std::to_string(max_configs) +
                                           " configurations for r=" + std::to_string(r) + ", n=" + std::to_string(n));
                std::vector<int> parts{n1, n2};
                parts.insert(parts.end(), tail.begin(), tail.end());
                configs.push_back(std::move(parts));
            });
        }
    }

    Lemma27Report rep;
    rep.r = r;
    rep.n = n;
    rep.configs_scanned = configs.size();

    const Graph y = y_graph(r, n);
    const Graph y_canon = canonical_graph(y);
    rep.rho_y = rho(y, SpectralOptions::precise());

    std::vector<double> rhos(configs.size());
    for (std::size_t i = 0; i < configs.size(); ++i)
        rhos[i] = rho(lemma27_graph(configs[i]), SpectralOptions::precise());

    const auto best = static_cast<std::size_t>(std::max_element(rhos.begin(), rhos.end()) - rhos.begin());
    rep.max_rho = rhos[best];
    rep.argmax_parts = configs[best];
    const bool best_is_y = canonical_graph(lemma27_graph(configs[best])) == y_canon;

    double runner_up = -1.0;
    bool have_runner_up = false;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        // Isomorphic graphs have equal rho, so only near-ties need the check.
        const bool maybe_y = std::abs(rhos[i] - rep.rho_y) <= 1e-6;
        if (maybe_y && canonical_graph(lemma27_graph(configs[i])) == y_canon)
            continue;
        if (!have_runner_up || rhos[i] > runner_up)
            runner_up = rhos[i];
        have_runner_up = true;
    }
    if (have_runner_up)
        rep.margin = rep.rho_y - runner_up;
    rep.argmax_is_Y = best_is_y && (!rep.margin || *rep.margin > margin_tol);
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

struct Move {
    enum Kind { add, remove, rotate } kind;
    int u;
    int v;
    std::vector<int> moved;
    double rho = 0.0;

    Graph apply(const Graph& g) const
    {
        switch (kind) {
        case add:
            return g.with_edge(u, v);
        case remove:
            return g.without_edge(u, v);
        default:
            return rotate_edges(g, u, v, moved);
        }
    }

    std::string describe() const
    {
        switch (kind) {
        case add:
            return "add " + std::to_string(u) + " " + std::to_string(v);
        case remove:
            return "remove " + std::to_string(u) + " " + std::to_string(v);
        default: {
            std::string s = "rotate u=" + std::to_string(u) + " v=" + std::to_string(v) + " S=[";
            for (std::size_t i = 0; i < moved.size(); ++i)
                s += (i ? "," : "") + std::to_string(moved[i]);
            return s + "]";
        }
        }
    }
};

std::vector<Move> candidate_moves(const Graph& g, const std::vector<double>& x)
{
    const int n = g.order();
    std::vector<Move> moves;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            moves.push_back({g.adjacent(a, b) ? Move::remove : Move::add, a, b, {}});
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v || x[u] < x[v])
                continue;
            VertexSet s = g.neighbors(v);
            s.subtract(g.neighbors(u));
            s.erase(u);
            const auto full = s.to_vector();
            if (full.empty())
                continue;
            moves.push_back({Move::rotate, u, v, full});
            if (full.size() > 1)
                for (int z : full)
                    moves.push_back({Move::rotate, u, v, {z}});
        }
    }
    return moves;
}

} // namespace

ClimbResult hill_climb(const Graph& g0, const PredicateSpec& pred, int budget, double tol)
{
    if (auto bad = first_violation(g0, pred))
        throw InvalidInput("hill_climb: start graph violates constraint " + *bad);
    if (budget < 0)
        throw InvalidInput("hill_climb: budget must be non-negative");

    ClimbResult res{g0, {}, false, 0};
    auto current = spectral_radius(g0);
    res.trace.push_back({"start", current.rho, graph6_encode(g0)});

    for (int step = 0; step < budget; ++step) {
        auto moves = candidate_moves(res.graph, current.vector);
        res.moves_evaluated += moves.size();
        for (auto& m : moves)
            m.rho = rho(m.apply(res.graph));
        std::stable_sort(moves.begin(), moves.end(), [](const Move& a, const Move& b) { return a.rho > b.rho; });

        bool moved = false;
        for (const auto& m : moves) {
            if (m.rho <= current.rho + tol)
                break;
            Graph next = m.apply(res.graph);
            if (!satisfies(next, pred))
                continue;
            auto next_spec = spectral_radius(next);
            if (next_spec.rho <= current.rho + tol)
                continue;
            res.graph = std::move(next);
            current = std::move(next_spec);
            res.trace.push_back({m.describe(), current.rho, graph6_encode(res.graph)});
            moved = true;
            break;
        }
        if (!moved) {
            res.local_max = true;
            break;
        }
    }
    return res;
}

// ---------------------------------------------------------------------------

std::optional<ConjectureKind> conjecture_from_name(const std::string& name)
{
    if (name == "nosal_book")
        return ConjectureKind::nosal_book;
    if (name == "liu_miao_U")
        return ConjectureKind::liu_miao_U;
    if (name == "sqrt_2m_bound")
        return ConjectureKind::sqrt_2m_bound;
    return std::nullopt;
}

std::string conjecture_name(ConjectureKind kind)
{
    switch (kind) {
    case ConjectureKind::nosal_book:
        return "nosal_book";
    case ConjectureKind::liu_miao_U:
        return "liu_miao_U";
    default:
        return "sqrt_2m_bound";
    }
}

bool is_complete_bipartite(const Graph& g)
{
    if (g.edge_count() == 0)
        return false;
    const auto coloring = find_r_coloring(g, 2);
    if (!coloring)
        return false;
    long long a = 0;
    long long b = 0;
    for (int x = 0; x < g.order(); ++x) {
        if (g.degree(x) == 0)
            continue;
        ((*coloring)[x] == 0 ? a : b) += 1;
    }
    return static_cast<long long>(g.edge_count()) == a * b;
}

namespace {

struct Sample {
    bool in_scope = false;
    int m = 0;
    double rho = 0.0;
};

} // namespace

ConjectureReport conjecture_scan(ConjectureKind kind, const ConjectureOptions& opts)
{
    if (opts.max_n < 1)
        throw InvalidInput("conjecture scan needs max_n >= 1");
    if (opts.max_n > kMaxEnumerationOrder)
        throw FeasibilityError("conjecture scan enumerates graphs only up to n = " + std::to_string(kMaxEnumerationOrder));
    const int r = kind == ConjectureKind::sqrt_2m_bound ? opts.r : 2;
    if (r < 2 || opts.k < 1)
        throw InvalidInput("conjecture scan needs r >= 2 and k >= 1");

    ConjectureReport rep;
    rep.kind = kind;
    rep.options = opts;
    rep.options.r = r;

    struct Group {
        std::string champion;
        double rho = -1.0;
        std::size_t graphs = 0;
    };
    std::map<int, Group> groups;
    std::map<int, double> rho_u;
    auto bound_for = [&](int m) {
        switch (kind) {
        case ConjectureKind::nosal_book:
            return std::sqrt(static_cast<double>(m));
        case ConjectureKind::liu_miao_U: {
            auto it = rho_u.find(m);
            if (it == rho_u.end())
                it = rho_u.emplace(m, rho(u_graph(m), SpectralOptions::precise())).first;
            return it->second;
        }
        default:
            return std::sqrt((1.0 - 1.0 / r) * 2.0 * m);
        }
    };

    for (int n = 1; n <= opts.max_n; ++n) {
        const auto codes = enumerate_codes(n, opts.jobs);
        std::vector<Sample> samples(codes.size());
        parallel_for(codes.size(), opts.jobs, [&](std::size_t i) {
            const Graph g = unpack_upper_triangle(n, codes[i]);
            const auto deg = g.degrees();
            if (g.edge_count() == 0 || std::find(deg.begin(), deg.end(), 0) != deg.end())
                return;
            if (contains_generalized_book(g, r, opts.k))
                return;
            if (kind == ConjectureKind::liu_miao_U && is_r_colorable(g, 2))
                return;
            samples[i] = {true, static_cast<int>(g.edge_count()), rho(g, SpectralOptions::precise())};
        });

        for (std::size_t i = 0; i < codes.size(); ++i) {
            const auto& s = samples[i];
            if (!s.in_scope)
                continue;
            ++rep.scanned;
            const double bound = bound_for(s.m);
            const Graph g = unpack_upper_triangle(n, codes[i]);
            auto entry = [&] {
                return ScanEntry{graph6_encode(g), n, s.m, s.rho, bound, is_complete_bipartite(g)};
            };
            if (s.rho > bound + opts.tol)
                rep.violations.push_back(entry());
            else if (std::abs(s.rho - bound) <= opts.tol)
                rep.equality.push_back(entry());
            if (kind == ConjectureKind::liu_miao_U) {
                auto& grp = groups[s.m];
                ++grp.graphs;
                if (s.rho > grp.rho + opts.tol) {
                    grp.rho = s.rho;
                    grp.champion = graph6_encode(g);
                }
            }
        }
    }

    if (kind == ConjectureKind::nosal_book) {
        const bool all_cb = std::all_of(rep.equality.begin(), rep.equality.end(),
                                        [](const ScanEntry& e) { return e.complete_bipartite; });
        std::size_t expected = 0;
        for (int a = 1; 2 * a <= opts.max_n; ++a)
            expected += static_cast<std::size_t>(opts.max_n - 2 * a + 1);
        rep.witnesses_exact = all_cb && rep.equality.size() == expected;
    }
    for (const auto& [m, grp] : groups) {
        const double bu = bound_for(m);
        const bool is_u = m >= 3 && are_isomorphic(graph6_decode(grp.champion), u_graph(m));
        rep.by_size.push_back({m, grp.champion, grp.rho, bu, is_u, grp.graphs});
    }
    return rep;
}

} // namespace spexlab
