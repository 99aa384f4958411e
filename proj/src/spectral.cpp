#include "spexlab/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <string>

#include "spexlab/error.hpp"

namespace spexlab {

namespace {

template <typename Scalar>
void multiply(const Graph& g, const std::vector<Scalar>& x, std::vector<Scalar>& out)
{
    const int n = g.order();
    for (int v = 0; v < n; ++v) {
        Scalar acc = 0;
        const auto row = g.row(v);
        for (std::size_t i = 0; i < row.size(); ++i) {
            Word w = row[i];
            while (w != 0) {
                acc += x[static_cast<int>(i) * kWordBits + std::countr_zero(w)];
                w &= w - 1;
            }
        }
        out[v] = acc;
    }
}

/// Power iteration on A + I for a connected graph with at least one edge.
template <typename Scalar>
SpectralResult power_iteration(const Graph& g, const SpectralOptions& opts)
{
    const int n = g.order();
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> jitter(0.0, 1e-3);

    std::vector<Scalar> x(n);
    for (auto& xi : x)
        xi = Scalar(1) + Scalar(jitter(rng));
    std::vector<Scalar> ax(n);

    Scalar rho = 0;
    Scalar residual = 0;
    for (std::size_t it = 0; it < opts.max_iterations; ++it) {
        multiply(g, x, ax);
        Scalar xx = 0;
        Scalar xax = 0;
        Scalar xmax = 0;
        for (int i = 0; i < n; ++i) {
            xx += x[i] * x[i];
            xax += x[i] * ax[i];
            xmax = std::max(xmax, x[i]);
        }
        rho = xax / xx;
        residual = 0;
        for (int i = 0; i < n; ++i)
            residual = std::max<Scalar>(residual, std::abs(ax[i] - rho * x[i]));
        residual /= xmax;

        if (residual <= Scalar(opts.tol)) {
            SpectralResult res;
            res.rho = static_cast<double>(rho);
            res.residual = static_cast<double>(residual);
            res.iterations = it + 1;
            res.vector.resize(n);
            for (int i = 0; i < n; ++i)
                res.vector[i] = static_cast<double>(x[i] / xmax);
            return res;
        }

        Scalar ymax = 0;
        for (int i = 0; i < n; ++i) {
            ax[i] += x[i];
            ymax = std::max(ymax, ax[i]);
        }
        for (int i = 0; i < n; ++i)
            x[i] = ax[i] / ymax;
    }
    throw ConvergenceError("power iteration did not reach tol " + std::to_string(opts.tol) + " within " +
                               std::to_string(opts.max_iterations) + " iterations (residual " +
                               std::to_string(static_cast<double>(residual)) + ")",
                           static_cast<double>(residual), opts.max_iterations);
}

SpectralResult connected_radius(const Graph& g, const SpectralOptions& opts)
{
    if (g.edge_count() == 0) {
        SpectralResult res;
        res.vector.assign(g.order(), 1.0);
        return res;
    }
    return opts.high_precision ? power_iteration<long double>(g, opts) : power_iteration<double>(g, opts);
}

} // namespace

SpectralResult spectral_radius(const Graph& g, const SpectralOptions& opts)
{
    if (g.order() < 1)
        throw InvalidInput("spectral radius needs at least one vertex");
    if (!(opts.tol > 0.0))
        throw InvalidInput("spectral tolerance must be positive");

    const auto comps = connected_components(g);
    if (comps.size() == 1)
        return connected_radius(g, opts);

    SpectralResult best;
    const std::vector<int>* best_comp = nullptr;
    std::size_t total_iterations = 0;
    for (const auto& comp : comps) {
        if (comp.size() == 1 && best_comp != nullptr)
            continue;
        auto res = connected_radius(g.induced(comp), opts);
        total_iterations += res.iterations;
        if (best_comp == nullptr || res.rho > best.rho) {
            best = std::move(res);
            best_comp = &comp;
        }
    }

    SpectralResult out;
    out.rho = best.rho;
    out.residual = best.residual;
    out.iterations = total_iterations;
    out.disconnected = true;
    out.vector.assign(g.order(), 0.0);
    for (std::size_t i = 0; i < best_comp->size(); ++i)
        out.vector[(*best_comp)[i]] = best.vector[i];
    return out;
}

double rho(const Graph& g, const SpectralOptions& opts) { return spectral_radius(g, opts).rho; }

double rayleigh_quotient(const Graph& g, std::span<const double> x)
{
    if (static_cast<int>(x.size()) != g.order())
        throw InvalidInput("vector length " + std::to_string(x.size()) + " does not match order " +
                           std::to_string(g.order()));
    double xx = 0.0;
    for (double xi : x)
        xx += xi * xi;
    if (xx == 0.0)
        throw InvalidInput("rayleigh quotient of the zero vector");
    double num = 0.0;
    for (auto [u, v] : g.edges())
        num += x[u] * x[v];
    return 2.0 * num / xx;
}

WilfReport check_wilf(const Graph& g, int r, double tol)
{
    if (r < 1)
        throw InvalidInput("wilf bound needs r >= 1");
    WilfReport rep;
    rep.bound = (1.0 - 1.0 / r) * g.order();
    rep.rho = g.order() == 0 ? 0.0 : rho(g);
    rep.holds = rep.rho <= rep.bound + tol;
    return rep;
}

DeletionReport deletion_bound(const Graph& g, int v, double tol)
{
    if (v < 0 || v >= g.order())
        throw InvalidInput("vertex " + std::to_string(v) + " out of range");
    const int d = g.degree(v);
    if (d < 1)
        throw PreconditionError("deletion bound needs d(v) >= 1; vertex " + std::to_string(v) + " is isolated");

    const auto opts = SpectralOptions::precise();
    DeletionReport rep;
    rep.lhs = rho(g, opts);
    const double rest = rho(g.without_vertex(v), opts);
    rep.rhs = std::sqrt(rest * rest + 2.0 * d - 1.0);
    rep.holds = rep.lhs <= rep.rhs + tol;
    rep.equality = std::abs(rep.lhs - rep.rhs) <= tol;
    return rep;
}

Graph rotate_edges(const Graph& g, int u, int v, std::span<const int> moved)
{
    const int n = g.order();
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
        throw InvalidInput("rotation needs two distinct vertices in range");
    if (moved.empty())
        throw InvalidInput("rotation set S must be non-empty");

    GraphBuilder b(g);
    VertexSet seen(n);
    for (int w : moved) {
        if (w < 0 || w >= n)
            throw InvalidInput("vertex " + std::to_string(w) + " in S out of range");
        if (seen.contains(w))
            throw InvalidInput("vertex " + std::to_string(w) + " repeated in S");
        seen.insert(w);
        if (!g.adjacent(v, w) || w == u || g.adjacent(u, w))
            throw InvalidInput("vertex " + std::to_string(w) + " is not in N(v) \\ N[u]");
        b.remove_edge(v, w);
        b.add_edge(u, w);
    }
    return std::move(b).build();
}

} // namespace spexlab
