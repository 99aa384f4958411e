#include "spexlab/partition.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "spexlab/error.hpp"

namespace spexlab {

Partition::Partition(int n, std::vector<std::vector<int>> cells, bool allow_empty)
    : n_(n), cells_(std::move(cells)), cell_of_(n, -1)
{
    if (n < 0)
        throw InvalidInput("partition order must be non-negative");
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        auto& c = cells_[i];
        if (c.empty() && !allow_empty)
            throw InvalidInput("partition cell " + std::to_string(i) + " is empty");
        std::sort(c.begin(), c.end());
        for (int v : c) {
            if (v < 0 || v >= n)
                throw InvalidInput("vertex " + std::to_string(v) + " in cell " + std::to_string(i) +
                                   " out of range");
            if (cell_of_[v] >= 0)
                throw InvalidInput("vertex " + std::to_string(v) + " appears in cells " +
                                   std::to_string(cell_of_[v]) + " and " + std::to_string(i));
            cell_of_[v] = static_cast<int>(i);
        }
    }
    for (int v = 0; v < n; ++v)
        if (cell_of_[v] < 0)
            throw InvalidInput("vertex " + std::to_string(v) + " is not covered by the partition");
}

Partition Partition::unit(int n)
{
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v)
        all[v] = v;
    return Partition(n, {all}, n == 0);
}

Partition Partition::from_assignment(const std::vector<int>& cell_of, int cell_count, bool allow_empty)
{
    std::vector<std::vector<int>> cells(cell_count);
    for (std::size_t v = 0; v < cell_of.size(); ++v) {
        if (cell_of[v] < 0 || cell_of[v] >= cell_count)
            throw InvalidInput("cell index out of range for vertex " + std::to_string(v));
        cells[cell_of[v]].push_back(static_cast<int>(v));
    }
    return Partition(static_cast<int>(cell_of.size()), std::move(cells), allow_empty);
}

namespace {

void require_same_order(const Graph& g, const Partition& p)
{
    if (g.order() != p.order())
        throw InvalidInput("partition covers " + std::to_string(p.order()) + " vertices, graph has " +
                           std::to_string(g.order()));
}

std::vector<VertexSet> cell_sets(const Partition& p)
{
    std::vector<VertexSet> sets(p.size(), VertexSet(p.order()));
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int v : p.cell(i))
            sets[i].insert(v);
    return sets;
}

class ExactCut {
public:
    ExactCut(const Graph& g, int r) : g_(g), n_(g.order()), r_(r), target_(std::min(n_, r)), cells_(r, VertexSet(n_))
    {
        prefix_edges_.assign(n_ + 1, 0);
        for (int i = 1; i <= n_; ++i) {
            int back = 0;
            for (int j = 0; j < i - 1; ++j)
                back += g.adjacent(i - 1, j) ? 1 : 0;
            prefix_edges_[i] = prefix_edges_[i - 1] + back;
        }
        assign_.assign(n_, -1);
    }

    CrossPartitionResult run()
    {
        dfs(0, 0, 0);
        CrossPartitionResult res;
        res.partition = Partition::from_assignment(best_assign_, r_, n_ < r_);
        res.cross_edges = static_cast<std::size_t>(best_);
        res.exact = true;
        return res;
    }

private:
    void dfs(int i, int opened, long cross)
    {
        const long m = static_cast<long>(g_.edge_count());
        if (cross + (m - prefix_edges_[i]) <= best_)
            return;
        if (n_ - i < target_ - opened)
            return;
        if (i == n_) {
            best_ = cross;
            best_assign_ = assign_;
            return;
        }
        int back = 0;
        for (int j = 0; j < i; ++j)
            back += g_.adjacent(i, j) ? 1 : 0;
        const int limit = std::min(opened + 1, r_);
        for (int c = 0; c < limit; ++c) {
            const int inside = popcount_and(g_.row(i), cells_[c].words());
            cells_[c].insert(i);
            assign_[i] = c;
            dfs(i + 1, std::max(opened, c + 1), cross + back - inside);
            cells_[c].erase(i);
        }
        assign_[i] = -1;
    }

    const Graph& g_;
    int n_;
    int r_;
    int target_;
    std::vector<VertexSet> cells_;
    std::vector<long> prefix_edges_;
    std::vector<int> assign_;
    std::vector<int> best_assign_;
    long best_ = -1;
};

void check_exact_guard(int n, int r)
{
    bool ok = true;
    std::string guard;
    if (r == 2) {
        ok = n <= 16;
        guard = "n <= 16 for r = 2";
    } else if (r == 3) {
        ok = n <= 12;
        guard = "n <= 12 for r = 3";
    } else {
        guard = "r^n <= 3^12 for r >= 4";
        double states = std::pow(static_cast<double>(r), n);
        ok = states <= std::pow(3.0, 12);
    }
    if (!ok)
        throw FeasibilityError("exact max-cross partition infeasible for n=" + std::to_string(n) +
                               ", r=" + std::to_string(r) + " (guard: " + guard + ")");
}

CrossPartitionResult local_cut(const Graph& g, int r)
{
    const int n = g.order();
    std::vector<int> cell_of(n, -1);
    std::vector<VertexSet> cells(r, VertexSet(n));

    for (int v = 0; v < n; ++v) {
        int best = 0;
        int best_inside = popcount_and(g.row(v), cells[0].words());
        for (int c = 1; c < r; ++c) {
            const int inside = popcount_and(g.row(v), cells[c].words());
            if (inside < best_inside) {
                best = c;
                best_inside = inside;
            }
        }
        cell_of[v] = best;
        cells[best].insert(v);
    }

    bool moved = true;
    while (moved) {
        moved = false;
        for (int v = 0; v < n; ++v) {
            const int cur = cell_of[v];
            const int cur_inside = popcount_and(g.row(v), cells[cur].words());
            int best = cur;
            int best_inside = cur_inside;
            for (int c = 0; c < r; ++c) {
                if (c == cur)
                    continue;
                const int inside = popcount_and(g.row(v), cells[c].words());
                if (inside < best_inside) {
                    best = c;
                    best_inside = inside;
                }
            }
            if (best != cur) {
                cells[cur].erase(v);
                cells[best].insert(v);
                cell_of[v] = best;
                moved = true;
            }
        }
    }

    // A stable partition with an empty cell has no internal edges at all, so
    // any vertex can fill it without changing the cut.
    if (n >= r) {
        for (int c = 0; c < r; ++c) {
            if (!cells[c].empty())
                continue;
            int donor = 0;
            for (int d = 1; d < r; ++d)
                if (cells[d].count() > cells[donor].count())
                    donor = d;
            int last = -1;
            cells[donor].for_each([&](int v) { last = v; });
            cells[donor].erase(last);
            cells[c].insert(last);
            cell_of[last] = c;
        }
    }

    CrossPartitionResult res;
    res.partition = Partition::from_assignment(cell_of, r, n < r);
    res.cross_edges = cross_edges(g, res.partition);
    res.exact = false;
    return res;
}

struct Rational {
    std::int64_t num;
    std::int64_t den;
};

std::optional<Rational> as_small_rational(double x)
{
    constexpr std::int64_t kMaxDen = 1'000'000;
    // Continued-fraction convergents of x.
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double rest = x;
    for (int iter = 0; iter < 64; ++iter) {
        const double a_d = std::floor(rest);
        if (a_d > 1e12)
            break;
        const auto a = static_cast<std::int64_t>(a_d);
        const std::int64_t p2 = a * p1 + p0;
        const std::int64_t q2 = a * q1 + q0;
        if (q2 > kMaxDen)
            break;
        if (static_cast<double>(p2) / static_cast<double>(q2) == x)
            return Rational{p2, q2};
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        const double frac = rest - a_d;
        if (frac <= 0.0)
            break;
        rest = 1.0 / frac;
    }
    return std::nullopt;
}

} // namespace

std::size_t internal_edges(const Graph& g, const Partition& p)
{
    require_same_order(g, p);
    std::size_t twice = 0;
    const auto sets = cell_sets(p);
    for (int v = 0; v < g.order(); ++v)
        twice += popcount_and(g.row(v), sets[p.cell_of(v)].words());
    return twice / 2;
}

std::size_t cross_edges(const Graph& g, const Partition& p) { return g.edge_count() - internal_edges(g, p); }

int internal_degree(const Graph& g, const Partition& p, int v)
{
    require_same_order(g, p);
    int d = 0;
    for (int x : p.cell(p.cell_of(v)))
        d += g.adjacent(v, x) ? 1 : 0;
    return d;
}

CrossPartitionResult max_cross_partition(const Graph& g, int r, CrossMode mode)
{
    if (r < 2)
        throw InvalidInput("max cross partition needs r >= 2");
    if (mode == CrossMode::exact) {
        check_exact_guard(g.order(), r);
        return ExactCut(g, r).run();
    }
    return local_cut(g, r);
}

bool is_locally_stable(const Graph& g, const Partition& p)
{
    require_same_order(g, p);
    const auto sets = cell_sets(p);
    for (int v = 0; v < g.order(); ++v) {
        const int cur = popcount_and(g.row(v), sets[p.cell_of(v)].words());
        for (std::size_t c = 0; c < sets.size(); ++c)
            if (static_cast<int>(c) != p.cell_of(v) && popcount_and(g.row(v), sets[c].words()) < cur)
                return false;
    }
    return true;
}

DegreeClasses degree_classes(const Graph& g, const Partition& p, double eps)
{
    if (!(eps > 0.0 && eps < 1.0))
        throw InvalidInput("eps must lie in (0, 1), got " + std::to_string(eps));
    require_same_order(g, p);
    const int r = static_cast<int>(p.size());
    if (r < 1)
        throw InvalidInput("degree classes need a partition with at least one cell");

    const long n = g.order();
    const auto exact = as_small_rational(eps);

    DegreeClasses dc;
    dc.eps = eps;
    dc.exact_thresholds = exact.has_value();
    dc.W_cells.resize(r);
    dc.L_cells.resize(r);

    const double root = std::sqrt(eps);
    const double w_threshold = 3.0 * root * static_cast<double>(n);
    const double l_threshold = (1.0 - 1.0 / r - 5.0 * root) * static_cast<double>(n);

    for (int i = 0; i < r; ++i) {
        for (int v : p.cell(i)) {
            const long inside = internal_degree(g, p, v);
            const long d = g.degree(v);
            bool in_w = false;
            bool in_l = false;
            if (exact) {
                using Big = __int128;
                const Big num = exact->num;
                const Big den = exact->den;
                // d_in >= 3 sqrt(p/q) n  <=>  d_in^2 q >= 9 p n^2
                in_w = Big(inside) * inside * den >= Big(9) * num * n * n;
                // d <= ((r-1) n - r d)/r ... with S = (r-1) n - r d:  S >= 0 and 25 p n^2 r^2 <= q S^2
                const Big s = Big(r - 1) * n - Big(r) * d;
                in_l = s >= 0 && Big(25) * num * n * n * r * r <= den * s * s;
            } else {
                in_w = static_cast<double>(inside) >= w_threshold;
                in_l = static_cast<double>(d) <= l_threshold;
            }
            if (in_w)
                dc.W_cells[i].push_back(v);
            if (in_l)
                dc.L_cells[i].push_back(v);
        }
    }
    for (int i = 0; i < r; ++i) {
        dc.W.insert(dc.W.end(), dc.W_cells[i].begin(), dc.W_cells[i].end());
        dc.L.insert(dc.L.end(), dc.L_cells[i].begin(), dc.L_cells[i].end());
    }
    std::sort(dc.W.begin(), dc.W.end());
    std::sort(dc.L.begin(), dc.L.end());
    return dc;
}

} // namespace spexlab
