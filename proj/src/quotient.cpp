#include "spexlab/quotient.hpp"

#include <cmath>
#include <map>
#include <string>

#include "spexlab/error.hpp"
#include "spexlab/families.hpp"
#include "spexlab/spectral.hpp"

namespace spexlab {

namespace {

std::vector<int> cell_counts(const Graph& g, const std::vector<int>& cell_of, std::size_t cells, int v)
{
    std::vector<int> counts(cells, 0);
    g.neighbors(v).for_each([&](int x) { ++counts[cell_of[x]]; });
    return counts;
}

} // namespace

Partition equitable_refine(const Graph& g, const Partition& initial)
{
    if (initial.order() != g.order())
        throw InvalidInput("partition does not cover the graph's vertices");
    std::vector<std::vector<int>> cells = initial.cells();
    std::vector<int> cell_of = initial.assignment();

    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::vector<int>> next;
        next.reserve(cells.size());
        for (const auto& cell : cells) {
            std::map<std::vector<int>, std::vector<int>> groups;
            for (int v : cell)
                groups[cell_counts(g, cell_of, cells.size(), v)].push_back(v);
            if (groups.size() > 1)
                changed = true;
            for (auto& [sig, members] : groups)
                next.push_back(std::move(members));
        }
        cells = std::move(next);
        for (std::size_t i = 0; i < cells.size(); ++i)
            for (int v : cells[i])
                cell_of[v] = static_cast<int>(i);
    }

    Partition out(g.order(), std::move(cells), g.order() == 0);
    if (!is_equitable(g, out))
        throw Error("internal: refinement produced a non-equitable partition");
    return out;
}

bool is_equitable(const Graph& g, const Partition& p)
{
    try {
        quotient_matrix(g, p);
        return true;
    } catch (const EquitabilityError&) {
        return false;
    }
}

IntMatrix quotient_matrix(const Graph& g, const Partition& p)
{
    if (p.order() != g.order())
        throw InvalidInput("partition does not cover the graph's vertices");
    const std::size_t k = p.size();
    IntMatrix b(k);
    for (std::size_t i = 0; i < k; ++i) {
        const auto& cell = p.cell(i);
        if (cell.empty())
            throw InvalidInput("quotient matrix needs non-empty cells (cell " + std::to_string(i) + ")");
        const auto first = cell_counts(g, p.assignment(), k, cell.front());
        for (int v : cell) {
            const auto counts = cell_counts(g, p.assignment(), k, v);
            for (std::size_t j = 0; j < k; ++j) {
                if (counts[j] != first[j]) {
                    throw EquitabilityError("partition is not equitable: in cell " + std::to_string(i) +
                                                ", vertices " + std::to_string(cell.front()) + " and " +
                                                std::to_string(v) + " have " + std::to_string(first[j]) +
                                                " and " + std::to_string(counts[j]) + " neighbours in cell " +
                                                std::to_string(j),
                                            i, j, cell.front(), v);
                }
            }
        }
        for (std::size_t j = 0; j < k; ++j)
            b.at(i, j) = first[j];
    }
    return b;
}

Partition y_graph_partition(int r, int n)
{
    if (r == 3 && n < 9)
        throw PreconditionError("the six-cell partition of Y_3(n) needs n >= 9 (T_2 minus {u, w} would be empty)");
    const auto layout = y_graph_layout(r, n);
    std::vector<std::vector<int>> cells{{layout.v}, {layout.u}, {layout.w}};

    const auto& t1 = layout.parts[layout.t1];
    cells.emplace_back(t1.begin() + 1, t1.end());
    const auto& t2 = layout.parts[layout.t2];
    if (t2.size() > 2)
        cells.emplace_back(t2.begin() + 2, t2.end());
    for (std::size_t i = 0; i < layout.parts.size(); ++i)
        if (i != layout.t1 && i != layout.t2)
            cells.push_back(layout.parts[i]);
    return Partition(n, std::move(cells));
}

IntPoly lemma32_polynomial(int n)
{
    if (n < 6)
        throw InvalidInput("the closed-form polynomial is defined for n >= 6");
    const BigInt N = n;
    const BigInt N2 = N * N;
    const BigInt N3 = N2 * N;

    // Coefficients of x^0 .. x^6; the x^5 coefficient is zero in every branch.
    std::vector<BigInt> c(7);
    c[6] = 729;
    c[5] = 0;
    switch (n % 3) {
    case 0:
        c[4] = -243 * N2 + 243 * N - 729;
        c[3] = -54 * N3 + 162 * N2 - 486 * N;
        c[2] = 27 * N3 + 324 * N2 - 2673 * N + 2187;
        c[1] = 162 * N3 - 1296 * N2 + 2916 * N - 2916;
        c[0] = -135 * N3 + 1215 * N2 - 2430 * N;
        break;
    case 1:
        c[4] = -243 * N2 + 243 * N - 729;
        c[3] = -54 * N3 + 162 * N2 - 648 * N + 540;
        c[2] = 27 * N3 + 324 * N2 - 2430 * N + 2808;
        c[1] = 162 * N3 - 1296 * N2 + 3564 * N - 3888;
        c[0] = -135 * N3 + 1215 * N2 - 3240 * N + 2160;
        break;
    default:
        c[4] = -243 * N2 + 243 * N - 972;
        c[3] = -54 * N3 + 162 * N2 - 486 * N - 702;
        c[2] = 27 * N3 + 324 * N2 - 2835 * N + 2700;
        c[1] = 162 * N3 - 1296 * N2 + 2754 * N - 1620;
        c[0] = -135 * N3 + 1215 * N2 - 2025 * N - 3375;
        break;
    }
    return IntPoly(std::move(c));
}

Lemma32Report verify_lemma32(int n, double agree_tol)
{
    if (n < 9)
        throw PreconditionError("verify_lemma32 needs n >= 9");

    Lemma32Report rep;
    rep.n = n;
    const Graph g = y_graph(3, n);
    const Partition pi = y_graph_partition(3, n);
    const IntPoly cp = char_poly(quotient_matrix(g, pi));

    rep.computed = cp.scaled(729);
    rep.expected = lemma32_polynomial(n);
    const int diff = rep.computed.first_difference(rep.expected);
    rep.poly_match = diff < 0;
    if (diff >= 0)
        rep.mismatch_index = diff;

    // x = (8n - 7)/12; 12^d * p(x) = sum c_i (8n-7)^i 12^(d-i).
    const BigInt num = 8 * BigInt(n) - 7;
    const BigInt den = 12;
    BigInt acc = 0;
    for (int i = rep.expected.degree(); i >= 0; --i)
        acc = acc * num + rep.expected.coefficient(i) * boost::multiprecision::pow(den, rep.expected.degree() - i);
    rep.scaled_value_at_bound = acc;
    rep.sign_ok = rep.expected.sign_at(num, den) < 0 && acc < 0;

    rep.rho_quotient = largest_root(cp, 1e-12);
    rep.rho_dense = spectral_radius(g, SpectralOptions::precise()).rho;
    rep.rho_agree = std::abs(rep.rho_quotient - rep.rho_dense) <= agree_tol;
    rep.above_bound = rep.rho_dense > 2.0 * n / 3.0 - 7.0 / 12.0;
    return rep;
}

YQuotientReport verify_y_quotient(int r, int n, double agree_tol, double margin)
{
    if (r < 3)
        throw InvalidInput("verify_y_quotient needs r >= 3");
    YQuotientReport rep;
    rep.r = r;
    rep.n = n;
    const Graph g = y_graph(r, n);
    const Partition pi = y_graph_partition(r, n);
    rep.cells = pi.size();
    rep.char_poly = char_poly(quotient_matrix(g, pi));
    rep.rho_quotient = largest_root(rep.char_poly, 1e-12);
    rep.rho_dense = spectral_radius(g, SpectralOptions::precise()).rho;
    rep.rho_agree = std::abs(rep.rho_quotient - rep.rho_dense) <= agree_tol;
    if (r == 3)
        rep.lower_bound = 2.0 * n / 3.0 - 7.0 / 12.0;
    else
        rep.lower_bound = (r - 1.0) * n / r - 2.0 / r - r / (4.0 * n);
    rep.above_bound = rep.rho_dense - rep.lower_bound > margin;
    return rep;
}

} // namespace spexlab
