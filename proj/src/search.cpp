#include "spexlab/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spexlab/canonical.hpp"
#include "spexlab/coloring.hpp"
#include "spexlab/enumerate.hpp"
#include "spexlab/error.hpp"
#include "spexlab/graph6.hpp"
#include "spexlab/parallel.hpp"
#include "spexlab/spectral.hpp"

namespace spexlab {

std::string objective_name(Objective o) { return o == Objective::rho ? "rho" : "edges"; }

namespace {

constexpr double kNone = -std::numeric_limits<double>::infinity();

struct Census {
    std::vector<std::uint64_t> codes;
    std::vector<double> value; // kNone for infeasible graphs
    std::size_t feasible = 0;
};

template <class Eval>
Census run_census(int n, const PredicateSpec& pred, int jobs, Eval eval)
{
    pred.validate();
    if (n < 1)
        throw InvalidInput("search needs n >= 1");
    if (!pred.any())
        throw InvalidInput("search needs at least one constraint");
    Census c;
    c.codes = enumerate_codes(n, jobs);
    c.value.assign(c.codes.size(), kNone);
    parallel_for(c.codes.size(), jobs, [&](std::size_t i) {
        const Graph g = unpack_upper_triangle(n, c.codes[i]);
        if (satisfies(g, pred))
            c.value[i] = eval(g);
    });
    c.feasible = static_cast<std::size_t>(std::count_if(c.value.begin(), c.value.end(), [](double v) { return v != kNone; }));
    return c;
}

SearchReport base_report(int n, const PredicateSpec& pred, Objective obj, const Census& c)
{
    SearchReport rep;
    rep.n = n;
    rep.predicate = pred;
    rep.objective = obj;
    rep.exhaustive = true;
    rep.graphs_scanned = c.codes.size();
    rep.feasible_count = c.feasible;
    return rep;
}

std::string g6(int n, std::uint64_t code) { return graph6_encode(unpack_upper_triangle(n, code)); }

} // namespace

SearchReport spex_search(int n, const PredicateSpec& pred, const SearchOptions& opts)
{
    SpectralOptions scan;
    scan.tol = opts.scan_tol;
    const Census c = run_census(n, pred, opts.jobs, [&](const Graph& g) { return rho(g, scan); });
    SearchReport rep = base_report(n, pred, Objective::rho, c);
    if (c.feasible == 0)
        return rep;

    const double top = *std::max_element(c.value.begin(), c.value.end());
    std::vector<std::size_t> cand;
    for (std::size_t i = 0; i < c.codes.size(); ++i)
        if (c.value[i] != kNone && c.value[i] >= top - opts.tie_tol)
            cand.push_back(i);

    std::vector<double> precise(cand.size());
    parallel_for(cand.size(), opts.jobs, [&](std::size_t j) {
        precise[j] = rho(unpack_upper_triangle(n, c.codes[cand[j]]), SpectralOptions::precise());
    });
    const double best = *std::max_element(precise.begin(), precise.end());

    std::vector<bool> is_champion(c.codes.size(), false);
    double runner_up = kNone;
    for (std::size_t j = 0; j < cand.size(); ++j) {
        const auto i = cand[j];
        rep.ties_within_tol.push_back({g6(n, c.codes[i]), c.value[i], precise[j]});
        if (precise[j] >= best - opts.precise_tie_tol) {
            is_champion[i] = true;
            rep.champions.push_back({g6(n, c.codes[i]), precise[j]});
        } else {
            runner_up = std::max(runner_up, precise[j]);
        }
    }
    for (std::size_t i = 0; i < c.codes.size(); ++i)
        if (!is_champion[i] && c.value[i] != kNone)
            runner_up = std::max(runner_up, c.value[i]);
    if (runner_up != kNone)
        rep.gap_to_runner_up = best - runner_up;
    return rep;
}

SearchReport ex_search(int n, const PredicateSpec& pred, const SearchOptions& opts)
{
    const Census c = run_census(n, pred, opts.jobs, [](const Graph& g) { return static_cast<double>(g.edge_count()); });
    SearchReport rep = base_report(n, pred, Objective::edges, c);
    if (c.feasible == 0)
        return rep;

    const double best = *std::max_element(c.value.begin(), c.value.end());
    double runner_up = kNone;
    for (std::size_t i = 0; i < c.codes.size(); ++i) {
        if (c.value[i] == best)
            rep.champions.push_back({g6(n, c.codes[i]), best});
        else if (c.value[i] != kNone)
            runner_up = std::max(runner_up, c.value[i]);
    }
    if (rep.champions.size() > 1)
        for (const auto& ch : rep.champions)
            rep.ties_within_tol.push_back({ch.graph6, ch.value, ch.value});
    if (runner_up != kNone)
        rep.gap_to_runner_up = best - runner_up;
    return rep;
}

std::vector<CensusRow> census(int n, const PredicateSpec& pred, int jobs)
{
    pred.validate();
    const auto codes = enumerate_codes(n, jobs);
    std::vector<CensusRow> rows(codes.size());
    parallel_for(codes.size(), jobs, [&](std::size_t i) {
        const Graph g = unpack_upper_triangle(n, codes[i]);
        rows[i] = {graph6_encode(g), n, static_cast<int>(g.edge_count()), rho(g), chromatic_number(g),
                   is_connected(g), satisfies(g, pred)};
    });
    return rows;
}

bool unique_champion_is(const SearchReport& rep, const Graph& h)
{
    return rep.champions.size() == 1 && are_isomorphic(graph6_decode(rep.champions.front().graph6), h);
}

} // namespace spexlab
