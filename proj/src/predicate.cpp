#include "spexlab/predicate.hpp"

#include "spexlab/cliques.hpp"
#include "spexlab/coloring.hpp"
#include "spexlab/error.hpp"

namespace spexlab {

std::string PredicateSpec::describe() const
{
    std::string out;
    auto add = [&](const std::string& s) {
        if (!out.empty())
            out += ", ";
        out += s;
    };
    if (forbid_clique)
        add("K_" + std::to_string(*forbid_clique) + "-free");
    if (forbid_book)
        add("B_{" + std::to_string(forbid_book->first) + "," + std::to_string(forbid_book->second) + "}-free");
    if (require_non_r_partite)
        add("non-" + std::to_string(*require_non_r_partite) + "-partite");
    if (require_connected)
        add("connected");
    return out.empty() ? "unconstrained" : out;
}

void PredicateSpec::validate() const
{
    if (forbid_book && (forbid_book->first < 2 || forbid_book->second < 1))
        throw InvalidInput("forbidden book B_{r,k} needs r >= 2 and k >= 1");
    if (require_non_r_partite && *require_non_r_partite < 1)
        throw InvalidInput("non-r-partite constraint needs r >= 1");
    if (forbid_clique && *forbid_clique < 1)
        throw InvalidInput("forbidden clique size must be positive");
}

std::optional<std::string> first_violation(const Graph& g, const PredicateSpec& pred)
{
    if (pred.require_connected && !is_connected(g))
        return "connected";
    if (pred.forbid_clique && contains_clique(g, *pred.forbid_clique))
        return "forbid_clique";
    if (pred.forbid_book && contains_generalized_book(g, pred.forbid_book->first, pred.forbid_book->second))
        return "forbid_book";
    if (pred.require_non_r_partite && is_r_colorable(g, *pred.require_non_r_partite))
        return "non_r_partite";
    return std::nullopt;
}

} // namespace spexlab
