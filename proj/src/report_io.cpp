#include "spexlab/report_io.hpp"

#include <sstream>

namespace spexlab {

namespace {

Json optional_json(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

std::string fmt(double x)
{
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

} // namespace

void to_json(Json& j, const PredicateSpec& p)
{
    j = Json::object();
    j["forbid_book"] = p.forbid_book ? Json::array({p.forbid_book->first, p.forbid_book->second}) : Json(nullptr);
    j["require_non_r_partite"] = p.require_non_r_partite ? Json(*p.require_non_r_partite) : Json(nullptr);
    j["require_connected"] = p.require_connected;
    j["forbid_clique"] = p.forbid_clique ? Json(*p.forbid_clique) : Json(nullptr);
    j["description"] = p.describe();
}

void to_json(Json& j, const SpectralResult& r)
{
    j = Json{{"rho", r.rho},
             {"residual", r.residual},
             {"iterations", r.iterations},
             {"disconnected", r.disconnected},
             {"vector", r.vector}};
}

void to_json(Json& j, const SearchReport& r)
{
    Json champs = Json::array();
    for (const auto& c : r.champions)
        champs.push_back({{"graph6", c.graph6}, {"value", c.value}});
    Json ties = Json::array();
    for (const auto& t : r.ties_within_tol)
        ties.push_back({{"graph6", t.graph6}, {"scan_value", t.scan_value}, {"precise_value", t.precise_value}});
    j = Json{{"n", r.n},
             {"predicate", r.predicate},
             {"objective", objective_name(r.objective)},
             {"champions", champs},
             {"gap_to_runner_up", optional_json(r.gap_to_runner_up)},
             {"exhaustive", r.exhaustive},
             {"graphs_scanned", r.graphs_scanned},
             {"feasible_count", r.feasible_count},
             {"ties_within_tol", ties}};
}

void to_json(Json& j, const Lemma27Report& r)
{
    j = Json{{"r", r.r},
             {"n", r.n},
             {"configs_scanned", r.configs_scanned},
             {"max_rho", r.max_rho},
             {"argmax_parts", r.argmax_parts},
             {"rho_y", r.rho_y},
             {"margin", optional_json(r.margin)},
             {"argmax_is_Y", r.argmax_is_Y},
             {"passed", r.argmax_is_Y}};
}

void to_json(Json& j, const Lemma32Report& r)
{
    j = Json{{"n", r.n},
             {"poly_match", r.poly_match},
             {"mismatch_index", r.mismatch_index ? Json(*r.mismatch_index) : Json(nullptr)},
             {"computed", r.computed.coefficient_strings()},
             {"expected", r.expected.coefficient_strings()},
             {"scaled_value_at_bound", r.scaled_value_at_bound.str()},
             {"sign_ok", r.sign_ok},
             {"rho_quotient", r.rho_quotient},
             {"rho_dense", r.rho_dense},
             {"rho_agree", r.rho_agree},
             {"above_bound", r.above_bound},
             {"passed", r.passed()}};
}

void to_json(Json& j, const YQuotientReport& r)
{
    j = Json{{"r", r.r},
             {"n", r.n},
             {"cells", r.cells},
             {"char_poly", r.char_poly.coefficient_strings()},
             {"rho_quotient", r.rho_quotient},
             {"rho_dense", r.rho_dense},
             {"rho_agree", r.rho_agree},
             {"lower_bound", r.lower_bound},
             {"above_bound", r.above_bound},
             {"passed", r.passed()}};
}

void to_json(Json& j, const ClimbResult& r)
{
    Json trace = Json::array();
    for (const auto& s : r.trace)
        trace.push_back({{"move", s.move}, {"rho", s.rho}, {"graph6", s.graph6}});
    j = Json{{"final_graph6", r.trace.empty() ? std::string() : r.trace.back().graph6},
             {"steps", r.trace.empty() ? 0 : r.trace.size() - 1},
             {"local_max", r.local_max},
             {"moves_evaluated", r.moves_evaluated},
             {"trace", trace}};
}

void to_json(Json& j, const ConjectureReport& r)
{
    auto entries = [](const std::vector<ScanEntry>& v) {
        Json a = Json::array();
        for (const auto& e : v)
            a.push_back({{"graph6", e.graph6},
                         {"n", e.n},
                         {"m", e.m},
                         {"rho", e.rho},
                         {"bound", e.bound},
                         {"complete_bipartite", e.complete_bipartite}});
        return a;
    };
    Json rows = Json::array();
    for (const auto& row : r.by_size)
        rows.push_back({{"m", row.m},
                        {"champion", row.champion},
                        {"rho", row.rho},
                        {"rho_u", row.rho_u},
                        {"champion_is_u", row.champion_is_u},
                        {"graphs", row.graphs}});
    j = Json{{"kind", conjecture_name(r.kind)},
             {"max_n", r.options.max_n},
             {"r", r.options.r},
             {"k", r.options.k},
             {"tol", r.options.tol},
             {"scanned", r.scanned},
             {"violations", entries(r.violations)},
             {"equality", entries(r.equality)}};
    if (r.kind == ConjectureKind::liu_miao_U)
        j["by_size"] = rows;
    if (r.witnesses_exact)
        j["witnesses_exact"] = *r.witnesses_exact;
}

void to_json(Json& j, const SweepReport& r)
{
    j = Json{{"name", r.name},
             {"checked", r.checked},
             {"failures", r.failures},
             {"worst_margin", r.worst_margin},
             {"special", r.special},
             {"examples", r.examples},
             {"passed", r.passed()}};
}

void to_json(Json& j, const Partition& p) { j = p.cells(); }

void to_json(Json& j, const DegreeClasses& d)
{
    j = Json{{"eps", d.eps},
             {"W", d.W},
             {"L", d.L},
             {"W_cells", d.W_cells},
             {"L_cells", d.L_cells},
             {"exact_thresholds", d.exact_thresholds}};
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string search_report_csv(const SearchReport& r)
{
    std::ostringstream os;
    os << "n,objective,predicate,graph6,value,gap_to_runner_up,exhaustive,graphs_scanned,feasible_count\n";
    for (const auto& c : r.champions)
        os << r.n << ',' << objective_name(r.objective) << ',' << csv_field(r.predicate.describe()) << ','
           << csv_field(c.graph6) << ',' << fmt(c.value) << ','
           << (r.gap_to_runner_up ? fmt(*r.gap_to_runner_up) : std::string()) << ','
           << (r.exhaustive ? "true" : "false") << ',' << r.graphs_scanned << ',' << r.feasible_count << '\n';
    return os.str();
}

std::string conjecture_report_csv(const ConjectureReport& r)
{
    std::ostringstream os;
    os << "kind,status,graph6,n,m,rho,bound,complete_bipartite\n";
    auto rows = [&](const std::vector<ScanEntry>& v, const char* status) {
        for (const auto& e : v)
            os << conjecture_name(r.kind) << ',' << status << ',' << csv_field(e.graph6) << ',' << e.n << ','
               << e.m << ',' << fmt(e.rho) << ',' << fmt(e.bound) << ',' << (e.complete_bipartite ? "true" : "false")
               << '\n';
    };
    rows(r.violations, "violation");
    rows(r.equality, "equality");
    return os.str();
}

} // namespace spexlab
