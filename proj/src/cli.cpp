#include "spexlab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "spexlab/canonical.hpp"
#include "spexlab/cliques.hpp"
#include "spexlab/coloring.hpp"
#include "spexlab/error.hpp"
#include "spexlab/families.hpp"
#include "spexlab/graph6.hpp"
#include "spexlab/partition.hpp"
#include "spexlab/properties.hpp"
#include "spexlab/quotient.hpp"
#include "spexlab/report_io.hpp"
#include "spexlab/scans.hpp"
#include "spexlab/search.hpp"
#include "spexlab/spectral.hpp"

namespace spexlab::cli {

namespace {

/// Parse failure of a flag value; reported as a usage error.
struct UsageError : Error {
    using Error::Error;
};

std::pair<int, int> parse_pair(const std::string& text, const std::string& flag)
{
    std::istringstream is(text);
    int a = 0;
    int b = 0;
    char comma = 0;
    if (!(is >> a >> comma >> b) || comma != ',' || !is.eof())
        throw UsageError(flag + " expects two integers separated by a comma, got '" + text + "'");
    return {a, b};
}

std::vector<Graph> read_input(const std::string& path, std::istream& in)
{
    if (path == "-")
        return read_graph6_lines(in);
    std::ifstream file(path);
    if (!file)
        throw UsageError("cannot open input file '" + path + "'");
    return read_graph6_lines(file);
}

struct Options {
    std::string format;
    int jobs = 0;
    bool jobs_given = false;
    std::uint64_t seed = 0;
    double tol = 1e-10;

    // construct
    std::string family;
    std::optional<int> r, k, n, m;
    std::vector<int> parts;

    // spectrum / check / climb
    std::string input = "-";
    bool precise = false;
    std::string book;
    std::optional<int> rpartite;
    bool chromatic = false;
    bool color_critical = false;
    std::optional<int> clique;
    std::optional<int> max_cut;
    bool local_cut = false;
    std::optional<double> degree_eps;

    // search
    std::string forbid_book;
    std::optional<int> forbid_clique;
    std::optional<int> non_r_partite;
    bool connected = false;
    double tie_tol = 1e-8;
    std::string dump;
    int budget = 100;

    // verify / scan
    std::optional<int> n_max;
    int trials = 0;
    std::string kind;
    double bound_tol = 1e-9;
};

class Runner {
public:
    Runner(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

    int run(const std::vector<std::string>& args)
    {
        CLI::App app{"Spectral extremal graph toolkit", "spexlab"};
        build(app);

        std::vector<const char*> argv{"spexlab"};
        for (const auto& a : args)
            argv.push_back(a.c_str());

        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::ParseError& e) {
            if (e.get_exit_code() == 0) {
                app.exit(e, out_, err_);
                return kExitOk;
            }
            err_ << "error: " << e.what() << "\n";
            emit_error("usage", e.what());
            return kExitUsage;
        }

        try {
            resolve_jobs_env();
            return action_();
        } catch (const UsageError& e) {
            return fail(kExitUsage, "usage", e.what());
        } catch (const ParseError& e) {
            return fail(kExitUsage, "parse", e.what());
        } catch (const InvalidInput& e) {
            return fail(kExitUsage, "invalid_input", e.what());
        } catch (const InvalidSpec& e) {
            return fail(kExitUsage, "invalid_spec", e.what());
        } catch (const PreconditionError& e) {
            return fail(kExitUsage, "precondition", e.what());
        } catch (const FeasibilityError& e) {
            return fail(kExitUsage, "feasibility", e.what());
        } catch (const Error& e) {
            return fail(kExitFailed, "computation", e.what());
        }
    }

private:
    // -- plumbing ----------------------------------------------------------

    std::string format(const std::string& fallback = "json") const { return o_.format.empty() ? fallback : o_.format; }

    void require_format(std::initializer_list<const char*> allowed, const std::string& fallback = "json") const
    {
        const auto f = format(fallback);
        for (const char* a : allowed)
            if (f == a)
                return;
        throw UsageError("--format " + f + " is not available for this command");
    }

    void emit_error(const std::string& type, const std::string& message)
    {
        if (format(default_format_) != "json")
            return;
        Json j;
        j["error"] = Json{{"type", type}, {"message", message}};
        out_ << j.dump(2) << "\n";
    }

    int fail(int code, const std::string& type, const std::string& message)
    {
        err_ << "error: " << message << "\n";
        emit_error(type, message);
        return code;
    }

    void print(const Json& j) { out_ << j.dump(2) << "\n"; }

    void resolve_jobs_env()
    {
        if (o_.jobs_given)
            return;
        if (const char* env = std::getenv("SPEXLAB_JOBS")) {
            try {
                std::size_t used = 0;
                const int j = std::stoi(env, &used);
                if (used != std::string(env).size() || j < 0)
                    throw std::invalid_argument(env);
                o_.jobs = j;
            } catch (const std::exception&) {
                throw UsageError(std::string("SPEXLAB_JOBS must be a non-negative integer, got '") + env + "'");
            }
        }
    }

    int need(const std::optional<int>& v, const std::string& flag) const
    {
        if (!v)
            throw UsageError("missing required flag " + flag);
        return *v;
    }

    PredicateSpec predicate() const
    {
        PredicateSpec p;
        if (!o_.forbid_book.empty())
            p.forbid_book = parse_pair(o_.forbid_book, "--forbid-book");
        p.forbid_clique = o_.forbid_clique;
        p.require_non_r_partite = o_.non_r_partite;
        p.require_connected = o_.connected;
        p.validate();
        return p;
    }

    void add_predicate_flags(CLI::App* sub)
    {
        sub->add_option("--forbid-book", o_.forbid_book, "Forbid B_{R,K} (R,K)");
        sub->add_option("--forbid-clique", o_.forbid_clique, "Forbid K_Q");
        sub->add_option("--non-r-partite", o_.non_r_partite, "Require chromatic number > R");
        sub->add_flag("--connected", o_.connected, "Require connectivity");
    }

    void set_action(CLI::App* sub, std::function<int()> f, std::string default_format = "json")
    {
        sub->callback([this, f = std::move(f), default_format] {
            action_ = f;
            default_format_ = default_format;
        });
    }

    // -- command table -----------------------------------------------------

    void build(CLI::App& app)
    {
        app.require_subcommand(1);
        app.fallthrough();
        app.add_option("--format", o_.format, "Output format")->check(CLI::IsMember({"json", "csv", "g6"}));
        app.add_option_function<int>(
               "--jobs",
               [this](const int& j) {
                   o_.jobs = j;
                   o_.jobs_given = true;
               },
               "Worker threads (0 = all cores; default SPEXLAB_JOBS or 1)")
            ->check(CLI::NonNegativeNumber);
        app.add_option("--seed", o_.seed, "Random seed")->capture_default_str();
        app.add_option("--tol", o_.tol, "Power-iteration residual tolerance")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);

        auto* construct = app.add_subcommand("construct", "Build a named graph and print it");
        construct->add_option("--family", o_.family, "complete|turan|book|ygraph|ugraph|multipartite")
            ->required()
            ->check(CLI::IsMember({"complete", "turan", "book", "ygraph", "ugraph", "multipartite"}));
        construct->add_option("--r", o_.r);
        construct->add_option("--k", o_.k);
        construct->add_option("--n", o_.n);
        construct->add_option("--m", o_.m, "Edge count for ugraph");
        construct->add_option("--parts", o_.parts, "Part sizes a,b,c")->delimiter(',');
        set_action(construct, [this] { return do_construct(); }, "g6");

        auto* spectrum = app.add_subcommand("spectrum", "Spectral radius of each input graph");
        spectrum->add_option("--in", o_.input, "graph6 file, - for stdin")->capture_default_str();
        spectrum->add_flag("--precise", o_.precise, "Extended precision, tolerance 1e-13");
        set_action(spectrum, [this] { return do_spectrum(); });

        auto* check = app.add_subcommand("check", "Structural checks on each input graph");
        check->add_option("--in", o_.input, "graph6 file, - for stdin")->capture_default_str();
        check->add_option("--book", o_.book, "Look for B_{R,K} (R,K)");
        check->add_option("--rpartite", o_.rpartite, "Decide R-colourability");
        check->add_flag("--chromatic", o_.chromatic, "Exact chromatic number");
        check->add_flag("--color-critical", o_.color_critical, "Look for a critical edge");
        check->add_option("--clique", o_.clique, "Look for K_Q");
        check->add_option("--max-cut", o_.max_cut, "Partition into R cells maximising cross edges");
        check->add_flag("--local", o_.local_cut, "Local search instead of exact max cut");
        check->add_option("--degree-classes", o_.degree_eps, "W/L classes for eps (needs --max-cut)");
        set_action(check, [this] { return do_check(); });

        auto* search = app.add_subcommand("search", "Exhaustive search over isomorphism classes");
        search->require_subcommand(1);
        for (const char* which : {"spex", "ex"}) {
            auto* sub = search->add_subcommand(which, which == std::string("spex") ? "Maximise rho" : "Maximise edges");
            sub->add_option("--n", o_.n, "Order")->required();
            add_predicate_flags(sub);
            sub->add_option("--tie-tol", o_.tie_tol, "Scan tie tolerance")->capture_default_str();
            sub->add_option("--dump", o_.dump, "Write PREFIX.g6 and PREFIX.csv census files");
            const bool spex = which == std::string("spex");
            set_action(sub, [this, spex] { return do_search(spex); });
        }

        auto* verify = app.add_subcommand("verify", "Verification pipelines (exit 1 on failure)");
        verify->require_subcommand(1);
        auto* l32 = verify->add_subcommand("lemma32", "Quotient polynomial of Y_3(n) against the closed form");
        l32->add_option("--n", o_.n)->required();
        set_action(l32, [this] { return do_lemma32(); });
        auto* l27 = verify->add_subcommand("lemma27", "Family scan around Y_r(n)");
        l27->add_option("--r", o_.r)->required();
        l27->add_option("--n", o_.n)->required();
        set_action(l27, [this] { return do_lemma27(); });
        auto* l28 = verify->add_subcommand("lemma28", "Edge count of Y_r(n)");
        l28->add_option("--r", o_.r)->required();
        l28->add_option("--n-max", o_.n_max)->required();
        set_action(l28, [this] { return emit_sweep(lemma28_sweep(*o_.r, *o_.n_max)); });
        auto* yq = verify->add_subcommand("yquotient", "Quotient root and lower bound for Y_r(n)");
        yq->add_option("--r", o_.r)->required();
        yq->add_option("--n", o_.n)->required();
        set_action(yq, [this] { return do_yquotient(); });
        auto* wilf = verify->add_subcommand("wilf", "Wilf bound on random r-partite graphs");
        wilf->add_option("--r", o_.r)->required();
        wilf->add_option("--n-max", o_.n_max)->required();
        wilf->add_option("--trials", o_.trials)->default_val(1000);
        set_action(wilf, [this] {
            const int r = *o_.r;
            return emit_sweep(wilf_sweep(std::span<const int>(&r, 1), *o_.n_max, o_.trials, o_.seed));
        });
        auto* rot = verify->add_subcommand("rotation", "Strict rho increase under edge rotation");
        rot->add_option("--trials", o_.trials)->required();
        rot->add_option("--n-max", o_.n_max)->default_val(40);
        set_action(rot, [this] { return emit_sweep(rotation_sweep(*o_.n_max, o_.trials, o_.seed)); });
        auto* del = verify->add_subcommand("deletion", "Vertex-deletion bound and its equality cases");
        del->add_option("--trials", o_.trials)->required();
        del->add_option("--n-max", o_.n_max)->default_val(40);
        set_action(del, [this] { return emit_sweep(deletion_sweep(*o_.n_max, o_.trials, o_.seed)); });

        auto* scan = app.add_subcommand("scan", "Conjecture scans over small graphs");
        scan->add_option("--kind", o_.kind)->required()->check(CLI::IsMember({"nosal_book", "liu_miao_U", "sqrt_2m_bound"}));
        scan->add_option("--max-n", o_.n_max)->default_val(7);
        scan->add_option("--r", o_.r, "r for sqrt_2m_bound");
        scan->add_option("--k", o_.k, "Book size k");
        scan->add_option("--bound-tol", o_.bound_tol)->capture_default_str();
        set_action(scan, [this] { return do_scan(); });

        auto* climb = app.add_subcommand("climb", "Greedy rho ascent from the first input graph");
        climb->add_option("--in", o_.input, "graph6 file, - for stdin")->capture_default_str();
        climb->add_option("--budget", o_.budget)->capture_default_str();
        add_predicate_flags(climb);
        set_action(climb, [this] { return do_climb(); });
    }

    // -- commands ----------------------------------------------------------

    int do_construct()
    {
        require_format({"g6", "json"}, "g6");
        FamilySpec spec;
        spec.tag = *family_from_name(o_.family);
        switch (spec.tag) {
        case FamilyTag::complete:
            spec.n = need(o_.n, "--n");
            break;
        case FamilyTag::turan:
        case FamilyTag::ygraph:
            spec.r = need(o_.r, "--r");
            spec.n = need(o_.n, "--n");
            break;
        case FamilyTag::book:
            spec.r = need(o_.r, "--r");
            spec.k = need(o_.k, "--k");
            break;
        case FamilyTag::ugraph:
            spec.m = o_.m ? *o_.m : need(o_.n, "--m");
            break;
        case FamilyTag::multipartite:
            if (o_.parts.empty())
                throw UsageError("missing required flag --parts");
            spec.parts = o_.parts;
            break;
        default:
            break;
        }
        const Graph g = make_family(spec);
        if (format("g6") == "g6") {
            out_ << graph6_encode(g) << "\n";
        } else {
            print(Json{{"family", o_.family}, {"n", g.order()}, {"m", g.edge_count()}, {"graph6", graph6_encode(g)}});
        }
        return kExitOk;
    }

    SpectralOptions spectral_options() const
    {
        SpectralOptions opts = o_.precise ? SpectralOptions::precise() : SpectralOptions{};
        if (!o_.precise)
            opts.tol = o_.tol;
        opts.seed = o_.seed;
        return opts;
    }

    int do_spectrum()
    {
        require_format({"json", "csv"});
        const auto graphs = read_input(o_.input, in_);
        const auto opts = spectral_options();
        Json arr = Json::array();
        std::ostringstream csv;
        csv << "index,graph6,n,m,rho,residual,iterations,disconnected\n";
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            const auto res = spectral_radius(graphs[i], opts);
            const auto g6 = graph6_encode(graphs[i]);
            Json j{{"index", i}, {"graph6", g6}, {"n", graphs[i].order()}, {"m", graphs[i].edge_count()}};
            j.update(Json(res));
            arr.push_back(std::move(j));
            csv << i << ',' << csv_field(g6) << ',' << graphs[i].order() << ',' << graphs[i].edge_count() << ','
                << Json(res.rho).dump() << ',' << Json(res.residual).dump() << ',' << res.iterations << ','
                << (res.disconnected ? "true" : "false") << "\n";
        }
        if (format() == "csv")
            out_ << csv.str();
        else
            print(arr);
        return kExitOk;
    }

    int do_check()
    {
        require_format({"json", "csv"});
        std::optional<std::pair<int, int>> book;
        if (!o_.book.empty())
            book = parse_pair(o_.book, "--book");
        if (o_.degree_eps && !o_.max_cut)
            throw UsageError("--degree-classes needs --max-cut");
        const auto graphs = read_input(o_.input, in_);

        Json arr = Json::array();
        std::vector<std::string> header{"index", "graph6", "n", "m", "connected"};
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            const Graph& g = graphs[i];
            Json j{{"index", i},
                   {"graph6", graph6_encode(g)},
                   {"n", g.order()},
                   {"m", g.edge_count()},
                   {"connected", is_connected(g)}};
            std::vector<std::string> row{std::to_string(i), csv_field(graph6_encode(g)), std::to_string(g.order()),
                                         std::to_string(g.edge_count()), is_connected(g) ? "true" : "false"};
            auto col = [&](const std::string& name, const std::string& value) {
                if (i == 0)
                    header.push_back(name);
                row.push_back(value);
            };
            auto tf = [](bool b) { return std::string(b ? "true" : "false"); };

            if (book) {
                const auto w = find_generalized_book(g, book->first, book->second);
                j["book"] = Json{{"r", book->first},
                                 {"k", book->second},
                                 {"contains", w.has_value()},
                                 {"witness", w ? Json{{"clique", w->clique}, {"pages", w->pages}} : Json(nullptr)}};
                col("contains_book", tf(w.has_value()));
            }
            if (o_.clique) {
                const auto w = find_clique(g, *o_.clique);
                j["clique"] = Json{{"q", *o_.clique}, {"contains", w.has_value()}, {"witness", w ? Json(*w) : Json(nullptr)}};
                col("contains_clique", tf(w.has_value()));
            }
            if (o_.rpartite) {
                const auto c = find_r_coloring(g, *o_.rpartite);
                j["r_partite"] = Json{{"r", *o_.rpartite}, {"colorable", c.has_value()}, {"coloring", c ? Json(*c) : Json(nullptr)}};
                col("r_colorable", tf(c.has_value()));
            }
            if (o_.chromatic) {
                const int chi = chromatic_number(g);
                j["chromatic_number"] = chi;
                col("chromatic_number", std::to_string(chi));
            }
            if (o_.color_critical) {
                if (g.edge_count() == 0) {
                    j["color_critical"] = Json{{"critical", false}, {"edge", nullptr}, {"note", "edgeless graph"}};
                    col("color_critical", "false");
                } else {
                    const auto e = find_critical_edge(g);
                    j["color_critical"] = Json{{"critical", e.has_value()},
                                               {"edge", e ? Json::array({e->first, e->second}) : Json(nullptr)}};
                    col("color_critical", tf(e.has_value()));
                }
            }
            if (o_.max_cut) {
                const auto cut = max_cross_partition(g, *o_.max_cut, o_.local_cut ? CrossMode::local : CrossMode::exact);
                j["max_cross_partition"] =
                    Json{{"cells", cut.partition}, {"cross_edges", cut.cross_edges}, {"exact", cut.exact}};
                col("cross_edges", std::to_string(cut.cross_edges));
                if (o_.degree_eps)
                    j["degree_classes"] = degree_classes(g, cut.partition, *o_.degree_eps);
            }
            arr.push_back(std::move(j));
            rows.push_back(std::move(row));
        }

        if (format() == "csv") {
            auto line = [&](const std::vector<std::string>& v) {
                for (std::size_t c = 0; c < v.size(); ++c)
                    out_ << (c ? "," : "") << v[c];
                out_ << "\n";
            };
            line(header);
            for (const auto& r : rows)
                line(r);
        } else {
            print(arr);
        }
        return kExitOk;
    }

    void write_census(int n, const PredicateSpec& pred)
    {
        const auto rows = census(n, pred, o_.jobs);
        std::ofstream g6(o_.dump + ".g6");
        std::ofstream csv(o_.dump + ".csv");
        if (!g6 || !csv)
            throw UsageError("cannot write census files with prefix '" + o_.dump + "'");
        csv << "graph6,n,m,rho,chi,connected,feasible\n";
        for (const auto& r : rows) {
            g6 << r.graph6 << "\n";
            csv << csv_field(r.graph6) << ',' << r.n << ',' << r.m << ',' << Json(r.rho).dump() << ',' << r.chi << ','
                << (r.connected ? "true" : "false") << ',' << (r.feasible ? "true" : "false") << "\n";
        }
    }

    int do_search(bool spex)
    {
        require_format({"json", "csv", "g6"});
        const int n = *o_.n;
        const PredicateSpec pred = predicate();
        if (!pred.any())
            throw UsageError("search needs at least one of --forbid-book, --forbid-clique, --non-r-partite, --connected");
        SearchOptions opts;
        opts.jobs = o_.jobs;
        opts.scan_tol = o_.tol;
        opts.tie_tol = o_.tie_tol;
        const auto rep = spex ? spex_search(n, pred, opts) : ex_search(n, pred, opts);
        if (!o_.dump.empty())
            write_census(n, pred);

        if (format() == "csv") {
            out_ << search_report_csv(rep);
        } else if (format() == "g6") {
            for (const auto& c : rep.champions)
                out_ << c.graph6 << "\n";
        } else {
            Json j = rep;
            // Reference graphs for the two constraint shapes with known answers.
            const bool only_clique = pred.forbid_clique && !pred.forbid_book && !pred.require_non_r_partite &&
                                     !pred.require_connected && *pred.forbid_clique >= 2;
            if (only_clique && !rep.champions.empty())
                j["champion_is_turan"] = unique_champion_is(rep, turan(*pred.forbid_clique - 1, n));
            if (pred.forbid_book && pred.require_non_r_partite && pred.forbid_book->first == *pred.require_non_r_partite &&
                !pred.forbid_clique && !pred.require_connected && n >= 2 * pred.forbid_book->first &&
                !rep.champions.empty())
                j["champion_is_ygraph"] = unique_champion_is(rep, y_graph(pred.forbid_book->first, n));
            print(j);
        }
        return kExitOk;
    }

    int verdict(bool passed) const { return passed ? kExitOk : kExitFailed; }

    int emit_json_report(const Json& j, bool passed)
    {
        require_format({"json", "csv"});
        if (format() == "csv") {
            out_ << "key,value\n";
            for (const auto& [k, v] : j.items())
                if (v.is_primitive())
                    out_ << k << ',' << csv_field(v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        } else {
            print(j);
        }
        return verdict(passed);
    }

    int emit_sweep(const SweepReport& rep) { return emit_json_report(Json(rep), rep.passed()); }

    int do_lemma32()
    {
        const auto rep = verify_lemma32(*o_.n);
        return emit_json_report(Json(rep), rep.passed());
    }

    int do_lemma27()
    {
        const auto rep = lemma27_scan(*o_.r, *o_.n);
        return emit_json_report(Json(rep), rep.argmax_is_Y);
    }

    int do_yquotient()
    {
        const auto rep = verify_y_quotient(*o_.r, *o_.n);
        return emit_json_report(Json(rep), rep.passed());
    }

    int do_scan()
    {
        require_format({"json", "csv", "g6"});
        ConjectureOptions opts;
        opts.max_n = *o_.n_max;
        opts.jobs = o_.jobs;
        opts.tol = o_.bound_tol;
        const auto kind = *conjecture_from_name(o_.kind);
        if (kind == ConjectureKind::sqrt_2m_bound) {
            opts.r = o_.r.value_or(3);
            opts.k = o_.k.value_or(1);
        } else {
            if (o_.r && *o_.r != 2)
                throw UsageError("--r applies to sqrt_2m_bound only");
            opts.k = o_.k.value_or(2);
        }
        const auto rep = conjecture_scan(kind, opts);
        if (format() == "csv") {
            out_ << conjecture_report_csv(rep);
        } else if (format() == "g6") {
            for (const auto& v : rep.violations)
                out_ << v.graph6 << "\n";
        } else {
            print(rep);
        }
        return kExitOk;
    }

    int do_climb()
    {
        require_format({"json", "g6"});
        const auto graphs = read_input(o_.input, in_);
        if (graphs.empty())
            throw UsageError("climb needs one input graph");
        const auto res = hill_climb(graphs.front(), predicate(), o_.budget);
        if (format() == "g6")
            out_ << res.trace.back().graph6 << "\n";
        else
            print(res);
        return kExitOk;
    }

    std::istream& in_;
    std::ostream& out_;
    std::ostream& err_;
    Options o_;
    std::function<int()> action_;
    std::string default_format_ = "json";
};

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    return Runner(in, out, err).run(args);
}

} // namespace spexlab::cli
