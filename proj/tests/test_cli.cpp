#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "spexlab/canonical.hpp"
#include "spexlab/cli.hpp"
#include "spexlab/families.hpp"
#include "spexlab/graph6.hpp"

using namespace spexlab;
using nlohmann::json;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "")
{
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    Result r;
    r.code = cli::run(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

json parse(const Result& r)
{
    return json::parse(r.out);
}

} // namespace

TEST_CASE("construct")
{
    const auto y = run({"construct", "--family", "ygraph", "--r", "3", "--n", "9"});
    CHECK(y.code == cli::kExitOk);
    CHECK(y.out == "HC^f~z{\n");
    CHECK(graph6_decode("HC^f~z{").edge_count() == 25);

    const auto t = run({"construct", "--family", "turan", "--r", "3", "--n", "7"});
    CHECK(graph6_decode(t.out.substr(0, t.out.size() - 1)) == turan(3, 7));

    const auto b = run({"construct", "--family", "book", "--r", "3", "--k", "2"});
    CHECK(graph6_decode(b.out.substr(0, b.out.size() - 1)) == generalized_book(3, 2));

    const auto m = run({"construct", "--family", "multipartite", "--parts", "1,2,3"});
    CHECK(graph6_decode(m.out.substr(0, m.out.size() - 1)).edge_count() == 11);

    const auto u = run({"construct", "--family", "ugraph", "--m", "6"});
    CHECK(graph6_decode(u.out.substr(0, u.out.size() - 1)) == u_graph(6));

    const auto j = run({"--format", "json", "construct", "--family", "complete", "--n", "4"});
    CHECK(j.code == 0);
    CHECK(parse(j)["graph6"] == graph6_encode(complete_graph(4)));
}

TEST_CASE("usage and input errors exit with 2")
{
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"frobnicate"}).code == cli::kExitUsage);
    CHECK(run({"construct", "--family", "turan", "--n", "5"}).code == cli::kExitUsage);
    CHECK(run({"construct", "--family", "nope", "--n", "5"}).code == cli::kExitUsage);
    CHECK(run({"construct", "--family", "turan", "--r", "9", "--n", "3"}).code == cli::kExitUsage);
    CHECK(run({"search", "spex", "--n", "5", "--bogus"}).code == cli::kExitUsage);
    CHECK(run({"search", "spex", "--n", "5"}).code == cli::kExitUsage); // no constraint
    CHECK(run({"search", "spex", "--n", "12", "--forbid-clique", "3"}).code == cli::kExitUsage);
    CHECK(run({"spectrum", "--in", "/nonexistent/file.g6"}).code == cli::kExitUsage);

    const auto bad = run({"spectrum", "--in", "-"}, "Bw\n\nxx\n");
    CHECK(bad.code == cli::kExitUsage);
    CHECK(bad.err.find("line 3") != std::string::npos);
}

TEST_CASE("json output is valid on every path")
{
    const std::vector<std::vector<std::string>> cases = {
        {"--format", "json", "construct", "--family", "turan", "--r", "9", "--n", "3"},
        {"--format", "json", "search", "spex", "--n", "12", "--forbid-clique", "3"},
        {"--format", "json", "search", "ex", "--n", "5", "--forbid-clique", "3"},
        {"--format", "json", "verify", "lemma32", "--n", "8"},
        {"--format", "json", "verify", "lemma32", "--n", "9"},
        {"--format", "json", "scan", "--kind", "nope"},
        {"--format", "json", "frobnicate"},
    };
    for (const auto& args : cases) {
        const auto r = run(args);
        INFO(args[2] << " exit " << r.code);
        json j;
        CHECK_NOTHROW(j = parse(r));
        if (r.code == cli::kExitUsage)
            CHECK(j.contains("error"));
    }
    const auto bad = run({"--format", "json", "spectrum", "--in", "-"}, "D~{\n?\x01\n");
    CHECK(bad.code == cli::kExitUsage);
    CHECK(parse(bad)["error"]["message"].get<std::string>().find("line 2") != std::string::npos);
}

TEST_CASE("spectrum and check")
{
    const auto s = run({"spectrum", "--in", "-"}, "Bw\n\nD~{\n");
    REQUIRE(s.code == 0);
    const auto j = json::parse(s.out);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["rho"].get<double>() == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(j[1]["rho"].get<double>() == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(j[1]["n"] == 5);

    const auto p = run({"spectrum", "--in", "-", "--precise"}, "Bw\n");
    CHECK(json::parse(p.out)[0]["rho"].get<double>() == doctest::Approx(2.0).epsilon(1e-13));

    const auto csv = run({"--format", "csv", "spectrum", "--in", "-"}, "Bw\n");
    CHECK(csv.out.rfind("index,", 0) == 0);

    const auto c = run({"check", "--in", "-", "--book", "2,2", "--chromatic", "--rpartite", "2", "--color-critical", "--clique", "3"}, "Bw\n");
    REQUIRE(c.code == 0);
    const auto cj = json::parse(c.out)[0];
    CHECK(cj["book"]["contains"] == false);
    CHECK(cj["chromatic_number"] == 3);
    CHECK(cj.dump().find("true") != std::string::npos);
}

TEST_CASE("file input")
{
    const std::string path = "test_cli_input.g6";
    {
        std::ofstream f(path);
        f << "D~{\nDhc\n";
    }
    const auto r = run({"spectrum", "--in", path});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).size() == 2);
    std::remove(path.c_str());
}

TEST_CASE("search")
{
    const auto s = run({"search", "spex", "--n", "7", "--forbid-clique", "4"});
    REQUIRE(s.code == 0);
    const auto j = json::parse(s.out);
    REQUIRE(j["champions"].size() == 1);
    CHECK(j["champions"][0]["graph6"] == graph6_encode(canonical_graph(turan(3, 7))));
    CHECK(j["champion_is_turan"] == true);
    CHECK(j["exhaustive"] == true);
    CHECK(j["graphs_scanned"] == 1044);

    const auto e = run({"search", "ex", "--n", "6", "--forbid-clique", "4"});
    CHECK(json::parse(e.out)["champions"][0]["value"] == 12);

    const auto csv = run({"--format", "csv", "search", "spex", "--n", "6", "--forbid-clique", "3"});
    CHECK(csv.out.rfind("n,objective,", 0) == 0);
    CHECK(csv.out.find("EFz_") != std::string::npos);

    const auto g6 = run({"--format", "g6", "search", "spex", "--n", "5", "--forbid-clique", "3"});
    CHECK(g6.out == graph6_encode(canonical_graph(turan(2, 5))) + "\n");

    const auto y = run({"search", "spex", "--n", "7", "--forbid-book", "3,1", "--non-r-partite", "3"});
    CHECK(json::parse(y.out).contains("champion_is_ygraph"));
}

TEST_CASE("output is byte-identical for any job count")
{
    const std::vector<std::string> base = {"search", "spex", "--n", "7", "--forbid-book", "2,2", "--connected"};
    auto with = [&](const std::string& jobs) {
        auto a = base;
        a.insert(a.end(), {"--jobs", jobs});
        return run(a).out;
    };
    const auto one = with("1");
    CHECK(one == with("2"));
    CHECK(one == with("5"));

    const std::vector<std::string> scan = {"scan", "--kind", "nosal_book", "--max-n", "6"};
    auto s1 = scan;
    s1.insert(s1.end(), {"--jobs", "1"});
    auto s3 = scan;
    s3.insert(s3.end(), {"--jobs", "3"});
    CHECK(run(s1).out == run(s3).out);

    ::setenv("SPEXLAB_JOBS", "3", 1);
    CHECK(run(base).out == one);
    ::setenv("SPEXLAB_JOBS", "zero", 1);
    CHECK(run(base).code == cli::kExitUsage);
    CHECK(with("1") == one); // the flag wins over the environment
    ::unsetenv("SPEXLAB_JOBS");
}

TEST_CASE("seeded verification is reproducible")
{
    const std::vector<std::string> a = {"verify", "rotation", "--trials", "40", "--seed", "5", "--n-max", "15"};
    const auto r1 = run(a);
    CHECK(r1.code == 0);
    CHECK(r1.out == run(a).out);
    CHECK(json::parse(r1.out)["passed"] == true);
    const std::vector<std::string> b = {"verify", "rotation", "--trials", "40", "--seed", "6", "--n-max", "15"};
    CHECK(run(b).out != r1.out);
}

TEST_CASE("verify subcommands")
{
    const auto l = run({"verify", "lemma32", "--n", "10"});
    CHECK(l.code == 0);
    const auto lj = json::parse(l.out);
    CHECK(lj["poly_match"] == true);
    CHECK(lj["sign_ok"] == true);

    CHECK(run({"verify", "lemma32", "--n", "8"}).code == cli::kExitUsage);
    CHECK(run({"verify", "lemma27", "--r", "3", "--n", "9"}).code == 0);
    CHECK(run({"verify", "lemma28", "--r", "3", "--n-max", "30"}).code == 0);
    CHECK(run({"verify", "yquotient", "--r", "4", "--n", "12"}).code == 0);
    CHECK(run({"verify", "wilf", "--r", "3", "--n-max", "20", "--trials", "30"}).code == 0);
    CHECK(run({"verify", "deletion", "--trials", "30", "--n-max", "12"}).code == 0);
    CHECK(run({"verify", "nothing"}).code == cli::kExitUsage);
}

TEST_CASE("scan and climb")
{
    const auto s = run({"scan", "--kind", "nosal_book", "--k", "1", "--max-n", "6"});
    REQUIRE(s.code == 0);
    const auto sj = json::parse(s.out);
    CHECK(sj["violations"].empty());
    CHECK(sj["witnesses_exact"] == true);

    const auto book = run({"scan", "--kind", "nosal_book", "--max-n", "5"});
    CHECK(book.code == 0); // conjecture scans report, they do not gate
    CHECK_FALSE(json::parse(book.out)["violations"].empty());

    const auto c = run({"climb", "--in", "-", "--forbid-clique", "3", "--budget", "10"}, "Dhc\n");
    REQUIRE(c.code == 0);
    const auto cj = json::parse(c.out);
    CHECK(cj.dump().find("trace") != std::string::npos);

    CHECK(run({"climb", "--in", "-", "--forbid-clique", "3"}, "Bw\n").code == cli::kExitUsage);
}
