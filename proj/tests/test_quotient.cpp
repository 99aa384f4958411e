#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <Eigen/Dense>

#include "spexlab/error.hpp"
#include "spexlab/families.hpp"
#include "spexlab/intpoly.hpp"
#include "spexlab/properties.hpp"
#include "spexlab/quotient.hpp"
#include "spexlab/spectral.hpp"

using namespace spexlab;

namespace {

/// det(M) by Bareiss fraction-free elimination.
BigInt bareiss_det(std::vector<std::vector<BigInt>> a)
{
    const std::size_t n = a.size();
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return n == 0 ? BigInt(1) : sign * a[n - 1][n - 1];
}

/// det(xI - M) at integer x.
BigInt char_value(const IntMatrix& m, long x)
{
    const std::size_t n = m.order();
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = (i == j ? BigInt(x) : BigInt(0)) - m.at(i, j);
    return bareiss_det(a);
}

IntMatrix random_matrix(std::size_t n, Rng& rng)
{
    std::uniform_int_distribution<int> d(-4, 6);
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = d(rng);
    return m;
}

double eigen_largest_real(const IntMatrix& m)
{
    const auto n = static_cast<Eigen::Index>(m.order());
    Eigen::MatrixXd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            a(i, j) = m.at(i, j).convert_to<double>();
    Eigen::EigenSolver<Eigen::MatrixXd> es(a, false);
    double best = -1e300;
    for (Eigen::Index i = 0; i < n; ++i)
        if (std::abs(es.eigenvalues()[i].imag()) < 1e-9)
            best = std::max(best, es.eigenvalues()[i].real());
    return best;
}

IntPoly poly(std::initializer_list<long> low_first)
{
    std::vector<BigInt> c;
    for (long v : low_first)
        c.emplace_back(v);
    return IntPoly(std::move(c));
}

} // namespace

TEST_CASE("characteristic polynomial examples")
{
    CHECK(char_poly(IntMatrix{{0, 1}, {1, 0}}) == poly({-1, 0, 1}));
    CHECK(char_poly(IntMatrix{{0, 3}, {2, 0}}) == poly({-6, 0, 1}));
    CHECK(char_poly(IntMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}) == poly({-2, -3, 0, 1}));
    CHECK(char_poly(IntMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}).to_string() == "x^3 - 3*x - 2");
}

TEST_CASE("characteristic polynomial agrees with Bareiss determinants")
{
    Rng rng(29);
    for (int t = 0; t < 40; ++t) {
        const auto m = random_matrix(1 + t % 9, rng);
        const IntPoly p = char_poly(m);
        CHECK(p.degree() == static_cast<int>(m.order()));
        CHECK(p.leading() == 1);
        for (long x = -3; x <= 3; ++x)
            CHECK(p.value_at(BigRational(x)) == BigRational(char_value(m, x)));
    }
}

TEST_CASE("exact sign evaluation")
{
    const IntPoly p = poly({-6, 0, 1}); // x^2 - 6
    CHECK(p.sign_at(BigInt(49), BigInt(20)) > 0); // 2.45^2 = 6.0025
    CHECK(p.sign_at(BigInt(24), BigInt(10)) < 0);
    CHECK(p.sign_at(BigInt(25), BigInt(10)) > 0);
    CHECK(p.sign_at(BigInt(-25), BigInt(10)) > 0);
    CHECK(poly({-4, 0, 1}).sign_at(BigInt(4), BigInt(2)) == 0);
}

TEST_CASE("largest root")
{
    CHECK(largest_root(poly({-6, 0, 1})) == doctest::Approx(std::sqrt(6.0)).epsilon(1e-13));
    CHECK(largest_root(poly({-1, 0, 1})) == doctest::Approx(1.0).epsilon(1e-13));
    // (x - 1)(x - 2)(x + 5)
    CHECK(largest_root(poly({10, -13, 2, 1})) == doctest::Approx(2.0).epsilon(1e-13));
    // (x - 3)^2 (x + 1): repeated largest root
    CHECK(largest_root(poly({9, 3, -5, 1})) == doctest::Approx(3.0).epsilon(1e-12));
    // (x + 2)(x + 7): all roots negative
    CHECK(largest_root(poly({14, 9, 1})) == doctest::Approx(-2.0).epsilon(1e-13));
    CHECK_THROWS_AS(largest_root(poly({1, 0, 1})), NumericError);
    CHECK_THROWS_AS(largest_root(poly({5})), NumericError);
}

TEST_CASE("largest root agrees with a dense eigensolver")
{
    Rng rng(31);
    for (int t = 0; t < 40; ++t) {
        const auto m = random_matrix(2 + t % 7, rng);
        const double expect = eigen_largest_real(m);
        if (expect < -1e299)
            continue;
        CHECK(largest_root(char_poly(m)) == doctest::Approx(expect).epsilon(1e-7));
    }
}

TEST_CASE("equitable refinement")
{
    CHECK(equitable_refine(turan(3, 9), Partition::unit(9)).size() == 1);
    const auto k23 = equitable_refine(make_multipartite({2, 3}), Partition::unit(5));
    REQUIRE(k23.size() == 2);
    CHECK(k23.cell(0).size() + k23.cell(1).size() == 5);
    CHECK(std::min(k23.cell(0).size(), k23.cell(1).size()) == 2);

    const auto p5 = equitable_refine(path_graph(5), Partition::unit(5));
    CHECK(p5.size() == 3);
    CHECK(is_equitable(path_graph(5), p5));

    const Partition pi = y_graph_partition(3, 9);
    CHECK(equitable_refine(y_graph(3, 9), pi) == pi);

    Rng rng(37);
    for (int t = 0; t < 30; ++t) {
        const Graph g = random_graph(2 + t, 0.3, rng);
        const auto ref = equitable_refine(g, Partition::unit(g.order()));
        CHECK(is_equitable(g, ref));
        CHECK(equitable_refine(g, ref) == ref);
    }
}

TEST_CASE("quotient matrix examples")
{
    const Partition bip(5, {{0, 1}, {2, 3, 4}});
    CHECK(quotient_matrix(make_multipartite({2, 3}), bip) == IntMatrix{{0, 3}, {2, 0}});
    const Partition t3(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
    CHECK(quotient_matrix(turan(3, 9), t3) == IntMatrix{{0, 3, 3}, {3, 0, 3}, {3, 3, 0}});

    const IntMatrix b = quotient_matrix(y_graph(3, 9), y_graph_partition(3, 9));
    REQUIRE(b.order() == 6);
    const long top[] = {0, 1, 0, 0, 1, 3};
    for (int j = 0; j < 6; ++j)
        CHECK(b.at(0, j) == top[j]);
}

TEST_CASE("non-equitable partitions are rejected with details")
{
    const Partition bad(4, {{0, 1}, {2, 3}});
    try {
        quotient_matrix(path_graph(4), bad);
        FAIL("expected EquitabilityError");
    } catch (const EquitabilityError& e) {
        CHECK(e.cell_i() == 0);
        CHECK(e.cell_j() == 1);
        CHECK(std::string(e.what()).find("cell 0") != std::string::npos);
    }
    CHECK_FALSE(is_equitable(path_graph(4), bad));
}

TEST_CASE("quotient spectrum matches the graph on connected graphs")
{
    Rng rng(41);
    for (int t = 0; t < 25; ++t) {
        const Graph g = random_connected_graph(3 + t, 0.15, rng);
        const auto pi = equitable_refine(g, Partition::unit(g.order()));
        const double lam = largest_root(char_poly(quotient_matrix(g, pi)));
        CHECK(lam == doctest::Approx(rho(g, SpectralOptions::precise())).epsilon(1e-9));
    }
}

TEST_CASE("closed-form polynomials")
{
    const IntPoly p9 = lemma32_polynomial(9);
    CHECK(p9.degree() == 6);
    CHECK(p9.coefficient(6) == 729);
    CHECK(p9.coefficient(5) == 0);
    CHECK(p9.coefficient(4) == -243 * 81 + 243 * 9 - 729);
    CHECK(lemma32_polynomial(10).coefficient(3) == -54 * 1000 + 162 * 100 - 648 * 10 + 540);
    CHECK(lemma32_polynomial(11).coefficient(0) == -135 * 1331 + 1215 * 121 - 2025 * 11 - 3375);
    CHECK_THROWS_AS(lemma32_polynomial(5), InvalidInput);
}

TEST_CASE("Y_3(n) quotient matches the closed form for every n in [9, 60]")
{
    for (int n = 9; n <= 60; ++n) {
        const auto rep = verify_lemma32(n);
        INFO("n = " << n);
        CHECK(rep.poly_match);
        CHECK(rep.sign_ok);
        CHECK(rep.scaled_value_at_bound < 0);
        CHECK(rep.rho_agree);
        CHECK(rep.above_bound);
    }
    const auto big = verify_lemma32(100);
    CHECK(big.passed());
    CHECK(big.rho_dense > 200.0 / 3 - 7.0 / 12);
    CHECK_THROWS_AS(verify_lemma32(8), PreconditionError);
    CHECK_THROWS_AS(y_graph_partition(3, 8), PreconditionError);
}

TEST_CASE("generic quotient pipeline for r >= 4")
{
    for (int r : {4, 5})
        for (int n : {2 * r, 2 * r + 1, 17, 30, 60}) {
            const auto rep = verify_y_quotient(r, n);
            INFO("r = " << r << ", n = " << n);
            CHECK(rep.rho_agree);
            CHECK(rep.above_bound);
        }
    CHECK(verify_y_quotient(3, 12).passed());
}
