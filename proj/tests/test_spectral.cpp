#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "spexlab/error.hpp"
#include "spexlab/families.hpp"
#include "spexlab/properties.hpp"
#include "spexlab/spectral.hpp"

using namespace spexlab;

namespace {

double dense_rho(const Graph& g)
{
    const int n = g.order();
    if (n == 0)
        return 0.0;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (auto [u, v] : g.edges())
        a(u, v) = a(v, u) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
}

} // namespace

TEST_CASE("closed-form spectral radii")
{
    CHECK(rho(complete_graph(7)) == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(rho(star_graph(10)) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(rho(cycle_graph(9)) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(rho(path_graph(6)) == doctest::Approx(2 * std::cos(std::numbers::pi / 7)).epsilon(1e-12));
    CHECK(rho(make_multipartite({2, 3})) == doctest::Approx(std::sqrt(6.0)).epsilon(1e-12));
    CHECK(rho(turan(3, 9)) == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(rho(Graph(5)) == 0.0);
    CHECK_THROWS_AS(rho(Graph(0)), InvalidInput);
    SpectralOptions bad;
    bad.tol = 0.0;
    CHECK_THROWS_AS(rho(path_graph(3), bad), InvalidInput);
    CHECK(rho(path_graph(4)) == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-12));
}

TEST_CASE("power iteration agrees with a dense eigensolver")
{
    Rng rng(11);
    for (int t = 0; t < 60; ++t) {
        std::uniform_int_distribution<int> order(1, 70);
        std::uniform_real_distribution<double> dens(0.0, 1.0);
        const Graph g = random_graph(order(rng), dens(rng), rng);
        const auto res = spectral_radius(g);
        CHECK(res.rho == doctest::Approx(dense_rho(g)).epsilon(1e-9));
        CHECK(res.residual <= 1e-10);
        const auto hp = spectral_radius(g, SpectralOptions::precise());
        CHECK(std::abs(hp.rho - dense_rho(g)) <= 1e-11);
    }
    CHECK(rho(y_graph(3, 9)) == doctest::Approx(dense_rho(y_graph(3, 9))).epsilon(1e-12));
}

TEST_CASE("Perron vector is positive, normalised and an eigenvector")
{
    const Graph g = y_graph(4, 13);
    const auto res = spectral_radius(g);
    double top = 0.0;
    for (double x : res.vector) {
        CHECK(x > 0.0);
        top = std::max(top, x);
    }
    CHECK(top == doctest::Approx(1.0));
    for (int v = 0; v < g.order(); ++v) {
        double s = 0.0;
        g.neighbors(v).for_each([&](int w) { s += res.vector[w]; });
        CHECK(s == doctest::Approx(res.rho * res.vector[v]).epsilon(1e-8));
    }
}

TEST_CASE("disconnected graphs use the dominant component")
{
    const Graph g = disjoint_union(cycle_graph(5), complete_graph(4));
    const auto res = spectral_radius(g);
    CHECK(res.disconnected);
    CHECK(res.rho == doctest::Approx(3.0));
    for (int v = 0; v < 5; ++v)
        CHECK(res.vector[v] == 0.0);
    for (int v = 5; v < 9; ++v)
        CHECK(res.vector[v] == doctest::Approx(1.0));
}

TEST_CASE("iteration budget exhaustion raises ConvergenceError")
{
    SpectralOptions opts;
    opts.max_iterations = 2;
    opts.tol = 1e-15;
    CHECK_THROWS_AS(spectral_radius(path_graph(40), opts), ConvergenceError);
}

TEST_CASE("seed does not change the answer")
{
    const Graph g = y_graph(3, 20);
    SpectralOptions a;
    SpectralOptions b;
    b.seed = 99;
    CHECK(rho(g, a) == doctest::Approx(rho(g, b)).epsilon(1e-12));
}

TEST_CASE("Rayleigh quotient")
{
    const Graph k = complete_graph(4);
    const std::vector<double> ones(4, 1.0);
    CHECK(rayleigh_quotient(k, ones) == doctest::Approx(3.0));
    const std::vector<double> e0{1.0, 0.0, 0.0, 0.0};
    CHECK(rayleigh_quotient(k, e0) == 0.0);
    const std::vector<double> zero(4, 0.0);
    CHECK_THROWS_AS(rayleigh_quotient(k, zero), InvalidInput);
    const std::vector<double> short_vec(3, 1.0);
    CHECK_THROWS_AS(rayleigh_quotient(k, short_vec), InvalidInput);
}

TEST_CASE("Wilf bound")
{
    const auto eq = check_wilf(turan(3, 9), 3);
    CHECK(eq.holds);
    CHECK(eq.bound == doctest::Approx(6.0));
    CHECK(eq.rho == doctest::Approx(6.0));
    const auto strict = check_wilf(cycle_graph(5), 2);
    CHECK(strict.holds);
    CHECK(strict.bound == doctest::Approx(2.5));
    // K_4 is not K_4-free; the bound for r = 3 fails as it should
    CHECK_FALSE(check_wilf(complete_graph(4), 2).holds);
}

TEST_CASE("vertex deletion bound and its equality cases")
{
    const auto kn = deletion_bound(complete_graph(6), 2);
    CHECK(kn.holds);
    CHECK(kn.equality);
    const auto leaf = deletion_bound(star_graph(6), 3);
    CHECK(leaf.holds);
    CHECK(leaf.equality);
    const auto centre = deletion_bound(star_graph(6), 0);
    CHECK(centre.holds);
    CHECK_FALSE(centre.equality);
    const auto cyc = deletion_bound(cycle_graph(7), 0);
    CHECK(cyc.holds);
    CHECK_FALSE(cyc.equality);
    CHECK_THROWS_AS(deletion_bound(disjoint_union(complete_graph(3), Graph(1)), 3), PreconditionError);
}

TEST_CASE("edge rotation")
{
    // C_5: move edge 1-2 to 0-2
    const Graph c5 = cycle_graph(5);
    const std::vector<int> s{2};
    const Graph h = rotate_edges(c5, 0, 1, s);
    CHECK(h.adjacent(0, 2));
    CHECK_FALSE(h.adjacent(1, 2));
    CHECK(h.edge_count() == c5.edge_count());
    CHECK(rho(h) > rho(c5) + 1e-9);

    const std::vector<int> empty;
    CHECK_THROWS_AS(rotate_edges(c5, 0, 1, empty), InvalidInput);
    const std::vector<int> not_nbr{3};
    CHECK_THROWS_AS(rotate_edges(c5, 0, 1, not_nbr), InvalidInput);
    const std::vector<int> self{0};
    CHECK_THROWS_AS(rotate_edges(c5, 0, 1, self), InvalidInput);
    const std::vector<int> already{2};
    CHECK_THROWS_AS(rotate_edges(complete_graph(3), 0, 1, already), InvalidInput);
    const std::vector<int> dup{2, 2};
    CHECK_THROWS_AS(rotate_edges(c5, 0, 1, dup), InvalidInput);
}

TEST_CASE("property sweeps at small scale")
{
    const int rs[] = {2, 3};
    CHECK(wilf_sweep(rs, 40, 60, 5).passed());
    CHECK(deletion_sweep(20, 60, 5).passed());
    CHECK(rotation_sweep(20, 40, 5).passed());
    CHECK(rayleigh_sweep(5, 10, 5).passed());
    CHECK(lemma28_sweep(3, 40).passed());
}
