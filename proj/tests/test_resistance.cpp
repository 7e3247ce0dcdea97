#include <doctest.h>

#include <cstdlib>
#include <random>
#include <vector>

#include "flowers/complete_flower.hpp"
#include "flowers/flower.hpp"
#include "flowers/resistance.hpp"
#include "support/exact_oracle.hpp"
#include "support/random_graphs.hpp"

using namespace flowers;

namespace {

constexpr double kTol = 1e-9;

Graph remove_edge(const Graph& g, const Edge& gone) {
    std::vector<Edge> kept;
    for (const Edge& e : g.edges())
        if (e != gone) kept.push_back(e);
    return graph_from_edge_list(kept);
}

}  // namespace

TEST_SUITE("resistance") {

TEST_CASE("small graphs") {
    CHECK(std::abs(resistance(path_graph(2), 0, 1) - 1.0) < kTol);
    CHECK(std::abs(resistance(complete_graph(3), 0, 2) - 2.0 / 3.0) < kTol);
    CHECK(std::abs(resistance(cycle_graph(4), 0, 2) - 1.0) < kTol);
    CHECK(resistance(petersen_graph(), 4, 4) == 0.0);
}

TEST_CASE("matrix entries") {
    const ResistanceMatrix k3 = resistance_matrix(complete_graph(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(std::abs(k3(i, j) - (i == j ? 0.0 : 2.0 / 3.0)) < kTol);

    const ResistanceMatrix p3 = resistance_matrix(path_graph(3));
    CHECK(std::abs(p3(0, 2) - 2.0) < kTol);
    CHECK(std::abs(p3(0, 1) - 1.0) < kTol);
    CHECK(std::abs(p3(1, 2) - 1.0) < kTol);
}

TEST_CASE("matrix agrees with single-pair queries") {
    const Graph g = petersen_graph();
    const ResistanceMatrix r = resistance_matrix(g);
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) CHECK(std::abs(r(i, j) - resistance(g, i, j)) < kTol);
}

TEST_CASE("agrees with exact elimination") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 6; ++trial) {
        const Graph g = testing::random_connected_graph(rng, 4 + trial, 0.3);
        const ResistanceMatrix r = resistance_matrix(g);
        const auto exact = testing::resistance_matrix_exact(g);
        for (int i = 0; i < g.vertex_count(); ++i)
            for (int j = 0; j < g.vertex_count(); ++j) CHECK(std::abs(r(i, j) - exact[i][j].to_double()) < kTol);
    }
}

TEST_CASE("kirchhoff and kemeny") {
    const Graph k3 = complete_graph(3);
    const ResistanceMatrix rk3 = resistance_matrix(k3);
    CHECK(std::abs(kirchhoff_numeric(rk3) - 2.0) < kTol);
    CHECK(std::abs(kemeny_numeric(k3, rk3) - 4.0 / 3.0) < kTol);

    const Graph p2 = path_graph(2);
    const ResistanceMatrix rp2 = resistance_matrix(p2);
    CHECK(std::abs(kirchhoff_numeric(rp2) - 1.0) < kTol);
    CHECK(std::abs(kemeny_numeric(p2, rp2) - 0.5) < kTol);

    const Graph sf3 = build_flower(complete_flower_spec({3, 3})).graph();
    const ResistanceMatrix rsf = resistance_matrix(sf3);
    CHECK(std::abs(kirchhoff_numeric(rsf) - 65.0 / 6.0) < kTol);
    CHECK(std::abs(kemeny_numeric(sf3, rsf) - 14.0 / 3.0) < kTol);

    // same values from exact elimination, independent of both closed form and oracle
    const auto exact = testing::resistance_matrix_exact(sf3);
    CHECK(testing::kirchhoff_exact(exact) == Rational(65, 6));
    CHECK(testing::kemeny_exact(sf3, exact) == Rational(14, 3));
}

TEST_CASE("potentials solve the grounded system") {
    const Graph g = petersen_graph();
    const GroundedLaplacian grounded(g);
    const Eigen::MatrixXd l = laplacian(g).cast<double>();
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
            if (i == j) continue;
            const Eigen::VectorXd x = grounded.potentials(i, j);
            Eigen::VectorXd rhs = Eigen::VectorXd::Zero(10);
            rhs(i) = 1.0;
            rhs(j) = -1.0;
            CHECK((l * x - rhs).norm() <= 1e-9 * rhs.norm());
        }
    }
}

TEST_CASE("bad indices") {
    CHECK_THROWS_AS(resistance(complete_graph(3), 0, 3), std::out_of_range);
    CHECK_THROWS_AS(resistance(complete_graph(3), -1, 0), std::out_of_range);
}

TEST_CASE("metric properties on random graphs") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = testing::random_connected_graph(rng, 3 + trial, 0.15);
        const MetricReport rep = check_metric(resistance_matrix(g));
        CHECK(rep.max_asymmetry == 0.0);
        CHECK(rep.max_diagonal == 0.0);
        CHECK(rep.min_off_diagonal > 0.0);
        CHECK(rep.worst_triangle <= kTol);
        CHECK(rep.worst_reverse_triangle <= kTol);
        CHECK(rep.passes(kTol));
    }
}

TEST_CASE("removing an edge never lowers a resistance") {
    const Graph g = petersen_graph();
    const ResistanceMatrix before = resistance_matrix(g);
    for (const Edge& e : {Edge{0, 1}, Edge{0, 5}, Edge{5, 7}}) {
        const ResistanceMatrix after = resistance_matrix(remove_edge(g, e));
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j) CHECK(after(i, j) >= before(i, j) - kTol);
    }
}

TEST_CASE("tolerance helper") {
    const Tolerance tol;
    CHECK(tol.close(1.0, 1.0 + 5e-10));
    CHECK_FALSE(tol.close(1.0, 1.0 + 5e-9));
    // relative part takes over for large magnitudes
    CHECK(tol.close(1e6, 1e6 + 5e-7));
    CHECK_FALSE(tol.close(1e6, 1e6 + 5e-5));
}

TEST_CASE("tolerance from the environment") {
    ::setenv("FLOWER_TOL", "1e-3", 1);
    CHECK(Tolerance::from_env().absolute == 1e-3);
    ::setenv("FLOWER_TOL", "junk", 1);
    CHECK(Tolerance::from_env().absolute == 1e-9);
    ::unsetenv("FLOWER_TOL");
    CHECK(Tolerance::from_env().absolute == 1e-9);
}

}
