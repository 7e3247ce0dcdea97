#include <doctest.h>

#include <stdexcept>

#include "flowers/complete_flower.hpp"
#include "flowers/cycle_flower.hpp"
#include "flowers/resistance.hpp"
#include "support/exact_oracle.hpp"

using namespace flowers;

TEST_SUITE("cycle_flower") {

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(CycleFlowerParams({6, 3, 0}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(CycleFlowerParams({6, 3, 4}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(CycleFlowerParams({2, 3, 1}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(CycleFlowerParams({6, 2, 1}).validate(), std::invalid_argument);
    CHECK_NOTHROW(CycleFlowerParams({6, 3, 3}).validate());
}

TEST_CASE("cycle resistance") {
    CHECK(cycle_resistance(4, 2) == Rational(1));
    CHECK(cycle_resistance(7, 0) == Rational(0));
    CHECK(cycle_resistance(5, 1) == Rational(4, 5));
    for (int m = 3; m <= 12; ++m)
        for (int dist = 0; dist <= m; ++dist) CHECK(cycle_resistance(m, dist) == cycle_resistance(m, m - dist));
    CHECK_THROWS_AS(cycle_resistance(5, 6), std::invalid_argument);
    CHECK_THROWS_AS(cycle_resistance(5, -1), std::invalid_argument);
}

TEST_CASE("pair formula examples") {
    CyclePairPosition cross;
    cross.d = 2;
    cross.p_u = cross.p_v = 1;
    cross.l = cross.k = 1;
    CHECK(gs_resistance({3, 3, 1}, cross) == Rational(10, 9));

    CyclePairPosition same;
    same.same_petal = same.same_arc = true;
    same.p_u = same.p_v = 2;
    same.l = same.k = 1;
    CHECK(gs_resistance({6, 4, 2}, same) == Rational(0));
}

TEST_CASE("different arcs on F_4(C_6), p = 3") {
    const CycleFlowerParams params{6, 4, 3};
    CyclePairPosition pos;
    pos.same_petal = true;
    pos.p_u = pos.p_v = 3;
    pos.l = pos.k = 1;
    const Flower flower = build_flower(cycle_flower_spec(params));
    const double oracle = resistance(flower.graph(), flower.label({1, 1, false}), flower.label({1, 5, false}));
    CHECK(std::abs(gs_resistance(params, pos).to_double() - oracle) < 1e-9);
    CHECK(gs_resistance(params, cycle_pair_position(params, {1, 1, false}, {1, 5, false})) ==
          gs_resistance(params, pos));
}

TEST_CASE("position invariants are enforced") {
    const CycleFlowerParams params{6, 4, 2};
    CyclePairPosition bad;
    bad.p_u = 3;  // neither p nor m - p
    bad.p_v = 2;
    bad.d = 2;
    CHECK_THROWS_AS(gs_resistance(params, bad), std::invalid_argument);

    CyclePairPosition unordered;
    unordered.same_petal = unordered.same_arc = true;
    unordered.p_u = unordered.p_v = 2;
    unordered.l = 3;
    unordered.k = 1;
    CHECK_THROWS_AS(gs_resistance(params, unordered), std::invalid_argument);

    CyclePairPosition far;
    far.p_u = far.p_v = 2;
    far.l = 5;  // beyond the arc of length m - p_u = 4
    far.d = 2;
    CHECK_THROWS_AS(gs_resistance(params, far), std::invalid_argument);

    CyclePairPosition no_d;
    no_d.p_u = no_d.p_v = 2;
    no_d.d = 5;
    CHECK_THROWS_AS(gs_resistance(params, no_d), std::invalid_argument);
}

TEST_CASE("indices") {
    CHECK(gs_kirchhoff({3, 3, 1}) == Rational(65, 6));
    CHECK(gs_kemeny({3, 3, 1}) == Rational(14, 3));
    CHECK(gs_kirchhoff({4, 3, 2}) == Rational(33));
    CHECK(gs_kemeny({4, 3, 2}) == Rational(53, 6));

    const Graph g = build_flower(cycle_flower_spec({4, 3, 2})).graph();
    const auto exact = testing::resistance_matrix_exact(g);
    CHECK(testing::kirchhoff_exact(exact) == Rational(33));
    CHECK(testing::kemeny_exact(g, exact) == Rational(53, 6));

    for (int n = 3; n <= 12; ++n) {
        CHECK(gs_kirchhoff({3, n, 1}) == cf_kirchhoff({3, n}));
        CHECK(gs_kemeny({3, n, 1}) == cf_kemeny({3, n}));
        CHECK(gs_kirchhoff({3, n, 1}) == Rational(4 * n * n * n + 12 * n * n - 7 * n, 18));
        CHECK(gs_kemeny({3, n, 1}) == Rational(n * n + 2 * n - 1, 3));
    }
}

TEST_CASE("closed forms match the oracle") {
    for (int m = 3; m <= 6; ++m) {
        for (int p = 1; 2 * p <= m; ++p) {
            for (int n = 3; n <= 6; ++n) {
                const CycleFlowerParams params{m, n, p};
                CAPTURE(m);
                CAPTURE(p);
                CAPTURE(n);
                const FlowerSpec spec = cycle_flower_spec(params);
                const Flower flower = build_flower(spec);
                const ResistanceMatrix r = resistance_matrix(flower.graph());
                const int size = flower.graph().vertex_count();
                for (int i = 0; i < size; ++i) {
                    for (int j = 0; j < size; ++j) {
                        if (i == j) continue;
                        const auto& u = flower.locator(i);
                        const auto& v = flower.locator(j);
                        const Rational value = gs_resistance(params, cycle_pair_position(params, u, v));
                        CHECK(std::abs(value.to_double() - r(i, j)) < 1e-9);
                        CHECK(value == flower_resistance(spec, u, v, CycleBaseResistance(m)));
                    }
                }
                CHECK(std::abs(gs_kirchhoff(params).to_double() - kirchhoff_numeric(r)) < 1e-9);
                CHECK(std::abs(gs_kemeny(params).to_double() - kemeny_numeric(flower.graph(), r)) < 1e-9);
            }
        }
    }
}

TEST_CASE("swapping the pair leaves the value unchanged") {
    for (int m = 4; m <= 8; ++m) {
        for (int p = 1; 2 * p <= m; ++p) {
            const CycleFlowerParams params{m, 5, p};
            const Flower flower = build_flower(cycle_flower_spec(params));
            const int size = flower.graph().vertex_count();
            for (int i = 0; i < size; ++i) {
                for (int j = i + 1; j < size; ++j) {
                    const auto& u = flower.locator(i);
                    const auto& v = flower.locator(j);
                    CHECK(gs_resistance(params, cycle_pair_position(params, u, v)) ==
                          gs_resistance(params, cycle_pair_position(params, v, u)));
                }
            }
        }
    }
}

TEST_CASE("positions of associated vertices") {
    const CycleFlowerParams params{7, 4, 3};
    // x of petal 2 and an interior vertex of petal 2's short arc
    auto pos = cycle_pair_position(params, {2, 0, true}, {2, 1, false});
    CHECK(pos.same_petal);
    CHECK_FALSE(pos.same_arc);
    CHECK(pos.p_u == 3);
    CHECK(pos.l == 0);
    // addressed as y of petal 3, paired with a long-arc vertex of petal 3
    pos = cycle_pair_position(params, {3, 3, false}, {3, 5, false});
    CHECK(pos.same_petal);
    CHECK(pos.same_arc);
    CHECK(pos.p_u == 3);
    CHECK(pos.p_v == 3);
    CHECK(pos.l == 2);
    CHECK(pos.k == 4);
    CHECK_THROWS_AS(cycle_pair_position(params, {1, 0, true}, {2, 3, false}), std::invalid_argument);
}

TEST_CASE("base resistance adapter") {
    const CycleBaseResistance c6(6);
    CHECK(c6(0, 3) == Rational(3, 2));
    CHECK(c6(1, 5) == Rational(4, 3));
    CHECK_THROWS_AS(c6(0, 6), std::out_of_range);
}

}
