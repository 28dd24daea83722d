#include "proxlab/generators.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace proxlab;
using oracle::q;
using oracle::vec;

TEST(LowerBound, SmallestInstance)
{
    auto L = gen_lower_bound(3, 2, 0);
    EXPECT_EQ(L.B, (Matrix{{1, 0}, {2, 3}}));
    EXPECT_EQ(L.rhs, vec({1, 1}));
    EXPECT_EQ(L.x_star, (Vector{q(1), q(-1, 3)}));
    EXPECT_EQ(inf_norm(L.x_star), 1);
    EXPECT_EQ(L.instance.c(), vec({3, 3}));
    auto c = certify_lower_bound(L);
    EXPECT_EQ(c.parallelepiped_points, 1u);
    ASSERT_TRUE(c.delta_n1_equals_delta.has_value());
    EXPECT_TRUE(*c.delta_n1_equals_delta);
    // x* is the unique LP optimum
    auto lp = lp_max(L.instance.polyhedron(), L.instance.c());
    EXPECT_EQ(lp.optimal_vertices.size(), 1u);
    EXPECT_EQ(lp.vertex.point, L.x_star);
}

TEST(LowerBound, ParallelepipedCounts)
{
    auto L = gen_lower_bound(4, 3, 1);
    auto c = inspect_lower_bound(L);
    EXPECT_EQ(c.parallelepiped_points, 2u);
    for (long delta = 3; delta <= 6; ++delta)
        for (std::size_t n = 2; n <= 4; ++n)
            for (std::size_t k = 0; k < n; ++k) {
                if (delta - static_cast<long>(n) + static_cast<long>(k) < 1)
                    continue;
                auto c2 = inspect_lower_bound(gen_lower_bound(delta, n, k));
                EXPECT_EQ(c2.parallelepiped_points, std::size_t{1} << k);
                EXPECT_TRUE(c2.binv_columns_integral);
            }
}

TEST(LowerBound, ClaimsAndProximityOnGrid)
{
    for (long delta = 3; delta <= 6; ++delta)
        for (std::size_t n = 2; n <= 4; ++n) {
            auto L = gen_lower_bound(delta, n, n - 2);
            auto c = certify_lower_bound(L);
            EXPECT_TRUE(c.delta_n1_equals_delta.value_or(false));
            auto rep = measure_proximity(L.instance, {}, DeltaModularWitness{L.T, L.B});
            EXPECT_EQ(rep.proximity, delta - 2) << delta << " " << n;
            EXPECT_EQ(inf_norm(L.x_star), delta - 2);
            EXPECT_TRUE(rep.bound_tu.holds());
            EXPECT_EQ(rep.delta_table.back(), delta);
        }
}

TEST(LowerBound, BoundaryCase)
{
    auto L = gen_lower_bound(3, 4, 2);
    EXPECT_EQ(L.rhs[2], 1);
    EXPECT_EQ(certify_lower_bound(L).failure(), "");
}

TEST(LowerBound, TopCut)
{
    for (long delta = 3; delta <= 6; ++delta)
        for (std::size_t n = 2; n <= 4; ++n) {
            auto L = gen_lower_bound(delta, n, n - 1);
            EXPECT_EQ(inf_norm(L.x_star), 1);
            EXPECT_EQ(inf_norm(L.instance.b()), delta - 1);
        }
}

TEST(LowerBound, ParameterErrors)
{
    EXPECT_THROW(gen_lower_bound(2, 2, 0), Error);
    EXPECT_THROW(gen_lower_bound(3, 1, 0), Error);
    EXPECT_THROW(gen_lower_bound(3, 3, 3), Error);
    EXPECT_THROW(gen_lower_bound(3, 5, 0), Error); // Delta - n + k < 1
}

TEST(LowerBound, CorruptedWitnessFailsCertification)
{
    auto L = gen_lower_bound(4, 3, 1);
    L.T(0, 1) = 1;
    try {
        certify_lower_bound(L);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Certification);
    }
}

TEST(RandomInstances, Deterministic)
{
    auto a = gen_random(3, 8, 3, 7);
    auto b = gen_random(3, 8, 3, 7);
    EXPECT_EQ(a.instance, b.instance);
    EXPECT_EQ(a.metadata, b.metadata);
    EXPECT_NE(gen_random(3, 8, 3, 8).instance, a.instance);
}

TEST(RandomInstances, BoundedAndIntegerFeasible)
{
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        std::size_t n = 1 + seed % 4;
        auto g = gen_random(n, n + 1 + seed % 4, 3, seed);
        auto P = g.instance.polyhedron();
        EXPECT_TRUE(is_bounded(P));
        EXPECT_FALSE(lattice_points(P).empty());
        EXPECT_EQ(rank(g.instance.A()), n);
    }
}

TEST(RandomInstances, OneDimensional)
{
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto g = gen_random(1, 3, 3, seed);
        auto rep = measure_proximity(g.instance);
        EXPECT_LT(rep.proximity, 1);
        EXPECT_EQ(rep.bound_main.flag, BoundFlag::NotApplicable);
        EXPECT_TRUE(rep.all_hold());
    }
}

TEST(RandomInstances, SquareSystemsGetBoundingRow)
{
    // m = n rows can never positively span
    auto g = gen_random(2, 2, 3, 3);
    EXPECT_EQ(g.instance.m(), 3u);
    EXPECT_EQ(g.metadata.at("bounding_row_appended"), "true");
    EXPECT_TRUE(is_bounded(g.instance.polyhedron()));
}

TEST(StrictlyDeltaModular, WitnessInvariants)
{
    for (long delta = 1; delta <= 5; ++delta)
        for (std::uint64_t seed = 1; seed <= 8; ++seed) {
            std::size_t n = 2 + seed % 2;
            auto g = gen_strictly_delta_modular(n, n + 3, delta, seed);
            ASSERT_TRUE(g.witness);
            EXPECT_TRUE(is_totally_unimodular(g.witness->T));
            EXPECT_EQ(abs(det(g.witness->B)), delta);
            EXPECT_EQ(g.witness->T * g.witness->B, g.instance.A());
            auto rep = measure_proximity(g.instance, {}, g.witness);
            EXPECT_TRUE(rep.bound_tu.holds());
            if (delta == 1) {
                EXPECT_EQ(rep.proximity, 0);
            }
            // a proximity bound of 1 needs Delta_{n-1} <= 2 as well
            if (delta == 2 && rep.delta_table[n - 2] <= 2) {
                EXPECT_LE(rep.proximity, 1);
            }
        }
}

TEST(StrictlyDeltaModular, NonzeroMaximalMinorsAreDelta)
{
    auto g = gen_strictly_delta_modular(3, 6, 4, 21);
    const Matrix& A = g.instance.A();
    for_each_subset(A.rows(), 3, [&](const std::vector<std::size_t>& rows) {
        Rational d = abs(det(A.select_rows(rows)));
        EXPECT_TRUE(d == 0 || d == 4);
    });
}
