#include "proxlab/generators.hpp"
#include "proxlab/spindle.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace proxlab;
using oracle::q;
using oracle::vec;

namespace {

Matrix plus_minus_identity(std::size_t n)
{
    return Matrix::identity(n).stacked(-Matrix::identity(n));
}

/// Normalized instances with a fractional optimum, of the requested dimension.
std::vector<NormalizedInstance> nontrivial(std::size_t n, std::size_t count, std::uint64_t seed0 = 1)
{
    std::vector<NormalizedInstance> out;
    for (std::uint64_t seed = seed0; out.size() < count && seed < seed0 + 2000; ++seed) {
        auto N = normalize(gen_random(n, n + 3, 3, seed).instance);
        if (!is_zero(N.x_star) && dimension(N.base.polyhedron()) == n)
            out.push_back(std::move(N));
    }
    return out;
}

/// Face dimension by brute force: affine hull of the vertices tight on all rows tight at every given vertex.
std::size_t oracle_face_dim(const SpindleFaces& sf, const std::vector<Vector>& generators)
{
    const HPolyhedron& S = sf.rep.system;
    std::vector<std::size_t> common;
    for (std::size_t r = 0; r < S.num_rows(); ++r) {
        bool all = true;
        for (const auto& g : generators)
            all = all && S.row_value(r, g) == S.b()[r];
        if (all)
            common.push_back(r);
    }
    std::vector<Vector> pts;
    for (const auto& v : sf.vertices) {
        bool all = true;
        for (auto r : common)
            all = all && S.row_value(r, v) == S.b()[r];
        if (all)
            pts.push_back(v);
    }
    return affine_dimension(pts);
}

} // namespace

TEST(Spindle, BoxCase)
{
    auto sf = spindle_faces(build_spindle(plus_minus_identity(2), vec({1, 1})));
    std::vector<Vector> expect{vec({0, 0}), vec({0, 1}), vec({1, 0}), vec({1, 1})};
    EXPECT_EQ(sf.vertices, expect);
    EXPECT_EQ(sf.dim, 2u);
    EXPECT_TRUE(spindle_symmetric(sf));
}

TEST(Spindle, ZeroApexIsAPoint)
{
    Matrix A{{1, 2}, {-1, 1}, {0, -1}};
    auto sf = spindle_faces(build_spindle(A, vec({0, 0})));
    ASSERT_EQ(sf.vertices.size(), 1u);
    EXPECT_TRUE(is_zero(sf.vertices[0]));
    EXPECT_EQ(sf.dim, 0u);
}

TEST(Spindle, LowerDimensionalApexUsesEqualities)
{
    // x* on the kernel of the first row: S lies in x_1 = 0
    auto S = build_spindle(plus_minus_identity(2), vec({0, 2}));
    auto sf = spindle_faces(S);
    EXPECT_EQ(sf.dim, 1u);
    EXPECT_EQ(sf.vertices, (std::vector<Vector>{vec({0, 0}), vec({0, 2})}));
    EXPECT_EQ(S.system.equality_rows().size(), 2u);
}

TEST(Spindle, ContainedInPolyhedronAndSymmetric)
{
    for (const auto& N : nontrivial(3, 15)) {
        auto sf = spindle_faces(build_spindle(N.base.A(), N.x_star));
        EXPECT_TRUE(spindle_within(sf, N.base.polyhedron()));
        EXPECT_TRUE(spindle_symmetric(sf));
        EXPECT_TRUE(sf.find(N.x_star).has_value());
        EXPECT_TRUE(sf.find(zero_vector(3)).has_value());
    }
}

TEST(Spindle, NestedContainment)
{
    for (const auto& N : nontrivial(3, 10, 50)) {
        SpindleRep outer = build_spindle(N.base.A(), N.x_star);
        auto sf = spindle_faces(outer);
        // every vertex and the centre are valid inner apexes
        std::vector<Vector> apexes = sf.vertices;
        apexes.push_back(Rational(1, 2) * N.x_star);
        for (const auto& y : apexes) {
            auto inner = spindle_faces(build_spindle(N.base.A(), y));
            for (const auto& v : inner.vertices)
                EXPECT_TRUE(outer.system.contains(v));
            EXPECT_LE(inner.dim, sf.dim);
        }
    }
}

TEST(Spindle, ConeRaysGenerateConeDirections)
{
    for (const auto& N : nontrivial(3, 8, 90)) {
        auto rays = cone_rays(N.base.A(), N.x_star);
        HPolyhedron C = cone_system(N.base.A(), N.x_star);
        for (const auto& r : rays) {
            EXPECT_TRUE(C.contains(r));
            EXPECT_EQ(primitive_integer(r), r);
        }
        // every spindle vertex is a nonnegative combination, so it lies in C
        auto sf = spindle_faces(build_spindle(N.base.A(), N.x_star));
        for (const auto& v : sf.vertices)
            EXPECT_TRUE(C.contains(v));
    }
}

TEST(FacePath, CubeEdge)
{
    auto sf = spindle_faces(build_spindle(plus_minus_identity(3), vec({1, 1, 1})));
    auto fp = face_path(sf, 1);
    auto apex = *sf.find(vec({1, 1, 1}));
    auto zero = *sf.find(vec({0, 0, 0}));
    auto v = *sf.find(fp.vertex);
    EXPECT_EQ(fp.F.dim, 1u);
    EXPECT_EQ(fp.G.dim, 2u);
    EXPECT_TRUE(face_contains(fp.F, apex));
    EXPECT_TRUE(face_contains(fp.F, v));
    EXPECT_TRUE(face_contains(fp.G, zero));
    EXPECT_TRUE(face_contains(fp.G, v));
    // two coordinates equal to one: adjacent to the apex
    Rational s = 0;
    for (const auto& x : fp.vertex)
        s += x;
    EXPECT_EQ(s, 2);
    EXPECT_EQ(fp.lower_in_basis, 1u);
    EXPECT_EQ(fp.upper_in_basis, 2u);
}

TEST(FacePath, SquareFullBlock)
{
    auto sf = spindle_faces(build_spindle(plus_minus_identity(2), vec({1, 1})));
    auto fp = face_path(sf, 2);
    EXPECT_TRUE(is_zero(fp.vertex));
    EXPECT_EQ(fp.F.dim, 2u);
    EXPECT_EQ(fp.G.dim, 0u);
    EXPECT_EQ(fp.G.vertex_ids.size(), 1u);
    EXPECT_THROW(face_path(sf, 0), Error);
    EXPECT_THROW(face_path(sf, 3), Error);
}

TEST(FacePath, RandomFourDimensionalSpindles)
{
    int checked = 0;
    for (const auto& N : nontrivial(4, 8)) {
        auto sf = spindle_faces(build_spindle(N.base.A(), N.x_star));
        const std::size_t k = sf.dim;
        auto apex = *sf.find(N.x_star);
        auto zero = *sf.find(zero_vector(4));
        for (std::size_t d = 1; d <= k; ++d) {
            auto fp = face_path(sf, d);
            auto v = *sf.find(fp.vertex);
            EXPECT_EQ(fp.F.dim, d);
            EXPECT_EQ(fp.G.dim, k - d);
            EXPECT_TRUE(face_contains(fp.F, apex) && face_contains(fp.F, v));
            EXPECT_TRUE(face_contains(fp.G, zero) && face_contains(fp.G, v));
            EXPECT_EQ(fp.lower_in_basis, d);
            EXPECT_EQ(fp.upper_in_basis, k - d);
            // independent face-dimension oracle
            std::vector<Vector> Fv, Gv;
            for (auto id : fp.F.vertex_ids)
                Fv.push_back(sf.vertices[id]);
            for (auto id : fp.G.vertex_ids)
                Gv.push_back(sf.vertices[id]);
            EXPECT_EQ(oracle_face_dim(sf, Fv), d);
            EXPECT_EQ(oracle_face_dim(sf, Gv), k - d);
            // every basic solution on the path is feasible
            for (std::size_t i = 0; i + 1 < fp.path.size(); ++i)
                EXPECT_TRUE(sf.rep.system.contains(fp.path[i]));
            ++checked;
        }
    }
    EXPECT_GT(checked, 10);
}

TEST(DefaultBlocks, Sequences)
{
    using S = std::vector<std::size_t>;
    EXPECT_EQ(default_blocks(1), (S{1}));
    EXPECT_EQ(default_blocks(2), (S{2}));
    EXPECT_EQ(default_blocks(3), (S{3}));
    EXPECT_EQ(default_blocks(4), (S{2, 2}));
    EXPECT_EQ(default_blocks(5), (S{3, 2}));
    EXPECT_EQ(default_blocks(6), (S{3, 3}));
    EXPECT_EQ(default_blocks(7), (S{3, 2, 2}));
    for (std::size_t d = 1; d < 30; ++d) {
        auto s = default_blocks(d);
        std::size_t sum = 0, twos = 0;
        for (auto x : s) {
            sum += x;
            twos += x == 2;
        }
        EXPECT_EQ(sum, d);
        EXPECT_LE(twos, 2u);
    }
}

TEST(TemplateWalk, SingleBlockIsTrivial)
{
    auto N = nontrivial(3, 1).front();
    auto tr = template_walk(N, vec({1, 0, 0}), {3});
    EXPECT_EQ(tr.t(), 1u);
    EXPECT_TRUE(tr.steps[0].terminal);
    EXPECT_TRUE(certify_walk(tr, N.base.A()).all());
}

TEST(TemplateWalk, WrongBlockSumRejected)
{
    auto N = nontrivial(3, 1).front();
    try {
        template_walk(N, vec({1, 0, 0}), {2, 2});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
    }
}

TEST(TemplateWalk, TelescopesOnFourDimensionalInstances)
{
    int walks = 0, multi = 0;
    for (const auto& N : nontrivial(4, 6, 300)) {
        for (const auto& a : signed_unit_vectors(4)) {
            auto tr = template_walk(N, a, {2, 2});
            Rational sum = 0;
            for (const auto& s : tr.steps)
                sum += dot(a, s.from - s.to);
            EXPECT_EQ(sum, lp_max(N.base.polyhedron(), a).value);
            auto cert = certify_walk(tr, N.base.A());
            EXPECT_TRUE(cert.all()) << cert.telescoping << cert.step_bounds << cert.count_bound
                                    << cert.dimension_decrease << cert.last_face << cert.slice_dims;
            ++walks;
            multi += tr.t() >= 2;
        }
    }
    EXPECT_GE(walks, 40);
    EXPECT_GT(multi, 0);
}

TEST(TemplateWalk, DefaultBlocksAndBound)
{
    for (const auto& N : nontrivial(3, 6, 700)) {
        for (const auto& a : signed_unit_vectors(3)) {
            auto tr = template_walk(N, a, {});
            EXPECT_EQ(tr.d_seq, (std::vector<std::size_t>{3}));
            EXPECT_TRUE(certify_walk(tr, N.base.A()).all());
            auto tb = template_bound(N, a, {1, 2});
            EXPECT_TRUE(tb.holds);
            // each step is bounded by its own slice term
            for (const auto& s : tr.steps)
                if (s.kappa) {
                    EXPECT_EQ(*s.kappa * s.delta, s.slice_max);
                }
        }
    }
}

TEST(RayDecomposition, ZeroApexIsEmpty)
{
    auto L = gen_lower_bound(3, 2, 0);
    auto rd = ray_decomposition(L.instance.A(), L.T, L.B, zero_vector(2));
    EXPECT_TRUE(rd.terms.empty());
    EXPECT_EQ(rd.total_multiplicity, 0);
    EXPECT_TRUE(rd.sums_to_apex);
}

TEST(RayDecomposition, OneDimensionalSpindleIsAMultiple)
{
    // x* = (0, 2) on the x_2 axis of the unit box lattice
    Matrix A = plus_minus_identity(2);
    auto rd = ray_decomposition(A, A, Matrix::identity(2), vec({0, 2}));
    ASSERT_EQ(rd.terms.size(), 1u);
    EXPECT_EQ(rd.terms[0].ray, vec({0, 1}));
    EXPECT_EQ(rd.terms[0].multiplicity, 2);
}

TEST(RayDecomposition, LowerBoundFamily)
{
    for (long delta = 3; delta <= 6; ++delta)
        for (std::size_t n = 2; n <= 4; ++n) {
            auto L = gen_lower_bound(delta, n, n - 2);
            auto rd = ray_decomposition(L.instance.A(), L.T, L.B, L.x_star);
            EXPECT_TRUE(rd.sums_to_apex);
            EXPECT_TRUE(rd.rays_in_cone);
            EXPECT_TRUE(rd.sums_in_spindle);
            EXPECT_TRUE(rd.sums_distinct);
            EXPECT_TRUE(rd.no_lattice_point);
            EXPECT_LE(rd.total_multiplicity, delta - 1);
            Rational dn1 = max_abs_minor(L.instance.A(), n - 1);
            for (const auto& t : rd.terms) {
                EXPECT_LE(inf_norm(t.ray), dn1 / delta);
                EXPECT_EQ(detail::content(L.B * t.ray), 1);
            }
        }
}

TEST(RayDecomposition, RejectsBrokenWitness)
{
    auto L = gen_lower_bound(3, 2, 0);
    Matrix T = L.T;
    T(0, 0) = 2;
    EXPECT_THROW(ray_decomposition(L.instance.A(), T, L.B, L.x_star), Error);
    EXPECT_THROW(ray_decomposition(L.instance.A(), L.T, L.B, vec({1, 0}) + Vector{q(0), q(1, 2)}), Error);
}
