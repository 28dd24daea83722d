#ifndef PROXLAB_POLYHEDRON_HPP
#define PROXLAB_POLYHEDRON_HPP

#include "proxlab/exactmath.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace proxlab {

/**
 * {x in R^n : A x <= b}, with the rows listed in equality_rows forced to
 * equality. Slices P_I = P ∩ ker A_I are expressed through equality_rows.
 */
class HPolyhedron {
public:
    HPolyhedron() = default;

    HPolyhedron(Matrix A, Vector b, IndexSet equality_rows = {})
        : A_(std::move(A)), b_(std::move(b)), eq_(std::move(equality_rows))
    {
        if (A_.rows() != b_.size())
            throw Error(ErrorKind::Dimension, "HPolyhedron: A has " + std::to_string(A_.rows()) +
                                                  " rows but b has length " + std::to_string(b_.size()));
        eq_.check_bound(A_.rows());
    }

    const Matrix& A() const noexcept { return A_; }
    const Vector& b() const noexcept { return b_; }
    const IndexSet& equality_rows() const noexcept { return eq_; }
    std::size_t ambient_dim() const noexcept { return A_.cols(); }
    std::size_t num_rows() const noexcept { return A_.rows(); }

    Rational row_value(std::size_t i, const Vector& x) const
    {
        Rational s = 0;
        for (std::size_t j = 0; j < A_.cols(); ++j)
            s += A_(i, j) * x[j];
        return s;
    }

    bool satisfies_row(std::size_t i, const Vector& x) const
    {
        Rational v = row_value(i, x);
        return eq_.contains(i) ? v == b_[i] : v <= b_[i];
    }

    bool contains(const Vector& x) const
    {
        if (x.size() != ambient_dim())
            throw Error(ErrorKind::Dimension, "contains: point has wrong length");
        for (std::size_t i = 0; i < num_rows(); ++i)
            if (!satisfies_row(i, x))
                return false;
        return true;
    }

    IndexSet tight_rows(const Vector& x) const
    {
        std::vector<std::size_t> t;
        for (std::size_t i = 0; i < num_rows(); ++i)
            if (row_value(i, x) == b_[i])
                t.push_back(i);
        return IndexSet(std::move(t));
    }

    /// Same system with additional rows forced to equality.
    HPolyhedron with_equalities(const IndexSet& rows) const { return HPolyhedron(A_, b_, eq_.united(rows)); }

private:
    Matrix A_;
    Vector b_;
    IndexSet eq_;
};

/**
 * P ∩ ker A_I. When b_I >= 0 this is encoded in place (b_I := 0, I marked as
 * equalities); otherwise the kernel rows are appended so that the result is
 * still exactly P ∩ ker A_I (and empty).
 */
inline HPolyhedron slice(const HPolyhedron& P, const IndexSet& I)
{
    I.check_bound(P.num_rows());
    bool in_place = std::all_of(I.begin(), I.end(), [&](std::size_t i) { return sgn(P.b()[i]) >= 0; });
    if (in_place) {
        Vector b = P.b();
        for (auto i : I)
            b[i] = 0;
        return HPolyhedron(P.A(), std::move(b), P.equality_rows().united(I));
    }
    Matrix A = P.A().stacked(P.A().select_rows(I));
    Vector b = P.b();
    std::vector<std::size_t> eq = P.equality_rows().indices();
    for (std::size_t k = 0; k < I.size(); ++k) {
        b.push_back(0);
        eq.push_back(P.num_rows() + k);
    }
    return HPolyhedron(std::move(A), std::move(b), IndexSet(std::move(eq)));
}

struct VertexCertificate {
    Vector point;
    IndexSet basis; ///< n linearly independent rows tight at point
};

struct VRep {
    std::vector<VertexCertificate> vertices; ///< sorted lexicographically by point
    std::vector<Vector> rays;                ///< extreme rays of the recession cone, primitive integral
};

namespace detail {

/// Each row scaled to integers, together with its right-hand side.
struct ScaledRows {
    std::size_t n = 0;
    std::vector<std::vector<Integer>> a;
    std::vector<Integer> b;

    explicit ScaledRows(const HPolyhedron& P) : n(P.ambient_dim()), a(P.num_rows()), b(P.num_rows())
    {
        for (std::size_t i = 0; i < P.num_rows(); ++i) {
            Integer l = P.b()[i].get_den();
            for (std::size_t j = 0; j < n; ++j)
                if (P.A()(i, j).get_den() != 1)
                    l = lcm_of(l, P.A()(i, j).get_den());
            a[i].resize(n);
            for (std::size_t j = 0; j < n; ++j)
                a[i][j] = P.A()(i, j).get_num() * (l / P.A()(i, j).get_den());
            b[i] = P.b()[i].get_num() * (l / P.b()[i].get_den());
        }
    }

    /// Solves rows[] x = b[rows]; false when singular.
    bool solve(std::span<const std::size_t> rows, Vector& x) const
    {
        IntGrid g{n, n + 1, std::vector<Integer>(n * (n + 1))};
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                g.at(i, j) = a[rows[i]][j];
            g.at(i, n) = b[rows[i]];
        }
        auto piv = bareiss_echelon(g, n);
        if (piv.size() < n)
            return false;
        x.assign(n, Rational(0));
        for (std::size_t ii = n; ii-- > 0;) {
            Rational s(g.at(ii, n));
            for (std::size_t j = ii + 1; j < n; ++j)
                s -= Rational(g.at(ii, j)) * x[j];
            x[ii] = s / Rational(g.at(ii, ii));
        }
        return true;
    }
};

inline void check_subset_cap(std::size_t pool, std::size_t k, const Limits& limits, const char* what)
{
    if (binomial(pool, k) > limits.max_subsets)
        throw Error(ErrorKind::Resource, std::string(what) + ": C(" + std::to_string(pool) + "," +
                                             std::to_string(k) + ") subsets exceed cap " +
                                             std::to_string(limits.max_subsets));
}

} // namespace detail

/**
 * All vertices (with witnessing bases) and, optionally, all extreme rays.
 * Vertices come from exhaustive enumeration of n-subsets of rows that
 * contain a fixed independent subset of the equality rows.
 */
inline VRep v_representation(const HPolyhedron& P, const Limits& limits = {}, bool with_rays = true)
{
    const std::size_t n = P.ambient_dim();
    const Matrix& A = P.A();
    if (rank(A) < n)
        throw Error(ErrorKind::Unpointed, "polyhedron has a nontrivial lineality space (rank A < n)");

    const auto& eq = P.equality_rows().indices();
    std::vector<std::size_t> E = independent_subset(A, eq);
    std::vector<std::size_t> pool;
    for (std::size_t i = 0; i < P.num_rows(); ++i)
        if (!P.equality_rows().contains(i))
            pool.push_back(i);
    const std::size_t need = n - E.size();
    detail::check_subset_cap(pool.size(), need, limits, "vertex enumeration");

    detail::ScaledRows sys(P);
    std::map<Vector, IndexSet> found;
    std::vector<std::size_t> rows(n);
    std::copy(E.begin(), E.end(), rows.begin());
    Vector x;
    for_each_subset(pool.size(), need, [&](const std::vector<std::size_t>& s) {
        for (std::size_t k = 0; k < need; ++k)
            rows[E.size() + k] = pool[s[k]];
        if (!sys.solve(rows, x))
            return;
        if (found.count(x) || !P.contains(x))
            return;
        found.emplace(x, IndexSet(rows));
    });

    VRep out;
    out.vertices.reserve(found.size());
    for (auto& [pt, basis] : found)
        out.vertices.push_back({pt, basis});

    if (with_rays && need >= 1) {
        detail::check_subset_cap(pool.size(), need - 1, limits, "ray enumeration");
        std::map<Vector, bool> seen;
        std::vector<std::size_t> r(n - 1);
        std::copy(E.begin(), E.end(), r.begin());
        for_each_subset(pool.size(), need - 1, [&](const std::vector<std::size_t>& s) {
            for (std::size_t k = 0; k + 1 < need; ++k)
                r[E.size() + k] = pool[s[k]];
            auto ker = kernel_basis(A.select_rows(r));
            if (ker.size() != 1)
                return;
            Vector d = primitive_integer(ker.front());
            for (int sign : {1, -1}) {
                Vector dir = sign > 0 ? d : -d;
                if (seen.count(dir))
                    continue;
                bool ok = true;
                for (std::size_t i = 0; i < P.num_rows() && ok; ++i) {
                    Rational v = P.row_value(i, dir);
                    ok = P.equality_rows().contains(i) ? sgn(v) == 0 : sgn(v) <= 0;
                }
                if (ok) {
                    seen.emplace(dir, true);
                    out.rays.push_back(dir);
                }
            }
        });
    }
    return out;
}

/// Vertices only; throws when the polyhedron has none.
inline std::vector<VertexCertificate> enumerate_vertices(const HPolyhedron& P, const Limits& limits = {})
{
    auto vr = v_representation(P, limits, false);
    if (vr.vertices.empty())
        throw Error(ErrorKind::Infeasible, "polyhedron is empty: no vertex");
    return std::move(vr.vertices);
}

inline bool is_bounded(const HPolyhedron& P, const Limits& limits = {})
{
    return v_representation(P, limits, true).rays.empty();
}

struct LpSolution {
    Rational value;
    VertexCertificate vertex;                       ///< lexicographically smallest optimal vertex
    std::vector<VertexCertificate> optimal_vertices; ///< all optimal vertices, lexicographic order
};

/// Maximum of c over a vertex list (no boundedness check).
inline LpSolution lp_max_over(const std::vector<VertexCertificate>& vertices, const Vector& c)
{
    if (vertices.empty())
        throw Error(ErrorKind::Infeasible, "LP infeasible: no vertex");
    LpSolution sol;
    bool first = true;
    for (const auto& v : vertices) {
        Rational val = dot(c, v.point);
        if (first || val > sol.value) {
            sol.value = val;
            sol.optimal_vertices.clear();
            first = false;
        }
        if (val == sol.value)
            sol.optimal_vertices.push_back(v);
    }
    sol.vertex = sol.optimal_vertices.front();
    return sol;
}

/// Exact LP max{c^T x : x in P}; ties broken towards the lexicographically smallest vertex.
inline LpSolution lp_max(const HPolyhedron& P, const Vector& c, const Limits& limits = {})
{
    if (c.size() != P.ambient_dim())
        throw Error(ErrorKind::Dimension, "lp_max: objective has wrong length");
    auto vr = v_representation(P, limits, true);
    if (vr.vertices.empty())
        throw Error(ErrorKind::Infeasible, "LP infeasible");
    for (const auto& r : vr.rays)
        if (sgn(dot(c, r)) > 0)
            throw Error(ErrorKind::Unbounded, "LP unbounded along ray " + to_string(r));
    return lp_max_over(vr.vertices, c);
}

// ---------------------------------------------------------------------------
// Dimension, implicit equalities, facets
// ---------------------------------------------------------------------------

/// Dimension of the affine hull of points plus the span of directions.
inline std::size_t affine_dimension(const std::vector<Vector>& points, const std::vector<Vector>& directions = {})
{
    if (points.empty())
        throw Error(ErrorKind::Infeasible, "affine_dimension of empty set");
    std::vector<Vector> diffs;
    for (std::size_t i = 1; i < points.size(); ++i)
        diffs.push_back(points[i] - points[0]);
    diffs.insert(diffs.end(), directions.begin(), directions.end());
    if (diffs.empty())
        return 0;
    return rank(Matrix::from_rows(diffs));
}

/// Rows that hold with equality on all of P (tight at every vertex, orthogonal to every ray).
inline IndexSet implicit_equalities(const HPolyhedron& P, const VRep& vr)
{
    if (vr.vertices.empty())
        throw Error(ErrorKind::Infeasible, "implicit_equalities of empty polyhedron");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < P.num_rows(); ++i) {
        bool eq = std::all_of(vr.vertices.begin(), vr.vertices.end(),
                              [&](const VertexCertificate& v) { return P.row_value(i, v.point) == P.b()[i]; });
        eq = eq && std::all_of(vr.rays.begin(), vr.rays.end(),
                               [&](const Vector& r) { return sgn(P.row_value(i, r)) == 0; });
        if (eq)
            out.push_back(i);
    }
    return IndexSet(std::move(out));
}

inline std::size_t dimension(const HPolyhedron& P, const VRep& vr)
{
    auto imp = implicit_equalities(P, vr);
    if (imp.empty())
        return P.ambient_dim();
    return P.ambient_dim() - rank(P.A().select_rows(imp));
}

/// Affine dimension, as n minus the rank of the implicit-equality rows.
inline std::size_t dimension(const HPolyhedron& P, const Limits& limits = {})
{
    return dimension(P, v_representation(P, limits, true));
}

/// Rows of P that define facets.
inline IndexSet facet_rows(const HPolyhedron& P, const VRep& vr)
{
    const std::size_t d = dimension(P, vr);
    if (d == 0)
        return {};
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < P.num_rows(); ++i) {
        if (P.equality_rows().contains(i))
            continue;
        std::vector<Vector> pts, dirs;
        for (const auto& v : vr.vertices)
            if (P.row_value(i, v.point) == P.b()[i])
                pts.push_back(v.point);
        if (pts.empty())
            continue;
        for (const auto& r : vr.rays)
            if (sgn(P.row_value(i, r)) == 0)
                dirs.push_back(r);
        if (affine_dimension(pts, dirs) == d - 1)
            out.push_back(i);
    }
    return IndexSet(std::move(out));
}

/// True iff some facet-defining row of the full-dimensional P is tight at both u and v.
inline bool shares_facet(const HPolyhedron& P, const Vector& u, const Vector& v, const Limits& limits = {})
{
    if (!P.contains(u) || !P.contains(v))
        throw Error(ErrorKind::InvalidArgument, "shares_facet: point outside the polyhedron");
    auto vr = v_representation(P, limits, true);
    if (dimension(P, vr) != P.ambient_dim())
        throw Error(ErrorKind::Dimension, "shares_facet: polyhedron is not full-dimensional");
    for (auto i : facet_rows(P, vr))
        if (P.row_value(i, u) == P.b()[i] && P.row_value(i, v) == P.b()[i])
            return true;
    return false;
}

// ---------------------------------------------------------------------------
// Lattice points
// ---------------------------------------------------------------------------

using IntegerBox = std::vector<std::pair<Integer, Integer>>;

/// Integer box containing P: vertex coordinate extremes rounded outward.
inline IntegerBox lattice_box(const HPolyhedron& P, const Limits& limits = {})
{
    auto vr = v_representation(P, limits, true);
    if (!vr.rays.empty())
        throw Error(ErrorKind::Unbounded, "lattice_box: polyhedron is unbounded");
    IntegerBox box(P.ambient_dim());
    if (vr.vertices.empty()) {
        for (auto& [lo, hi] : box) {
            lo = 0;
            hi = -1;
        }
        return box;
    }
    for (std::size_t j = 0; j < P.ambient_dim(); ++j) {
        Rational lo = vr.vertices.front().point[j], hi = lo;
        for (const auto& v : vr.vertices) {
            lo = std::min(lo, v.point[j]);
            hi = std::max(hi, v.point[j]);
        }
        box[j] = {ceil_of(lo), floor_of(hi)};
    }
    return box;
}

/**
 * All integral points of P inside box, by exhaustive scan (last coordinate
 * fastest, so the output is in lexicographic order). Correct for P ∩ Z^n
 * only when the caller's box contains it.
 */
inline std::vector<Vector> lattice_points(const HPolyhedron& P, const IntegerBox& box, const Limits& limits = {})
{
    const std::size_t n = P.ambient_dim();
    if (box.size() != n)
        throw Error(ErrorKind::Dimension, "lattice_points: box has wrong dimension");
    Integer volume = 1;
    for (const auto& [lo, hi] : box) {
        if (hi < lo)
            return {};
        volume *= hi - lo + 1;
    }
    if (volume > Integer(std::to_string(limits.max_box_points)))
        throw Error(ErrorKind::Resource, "lattice_points: box of " + volume.get_str() + " points exceeds cap " +
                                             std::to_string(limits.max_box_points));

    detail::ScaledRows sys(P);
    const std::size_t m = P.num_rows();
    std::vector<bool> is_eq(m);
    for (std::size_t i = 0; i < m; ++i)
        is_eq[i] = P.equality_rows().contains(i);

    std::vector<Vector> out;
    auto emit = [&](const auto& z) {
        Vector v(n);
        for (std::size_t j = 0; j < n; ++j)
            v[j] = Rational(Integer(z[j]));
        out.push_back(std::move(v));
    };

    // Fast path in 64-bit arithmetic when every partial row sum provably fits.
    Integer amax = 0, bmax = 0, zsum = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (const auto& x : sys.a[i])
            amax = std::max<Integer>(amax, abs(x));
        bmax = std::max<Integer>(bmax, abs(sys.b[i]));
    }
    for (const auto& [lo, hi] : box)
        zsum += std::max<Integer>(abs(lo), abs(hi)) + 1;
    const Integer limit = Integer(1) << 61;
    if (amax * zsum < limit && bmax < limit) {
        std::vector<std::int64_t> a(m * n), b(m), lo(n), hi(n), z(n), s(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                a[i * n + j] = sys.a[i][j].get_si();
            b[i] = sys.b[i].get_si();
        }
        for (std::size_t j = 0; j < n; ++j) {
            lo[j] = box[j].first.get_si();
            hi[j] = box[j].second.get_si();
            z[j] = lo[j];
        }
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                s[i] += a[i * n + j] * z[j];
        while (true) {
            bool ok = true;
            for (std::size_t i = 0; i < m && ok; ++i)
                ok = is_eq[i] ? s[i] == b[i] : s[i] <= b[i];
            if (ok)
                emit(z);
            std::size_t j = n;
            while (j > 0) {
                --j;
                if (z[j] < hi[j]) {
                    ++z[j];
                    for (std::size_t i = 0; i < m; ++i)
                        s[i] += a[i * n + j];
                    break;
                }
                const std::int64_t span = hi[j] - lo[j];
                z[j] = lo[j];
                for (std::size_t i = 0; i < m; ++i)
                    s[i] -= span * a[i * n + j];
                if (j == 0)
                    return out;
            }
            if (n == 0)
                return out;
        }
    }

    std::vector<Integer> z(n);
    for (std::size_t j = 0; j < n; ++j)
        z[j] = box[j].first;
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) {
            Integer s = 0;
            for (std::size_t j = 0; j < n; ++j)
                s += sys.a[i][j] * z[j];
            ok = is_eq[i] ? s == sys.b[i] : s <= sys.b[i];
        }
        if (ok)
            emit(z);
        std::size_t j = n;
        bool advanced = false;
        while (j > 0) {
            --j;
            if (z[j] < box[j].second) {
                ++z[j];
                advanced = true;
                break;
            }
            z[j] = box[j].first;
        }
        if (!advanced)
            return out;
    }
}

/// P ∩ Z^n for bounded P, with the box taken from the vertex extremes.
inline std::vector<Vector> lattice_points(const HPolyhedron& P, const Limits& limits = {})
{
    return lattice_points(P, lattice_box(P, limits), limits);
}

// ---------------------------------------------------------------------------
// Planar geometry and low-dimensional volumes
// ---------------------------------------------------------------------------

inline Rational cross2(const Vector& o, const Vector& a, const Vector& b)
{
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

/// Counter-clockwise convex hull of planar points; collinear boundary points dropped.
inline std::vector<Vector> convex_hull_2d(std::vector<Vector> pts)
{
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3)
        return pts;
    std::vector<Vector> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && sgn(cross2(hull[k - 2], hull[k - 1], pts[i])) <= 0)
            --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && sgn(cross2(hull[k - 2], hull[k - 1], pts[i])) <= 0)
            --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

/// Shoelace area of a simple polygon given in cyclic order (absolute value).
inline Rational polygon_area(const std::vector<Vector>& cyc)
{
    Rational twice = 0;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        const auto& p = cyc[i];
        const auto& q = cyc[(i + 1) % cyc.size()];
        twice += p[0] * q[1] - p[1] * q[0];
    }
    return abs(twice) / 2;
}

inline std::optional<Rational> exact_sqrt(const Rational& x)
{
    if (sgn(x) < 0)
        return std::nullopt;
    const Integer& num = x.get_num();
    const Integer& den = x.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

/**
 * Exact measure of a polytope of dimension <= 2. Squared measures keep every
 * stored value rational; `measure` is filled when its square root is rational.
 */
struct LowDimVolume {
    std::size_t dimension = 0;
    Rational squared_measure;     ///< 1 for a point, squared length, or squared area
    std::optional<Rational> measure;
    std::vector<Vector> endpoints; ///< the two endpoints when dimension == 1
    std::vector<Vector> cycle;     ///< the vertex cycle when dimension == 2
};

inline LowDimVolume volume_low_dim(const HPolyhedron& P, const Limits& limits = {})
{
    auto vr = v_representation(P, limits, true);
    if (vr.vertices.empty())
        throw Error(ErrorKind::Infeasible, "volume_low_dim: empty polyhedron");
    if (!vr.rays.empty())
        throw Error(ErrorKind::Unbounded, "volume_low_dim: polyhedron is unbounded");
    LowDimVolume out;
    out.dimension = dimension(P, vr);
    std::vector<Vector> pts;
    for (const auto& v : vr.vertices)
        pts.push_back(v.point);

    if (out.dimension == 0) {
        out.squared_measure = 1;
    } else if (out.dimension == 1) {
        out.endpoints = {pts.front(), pts.back()};
        out.squared_measure = squared_norm(pts.back() - pts.front());
    } else if (out.dimension == 2) {
        const std::size_t n = P.ambient_dim();
        const Vector& p0 = pts.front();
        Vector u1, u2;
        for (std::size_t i = 1; i < pts.size() && u2.empty(); ++i) {
            Vector d = pts[i] - p0;
            if (u1.empty())
                u1 = d;
            else if (rank(Matrix::from_rows({u1, d})) == 2)
                u2 = d;
        }
        // coordinates (s, t) of w - p0 = s u1 + t u2, read off a nonsingular 2x2 minor
        std::size_t ca = n, cb = n;
        for (std::size_t i = 0; i < n && ca == n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (u1[i] * u2[j] - u1[j] * u2[i] != 0) {
                    ca = i;
                    cb = j;
                    break;
                }
        const Rational det2 = u1[ca] * u2[cb] - u1[cb] * u2[ca];
        std::vector<Vector> plane;
        for (const auto& w : pts) {
            Vector d = w - p0;
            Rational s = (d[ca] * u2[cb] - d[cb] * u2[ca]) / det2;
            Rational t = (u1[ca] * d[cb] - u1[cb] * d[ca]) / det2;
            plane.push_back({s, t});
        }
        auto hull = convex_hull_2d(plane);
        Rational area_st = polygon_area(hull);
        Rational g11 = dot(u1, u1), g12 = dot(u1, u2), g22 = dot(u2, u2);
        out.squared_measure = area_st * area_st * (g11 * g22 - g12 * g12);
        for (const auto& h : hull)
            out.cycle.push_back(p0 + (h[0] * u1 + h[1] * u2));
    } else {
        throw Error(ErrorKind::Dimension, "volume_low_dim: dimension " + std::to_string(out.dimension) + " > 2");
    }
    out.measure = exact_sqrt(out.squared_measure);
    return out;
}

/**
 * Vertices (counter-clockwise) of the polar of a bounded planar polyhedron
 * containing the origin in its interior: the points a_i / b_i of the
 * facet-defining rows.
 */
inline std::vector<Vector> polar_2d(const HPolyhedron& Q, const Limits& limits = {})
{
    if (Q.ambient_dim() != 2)
        throw Error(ErrorKind::Dimension, "polar_2d: polyhedron must live in R^2");
    if (!Q.equality_rows().empty())
        throw Error(ErrorKind::InvalidArgument, "polar_2d: origin not interior (equality rows present)");
    std::vector<Vector> pts;
    for (std::size_t i = 0; i < Q.num_rows(); ++i) {
        Vector a = Q.A().row(i);
        if (is_zero(a)) {
            if (sgn(Q.b()[i]) < 0)
                throw Error(ErrorKind::Infeasible, "polar_2d: polyhedron is empty");
            continue;
        }
        if (sgn(Q.b()[i]) <= 0)
            throw Error(ErrorKind::InvalidArgument, "polar_2d: origin not in the interior");
        pts.push_back((1 / Q.b()[i]) * a);
    }
    if (!is_bounded(Q, limits))
        throw Error(ErrorKind::Unbounded, "polar_2d: polyhedron is unbounded");
    return convex_hull_2d(std::move(pts));
}

} // namespace proxlab

#endif
