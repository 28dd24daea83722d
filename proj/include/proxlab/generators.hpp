#ifndef PROXLAB_GENERATORS_HPP
#define PROXLAB_GENERATORS_HPP

#include "proxlab/proximity.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>

namespace proxlab {

using Metadata = std::map<std::string, std::string>;

namespace detail {

/// Uniform integer in [lo, hi]; modulo reduction keeps streams identical across standard libraries.
inline long draw(std::mt19937_64& rng, long lo, long hi)
{
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline unsigned long long box_volume(const IntegerBox& box)
{
    unsigned long long v = 1;
    for (const auto& [lo, hi] : box) {
        Integer w = hi - lo + 1;
        if (w <= 0)
            return 0;
        if (!w.fits_ulong_p() || v > std::numeric_limits<unsigned long long>::max() / w.get_ui())
            return std::numeric_limits<unsigned long long>::max();
        v *= w.get_ui();
    }
    return v;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Lower-bound family
// ---------------------------------------------------------------------------

struct LowerBoundInstance {
    long delta = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    Matrix B;
    Vector beta;
    std::vector<Vector> cutting_rows;
    Vector rhs; ///< (1_k, Delta - n + k, 1_{n-k-1})
    Instance instance;
    Matrix T;   ///< TU factor with A = T B
    Vector x_star;
};

/**
 * P(B) ∩ {a_i^T x <= 0, i <= k} with A = [B; -B; a_1..a_k] and b = (rhs; 0; 0).
 * The objective 1^T B makes x* = B^{-1} rhs the unique LP optimum.
 */
inline LowerBoundInstance gen_lower_bound(long delta, std::size_t n, std::size_t k)
{
    if (delta < 3)
        throw Error(ErrorKind::InvalidArgument, "lower bound family needs Delta >= 3");
    if (n < 2)
        throw Error(ErrorKind::InvalidArgument, "lower bound family needs n >= 2");
    if (k > n - 1)
        throw Error(ErrorKind::InvalidArgument, "lower bound family needs 0 <= k <= n-1");
    if (delta - static_cast<long>(n) + static_cast<long>(k) < 1)
        throw Error(ErrorKind::InvalidArgument, "lower bound family needs Delta - n + k >= 1");

    LowerBoundInstance L;
    L.delta = delta;
    L.n = n;
    L.k = k;
    L.B = Matrix::identity(n);
    L.beta = zero_vector(n - 1);
    for (std::size_t j = k; j + 1 < n; ++j)
        L.beta[j] = delta - 1;
    for (std::size_t j = 0; j + 1 < n; ++j)
        L.B(n - 1, j) = L.beta[j];
    L.B(n - 1, n - 1) = delta;

    L.rhs = Vector(n, Rational(1));
    L.rhs[k] = delta - static_cast<long>(n) + static_cast<long>(k);

    for (std::size_t i = 0; i < k; ++i) {
        Vector a = zero_vector(n);
        a[i] = 1;
        for (std::size_t j = k; j < n; ++j)
            a[j] = -delta;
        L.cutting_rows.push_back(a);
    }

    Matrix A = L.B.stacked(-L.B);
    Vector b = L.rhs;
    for (std::size_t i = 0; i < n; ++i)
        b.push_back(0);
    if (k > 0) {
        A = A.stacked(Matrix::from_rows(L.cutting_rows));
        for (std::size_t i = 0; i < k; ++i)
            b.push_back(0);
    }

    // a_i = row_i(B) - sum_{j > k} row_j(B)
    L.T = Matrix::identity(n).stacked(-Matrix::identity(n));
    if (k > 0) {
        std::vector<Vector> trows;
        for (std::size_t i = 0; i < k; ++i) {
            Vector t = zero_vector(n);
            t[i] = 1;
            for (std::size_t j = k; j < n; ++j)
                t[j] = -1;
            trows.push_back(t);
        }
        L.T = L.T.stacked(Matrix::from_rows(trows));
    }

    Vector c = zero_vector(n);
    for (std::size_t i = 0; i < n; ++i)
        c = c + L.B.row(i);
    L.instance = Instance(A, b, c);
    L.x_star = solve(L.B, L.rhs);
    return L;
}

struct LowerBoundCertificate {
    bool x_star_feasible = false;
    bool no_shared_facet = false;     ///< x* and 0 lie on no common facet
    bool lattice_only_zero = false;   ///< P ∩ Z^n = {0}
    bool tu_factor = false;           ///< A = T B, T TU, |det B| = Delta
    std::optional<bool> delta_n1_equals_delta; ///< only for k = n-2
    bool full_dimensional = false;
    bool parallelepiped_count = false; ///< |P(B) ∩ Z^n| = 2^k
    bool binv_columns_integral = false; ///< first k columns of B^{-1} integral
    std::size_t parallelepiped_points = 0;

    /// First failing claim, or empty.
    std::string failure() const
    {
        if (!x_star_feasible)
            return "x* feasible";
        if (!no_shared_facet)
            return "no common facet with 0";
        if (!lattice_only_zero)
            return "P ∩ Z^n = {0}";
        if (!tu_factor)
            return "strictly Delta-modular factor";
        if (delta_n1_equals_delta && !*delta_n1_equals_delta)
            return "Delta_{n-1}(A) = Delta";
        if (!full_dimensional)
            return "full-dimensional";
        if (!parallelepiped_count)
            return "|P(B) ∩ Z^n| = 2^k";
        if (!binv_columns_integral)
            return "first k columns of B^{-1} integral";
        return {};
    }
};

inline LowerBoundCertificate inspect_lower_bound(const LowerBoundInstance& L, const Limits& limits = {})
{
    LowerBoundCertificate c;
    HPolyhedron P = L.instance.polyhedron();
    const std::size_t n = L.n;
    c.x_star_feasible = P.contains(L.x_star);
    auto vr = v_representation(P, limits, true);
    c.full_dimensional = vr.rays.empty() && dimension(P, vr) == n;
    if (c.x_star_feasible && c.full_dimensional)
        c.no_shared_facet = !shares_facet(P, L.x_star, zero_vector(n), limits);
    auto pts = lattice_points(P, limits);
    c.lattice_only_zero = pts.size() == 1 && is_zero(pts.front());
    c.tu_factor = L.T * L.B == L.instance.A() && is_totally_unimodular(L.T) && abs(det(L.B)) == L.delta;
    if (L.k + 2 == n)
        c.delta_n1_equals_delta = max_abs_minor(L.instance.A(), n - 1, limits) == L.delta;

    Vector bb = L.rhs;
    for (std::size_t i = 0; i < n; ++i)
        bb.push_back(0);
    HPolyhedron PB(L.B.stacked(-L.B), bb);
    c.parallelepiped_points = lattice_points(PB, limits).size();
    c.parallelepiped_count = c.parallelepiped_points == (std::size_t{1} << L.k);
    Matrix Binv = inverse(L.B);
    c.binv_columns_integral = true;
    for (std::size_t j = 0; j < L.k; ++j)
        c.binv_columns_integral = c.binv_columns_integral && is_integral(Binv.column(j));
    return c;
}

/// Throws a certification error naming the first failed claim.
inline LowerBoundCertificate certify_lower_bound(const LowerBoundInstance& L, const Limits& limits = {})
{
    auto c = inspect_lower_bound(L, limits);
    if (auto f = c.failure(); !f.empty())
        throw Error(ErrorKind::Certification, "lower bound claim fails: " + f);
    return c;
}

// ---------------------------------------------------------------------------
// Random instances
// ---------------------------------------------------------------------------

struct RandomOptions {
    long slack_bound = 2;    ///< b = A z0 + s with s in [0, slack_bound]^m
    long center_bound = 2;   ///< z0 in [-center_bound, center_bound]^n
    unsigned long long max_box_points = 200000; ///< resample when the lattice box is larger
    int budget = 2000;       ///< resampling attempts
};

struct GeneratedInstance {
    Instance instance;
    Metadata metadata;
    std::optional<DeltaModularWitness> witness;
};

namespace detail {

inline bool positively_spanning(const Matrix& A)
{
    HPolyhedron cone(A, zero_vector(A.rows()));
    return v_representation(cone, {}, true).rays.empty();
}

inline Vector random_rhs(std::mt19937_64& rng, const Matrix& A, const RandomOptions& opt)
{
    Vector z0;
    for (std::size_t j = 0; j < A.cols(); ++j)
        z0.push_back(draw(rng, -opt.center_bound, opt.center_bound));
    Vector b = A * z0;
    for (auto& v : b)
        v += draw(rng, 0, opt.slack_bound);
    return b;
}

inline Vector random_objective(std::mt19937_64& rng, std::size_t n, long bound)
{
    Vector c;
    do {
        c.clear();
        for (std::size_t j = 0; j < n; ++j)
            c.push_back(draw(rng, -bound, bound));
    } while (is_zero(c));
    return c;
}

inline bool box_ok(const Matrix& A, const Vector& b, const RandomOptions& opt)
{
    return box_volume(lattice_box(HPolyhedron(A, b))) <= opt.max_box_points;
}

} // namespace detail

/**
 * Random integral A (full column rank, rows positively spanning), b with a
 * known lattice point, random integral c. Deterministic in the seed.
 */
inline GeneratedInstance gen_random(std::size_t n, std::size_t m, long entry_bound, std::uint64_t seed,
                                    const RandomOptions& opt = {})
{
    if (n < 1 || m < n || entry_bound < 1)
        throw Error(ErrorKind::InvalidArgument, "gen_random needs n >= 1, m >= n, entry_bound >= 1");
    std::mt19937_64 rng(seed);
    GeneratedInstance out;
    out.metadata = {{"generator", "random"},
                    {"seed", std::to_string(seed)},
                    {"n", std::to_string(n)},
                    {"m", std::to_string(m)},
                    {"entry_bound", std::to_string(entry_bound)}};
    Matrix A;
    bool spanning = false;
    for (int attempt = 0; attempt < opt.budget; ++attempt) {
        A = Matrix(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                A(i, j) = detail::draw(rng, -entry_bound, entry_bound);
        if (rank(A) != n)
            continue;
        bool zero_row = false;
        for (std::size_t i = 0; i < m; ++i)
            zero_row = zero_row || is_zero(A.row(i));
        if (zero_row || !detail::positively_spanning(A))
            continue;
        Vector b = detail::random_rhs(rng, A, opt);
        if (!detail::box_ok(A, b, opt))
            continue;
        out.instance = Instance(A, b, detail::random_objective(rng, n, entry_bound));
        out.metadata["attempts"] = std::to_string(attempt + 1);
        spanning = true;
        break;
    }
    if (!spanning) {
        if (rank(A) != n)
            throw Error(ErrorKind::Resource, "gen_random: resampling budget exhausted");
        auto basis = independent_subset(A, IndexSet::range(m).indices());
        Vector s = zero_vector(n);
        for (auto i : basis)
            s = s - A.row(i);
        A = A.stacked(Matrix::from_rows({s}));
        Vector b = detail::random_rhs(rng, A, opt);
        out.instance = Instance(A, b, detail::random_objective(rng, n, entry_bound));
        out.metadata["bounding_row_appended"] = "true";
    }
    return out;
}

/**
 * A = T B with T = [I_n; -1^T; random signed interval rows] (totally
 * unimodular) and B = L V, L lower triangular with diagonal product Delta,
 * V a random unimodular matrix.
 */
inline GeneratedInstance gen_strictly_delta_modular(std::size_t n, std::size_t m, long delta, std::uint64_t seed,
                                                    const RandomOptions& opt = {})
{
    if (delta < 1)
        throw Error(ErrorKind::InvalidArgument, "strictly Delta-modular generator needs Delta >= 1");
    if (n < 1 || m < n + 1)
        throw Error(ErrorKind::InvalidArgument, "strictly Delta-modular generator needs n >= 1 and m >= n + 1");
    std::mt19937_64 rng(seed);
    GeneratedInstance out;
    out.metadata = {{"generator", "sdm"},          {"seed", std::to_string(seed)}, {"n", std::to_string(n)},
                    {"m", std::to_string(m)},      {"delta", std::to_string(delta)}};
    for (int attempt = 0; attempt < opt.budget; ++attempt) {
        Matrix T = Matrix::identity(n);
        Vector neg(n, Rational(-1));
        T = T.stacked(Matrix::from_rows({neg}));
        std::vector<Vector> extra;
        while (T.rows() + extra.size() < m) {
            long lo = detail::draw(rng, 0, static_cast<long>(n) - 1);
            long hi = detail::draw(rng, lo, static_cast<long>(n) - 1);
            long sign = detail::draw(rng, 0, 1) ? 1 : -1;
            Vector r = zero_vector(n);
            for (long j = lo; j <= hi; ++j)
                r[static_cast<std::size_t>(j)] = sign;
            extra.push_back(r);
        }
        if (!extra.empty())
            T = T.stacked(Matrix::from_rows(extra));
        if (!is_totally_unimodular(T))
            continue;

        Matrix L = Matrix::identity(n);
        std::size_t where = static_cast<std::size_t>(detail::draw(rng, 0, static_cast<long>(n) - 1));
        L(where, where) = delta;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j)
                L(i, j) = detail::draw(rng, -1, 1);
        Matrix V = Matrix::identity(n);
        for (int s = 0; s < static_cast<int>(n); ++s) {
            if (n < 2)
                break;
            std::size_t a = static_cast<std::size_t>(detail::draw(rng, 0, static_cast<long>(n) - 1));
            std::size_t b = static_cast<std::size_t>(detail::draw(rng, 0, static_cast<long>(n) - 2));
            if (b >= a)
                ++b;
            long f = detail::draw(rng, 0, 1) ? 1 : -1;
            for (std::size_t r = 0; r < n; ++r)
                V(r, b) += f * V(r, a);
        }
        Matrix B = L * V;
        if (abs(det(B)) != delta)
            continue;
        Matrix A = T * B;
        Vector b = detail::random_rhs(rng, A, opt);
        if (!detail::box_ok(A, b, opt))
            continue;
        out.instance = Instance(A, b, detail::random_objective(rng, n, 3));
        out.witness = DeltaModularWitness{T, B};
        out.metadata["attempts"] = std::to_string(attempt + 1);
        return out;
    }
    throw Error(ErrorKind::Resource, "gen_strictly_delta_modular: resampling budget exhausted");
}

} // namespace proxlab

#endif
