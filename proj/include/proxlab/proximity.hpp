#ifndef PROXLAB_PROXIMITY_HPP
#define PROXLAB_PROXIMITY_HPP

#include "proxlab/polyhedron.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace proxlab {

/// (A, b, c) with A integral of full column rank, b integral, c rational.
class Instance {
public:
    Instance() = default;

    Instance(Matrix A, Vector b, Vector c) : A_(std::move(A)), b_(std::move(b)), c_(std::move(c))
    {
        if (A_.rows() != b_.size())
            throw Error(ErrorKind::Dimension, "instance: A has " + std::to_string(A_.rows()) + " rows, b has " +
                                                  std::to_string(b_.size()) + " entries");
        if (A_.cols() != c_.size())
            throw Error(ErrorKind::Dimension, "instance: A has " + std::to_string(A_.cols()) + " columns, c has " +
                                                  std::to_string(c_.size()) + " entries");
        if (A_.cols() == 0)
            throw Error(ErrorKind::Dimension, "instance: n must be positive");
        if (!A_.is_integral())
            throw Error(ErrorKind::InvalidArgument, "instance: A must be integral");
        if (!is_integral(b_))
            throw Error(ErrorKind::InvalidArgument, "instance: b must be integral");
        if (rank(A_) != A_.cols())
            throw Error(ErrorKind::Singular, "instance: A must have full column rank");
    }

    const Matrix& A() const noexcept { return A_; }
    const Vector& b() const noexcept { return b_; }
    const Vector& c() const noexcept { return c_; }
    std::size_t n() const noexcept { return A_.cols(); }
    std::size_t m() const noexcept { return A_.rows(); }
    HPolyhedron polyhedron() const { return HPolyhedron(A_, b_); }

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    Matrix A_;
    Vector b_;
    Vector c_;
};

/// Factorization A = T B witnessing strict Delta-modularity.
struct DeltaModularWitness {
    Matrix T;
    Matrix B;
};

/**
 * Instance translated so that its only lattice point is the origin. The
 * original vertex x* (translated) is the unique optimum of base.c().
 */
struct NormalizedInstance {
    Instance base;
    bool translated_optimum_at_origin = true;
    Vector x_star;      ///< the chosen optimal vertex, in translated coordinates
    IndexSet basis;     ///< tight basis I* of x* (rows of the original A)
    Vector shift;       ///< z* in original coordinates
    std::size_t appended_from = 0; ///< first index of the rows -A_{I*}
    bool fallback = false; ///< z* optimal for 1^T A_{I*} rather than for c
};

// ---------------------------------------------------------------------------
// Delta parameters
// ---------------------------------------------------------------------------

/// Delta_1(A), ..., Delta_n(A).
inline std::vector<Rational> delta_table(const Matrix& A, const Limits& limits = {})
{
    std::vector<Rational> out;
    for (std::size_t k = 1; k <= std::min(A.rows(), A.cols()); ++k)
        out.push_back(max_abs_minor(A, k, limits));
    return out;
}

namespace detail {

/// c with det(alpha; M) = c^T alpha for the (n-1) x n matrix M.
inline Vector cofactor_row(const Matrix& M)
{
    const std::size_t n = M.cols();
    Vector c(n);
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n; ++j) {
        cols.clear();
        for (std::size_t l = 0; l < n; ++l)
            if (l != j)
                cols.push_back(l);
        Rational d = det(M.select_cols(cols));
        c[j] = (j % 2 == 0) ? d : Rational(-d);
    }
    return c;
}

inline void check_slice_index(const Matrix& A, const IndexSet& I)
{
    I.check_bound(A.rows());
    if (I.size() + 1 > A.cols())
        throw Error(ErrorKind::Range, "slice index set must have at most n-1 rows");
    if (!I.empty() && rank(A.select_rows(I)) != I.size())
        throw Error(ErrorKind::Singular, "rows " + to_string(I) + " are linearly dependent");
}

} // namespace detail

/// gcd A_I: gcd of the maximal minors of A_I; 1 for I empty.
inline Rational gcd_rows(const Matrix& A, const IndexSet& I)
{
    if (I.empty())
        return 1;
    return gcd_minors(A.select_rows(I));
}

/**
 * Delta_I(A, alpha) for several objectives at once: for every K ⊇ I with
 * |K| = n-1 the cofactor row of A_K is formed once and dotted with each alpha.
 */
inline std::vector<Rational> delta_I_many(const Matrix& A, const std::vector<Vector>& alphas, const IndexSet& I,
                                          const Limits& limits = {})
{
    detail::check_slice_index(A, I);
    const std::size_t n = A.cols();
    for (const auto& a : alphas)
        if (a.size() != n)
            throw Error(ErrorKind::Dimension, "delta_I: objective has wrong length");
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < A.rows(); ++i)
        if (!I.contains(i))
            rest.push_back(i);
    const std::size_t extra = n - 1 - I.size();
    detail::check_subset_cap(rest.size(), extra, limits, "delta_I");

    std::vector<Rational> best(alphas.size(), Rational(0));
    std::vector<std::size_t> K;
    for_each_subset(rest.size(), extra, [&](const std::vector<std::size_t>& s) {
        K = I.indices();
        for (auto j : s)
            K.push_back(rest[j]);
        Vector cof = detail::cofactor_row(A.select_rows(K));
        for (std::size_t a = 0; a < alphas.size(); ++a) {
            Rational v = abs(dot(cof, alphas[a]));
            if (v > best[a])
                best[a] = v;
        }
    });
    Rational g = gcd_rows(A, I);
    for (auto& v : best)
        v /= g;
    return best;
}

inline Rational delta_I(const Matrix& A, const Vector& alpha, const IndexSet& I, const Limits& limits = {})
{
    return delta_I_many(A, {alpha}, I, limits).front();
}

/// The objectives ±e_1, ..., ±e_n, in the order e_1, -e_1, e_2, ...
inline std::vector<Vector> signed_unit_vectors(std::size_t n)
{
    std::vector<Vector> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(unit_vector(n, i, 1));
        out.push_back(unit_vector(n, i, -1));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Bound checks and proximity measurement
// ---------------------------------------------------------------------------

enum class BoundFlag { Strict, Tight, Violated, NotApplicable };

inline std::string_view to_string(BoundFlag f)
{
    switch (f) {
    case BoundFlag::Strict: return "strict";
    case BoundFlag::Tight: return "tight";
    case BoundFlag::Violated: return "violated";
    case BoundFlag::NotApplicable: return "not-applicable";
    }
    return "unknown";
}

/// value <= bound (or value < bound when strict_required). Tight with strict_required is a violation.
struct BoundCheck {
    std::string name;
    Rational bound;
    bool strict_required = false;
    BoundFlag flag = BoundFlag::NotApplicable;

    bool holds() const { return flag != BoundFlag::Violated; }
};

inline BoundCheck make_bound(std::string name, const Rational& value, const Rational& bound, bool strict)
{
    BoundCheck b{std::move(name), bound, strict, BoundFlag::Strict};
    if (value == bound)
        b.flag = strict ? BoundFlag::Violated : BoundFlag::Tight;
    else if (value > bound)
        b.flag = BoundFlag::Violated;
    return b;
}

inline BoundCheck not_applicable(std::string name)
{
    return BoundCheck{std::move(name), Rational(0), false, BoundFlag::NotApplicable};
}

struct ProximityReport {
    Rational proximity;          ///< against optimal integral solutions
    Rational proximity_feasible; ///< against all feasible integral solutions
    Rational lp_value;
    Rational ip_value;
    std::vector<Vector> optimal_vertices;
    Vector worst_vertex;      ///< optimal vertex attaining the proximity
    Vector nearest_integral;  ///< optimal integral point nearest worst_vertex
    std::size_t lattice_point_count = 0;
    std::size_t optimal_integral_count = 0;
    std::vector<Rational> delta_table; ///< Delta_1 ... Delta_n
    BoundCheck bound_classical;          ///< n * max_k Delta_k
    BoundCheck bound_classical_n1; ///< n * Delta_{n-1}
    BoundCheck bound_main;          ///< (n/2) * Delta_{n-1}, strict, n >= 2
    BoundCheck bound_tu;            ///< max{Delta_{n-1}, Delta_n} - 1 under a witness

    std::vector<const BoundCheck*> bounds() const
    {
        return {&bound_classical, &bound_classical_n1, &bound_main, &bound_tu};
    }
    bool all_hold() const
    {
        for (auto* b : bounds())
            if (!b->holds())
                return false;
        return true;
    }
};

namespace detail {

inline Rational min_distance(const Vector& x, const std::vector<Vector>& pts, const Vector** arg = nullptr)
{
    Rational best;
    bool first = true;
    for (const auto& z : pts) {
        Rational d = inf_norm(x - z);
        if (first || d < best) {
            best = d;
            if (arg)
                *arg = &z;
            first = false;
        }
    }
    return best;
}

inline std::vector<Vector> argmax_points(const std::vector<Vector>& pts, const Vector& c, Rational* value = nullptr)
{
    std::vector<Vector> out;
    Rational best;
    for (const auto& z : pts) {
        Rational v = dot(c, z);
        if (out.empty() || v > best) {
            best = v;
            out.clear();
        }
        if (v == best)
            out.push_back(z);
    }
    if (value)
        *value = best;
    return out;
}

/// Checks the hypotheses of a strict Delta-modularity witness; throws naming the failed one.
inline void check_witness(const Matrix& A, const DeltaModularWitness& w, const std::vector<Rational>& deltas)
{
    if (!w.B.is_square() || w.B.rows() != A.cols())
        throw Error(ErrorKind::Hypothesis, "witness: B must be square n x n");
    if (!w.B.is_integral())
        throw Error(ErrorKind::Hypothesis, "witness: B must be integral");
    if (w.T.cols() != w.B.rows() || w.T.rows() != A.rows())
        throw Error(ErrorKind::Hypothesis, "witness: T has the wrong shape");
    if (!(w.T * w.B == A))
        throw Error(ErrorKind::Hypothesis, "witness: A != T B");
    if (!is_totally_unimodular(w.T))
        throw Error(ErrorKind::Hypothesis, "witness: T is not totally unimodular");
    Rational d = abs(det(w.B));
    if (d == 0)
        throw Error(ErrorKind::Hypothesis, "witness: B is singular");
    if (d != deltas.back())
        throw Error(ErrorKind::Hypothesis, "witness: |det B| = " + to_string(d) + " differs from Delta_n(A) = " +
                                               to_string(deltas.back()));
}

} // namespace detail

/**
 * Exact proximity of (A, b, c): the largest, over optimal LP vertices, of the
 * infinity-distance to the nearest optimal integral point; plus the feasible
 * variant and all bound checks. Requires P bounded and IP feasible.
 */
inline ProximityReport measure_proximity(const Instance& inst, const Limits& limits = {},
                                         const std::optional<DeltaModularWitness>& witness = std::nullopt)
{
    const std::size_t n = inst.n();
    HPolyhedron P = inst.polyhedron();
    auto vr = v_representation(P, limits, true);
    if (vr.vertices.empty())
        throw Error(ErrorKind::Infeasible, "LP infeasible");
    if (!vr.rays.empty()) {
        for (const auto& r : vr.rays)
            if (sgn(dot(inst.c(), r)) > 0)
                throw Error(ErrorKind::Unbounded, "LP unbounded");
        throw Error(ErrorKind::Unbounded, "polyhedron is unbounded; integral points cannot be enumerated");
    }
    auto lp = lp_max_over(vr.vertices, inst.c());
    auto lattice = lattice_points(P, lattice_box(P, limits), limits);
    if (lattice.empty())
        throw Error(ErrorKind::Infeasible, "IP infeasible: no integral point");

    ProximityReport rep;
    rep.lp_value = lp.value;
    rep.lattice_point_count = lattice.size();
    auto opt_int = detail::argmax_points(lattice, inst.c(), &rep.ip_value);
    rep.optimal_integral_count = opt_int.size();

    bool first = true;
    for (const auto& v : lp.optimal_vertices) {
        rep.optimal_vertices.push_back(v.point);
        const Vector* z = nullptr;
        Rational d = detail::min_distance(v.point, opt_int, &z);
        Rational df = detail::min_distance(v.point, lattice);
        if (first || d > rep.proximity) {
            rep.proximity = d;
            rep.worst_vertex = v.point;
            rep.nearest_integral = *z;
        }
        if (first || df > rep.proximity_feasible)
            rep.proximity_feasible = df;
        first = false;
    }

    rep.delta_table = delta_table(inst.A(), limits);
    const Rational nn(static_cast<long>(n));
    Rational dmax = *std::max_element(rep.delta_table.begin(), rep.delta_table.end());
    Rational dn1 = n >= 2 ? rep.delta_table[n - 2] : Rational(1);
    rep.bound_classical = make_bound("classical", rep.proximity, nn * dmax, false);
    rep.bound_classical_n1 = make_bound("classical-n1", rep.proximity, nn * dn1, false);
    rep.bound_main = n >= 2 ? make_bound("main", rep.proximity, nn / 2 * dn1, true) : not_applicable("main");
    if (witness) {
        detail::check_witness(inst.A(), *witness, rep.delta_table);
        rep.bound_tu = make_bound("strictly-delta-modular", rep.proximity, std::max(dn1, rep.delta_table.back()) - 1,
                                  false);
    } else {
        rep.bound_tu = not_applicable("strictly-delta-modular");
    }
    return rep;
}

/// Verifies the witness hypotheses, then checks proximity <= max{Delta_{n-1}, Delta_n} - 1.
inline bool check_strictly_delta_modular_bound(const Instance& inst, const Matrix& T, const Matrix& B,
                                               const Limits& limits = {})
{
    return measure_proximity(inst, limits, DeltaModularWitness{T, B}).bound_tu.holds();
}

// ---------------------------------------------------------------------------
// Normalization
// ---------------------------------------------------------------------------

/**
 * Cuts P with A_{I*} x >= A_{I*} z* and translates z* to the origin. x* is
 * the optimal vertex of worst proximity and z* its nearest optimal integral
 * point; the objective becomes 1^T A_{I*}, for which x* is the unique LP
 * optimum. If the cut keeps further lattice points, z* is re-chosen optimal
 * for 1^T A_{I*}, which always leaves only z*.
 */
inline NormalizedInstance normalize(const Instance& inst, const Limits& limits = {})
{
    const std::size_t n = inst.n(), m = inst.m();
    HPolyhedron P = inst.polyhedron();
    auto vr = v_representation(P, limits, true);
    if (vr.vertices.empty())
        throw Error(ErrorKind::Infeasible, "normalize: LP infeasible");
    if (!vr.rays.empty())
        throw Error(ErrorKind::Unbounded, "normalize: polyhedron is unbounded");
    auto lp = lp_max_over(vr.vertices, inst.c());
    auto lattice = lattice_points(P, lattice_box(P, limits), limits);
    if (lattice.empty())
        throw Error(ErrorKind::Infeasible, "normalize: IP infeasible");
    auto opt_int = detail::argmax_points(lattice, inst.c());

    const VertexCertificate* xs = nullptr;
    Rational worst;
    for (const auto& v : lp.optimal_vertices) {
        Rational d = detail::min_distance(v.point, opt_int);
        if (!xs || d > worst) {
            xs = &v;
            worst = d;
        }
    }

    const Matrix AI = inst.A().select_rows(xs->basis);
    Vector cprime = zero_vector(n);
    for (std::size_t i = 0; i < AI.rows(); ++i)
        cprime = cprime + AI.row(i);
    auto cut_at = [&](const Vector& z) {
        Matrix Abar = inst.A().stacked(-AI);
        Vector bbar = inst.b();
        for (std::size_t i = 0; i < AI.rows(); ++i)
            bbar.push_back(-dot(AI.row(i), z));
        for (std::size_t i = 0; i < Abar.rows(); ++i)
            bbar[i] -= dot(Abar.row(i), z);
        return NormalizedInstance{Instance(Abar, bbar, cprime), true, xs->point - z, xs->basis, z, m, false};
    };
    auto only_origin = [&](const NormalizedInstance& N) {
        auto pts = lattice_points(N.base.polyhedron(), limits);
        return pts.size() == 1 && is_zero(pts.front());
    };

    // nearest optimal integral point, ties to the largest c'^T z, then lexicographic
    std::vector<Vector> nearest;
    for (const auto& z : opt_int)
        if (inf_norm(xs->point - z) == worst)
            nearest.push_back(z);
    NormalizedInstance out = cut_at(detail::argmax_points(nearest, cprime).front());
    if (only_origin(out))
        return out;

    // other optimal points survive the cut: take z* optimal for c' instead
    const Vector* zs = nullptr;
    const auto opt_cprime = detail::argmax_points(lattice, cprime);
    detail::min_distance(xs->point, opt_cprime, &zs);
    out = cut_at(*zs);
    out.fallback = true;
    if (!only_origin(out))
        throw Error(ErrorKind::Certification, "normalize: cut polytope has lattice points other than the origin");
    return out;
}

/// Wraps an instance already satisfying P ∩ Z^n = {0} (verified).
inline NormalizedInstance as_normalized(const Instance& inst, const Limits& limits = {})
{
    auto pts = lattice_points(inst.polyhedron(), limits);
    if (pts.size() != 1 || !is_zero(pts.front()))
        throw Error(ErrorKind::Hypothesis, "instance does not satisfy P ∩ Z^n = {0}");
    auto lp = lp_max(inst.polyhedron(), inst.c(), limits);
    return NormalizedInstance{inst, true, lp.vertex.point, lp.vertex.basis, zero_vector(inst.n()), inst.m(), false};
}

/// max over P of the infinity norm.
inline Rational width(const Instance& inst, const Limits& limits = {})
{
    auto vr = v_representation(inst.polyhedron(), limits, true);
    if (!vr.rays.empty())
        throw Error(ErrorKind::Unbounded, "width: polyhedron is unbounded");
    if (vr.vertices.empty())
        throw Error(ErrorKind::Infeasible, "width: polyhedron is empty");
    Rational w = 0;
    for (const auto& v : vr.vertices)
        w = std::max(w, inf_norm(v.point));
    return w;
}

// ---------------------------------------------------------------------------
// Slices and kappa
// ---------------------------------------------------------------------------

struct KappaValue {
    Rational max_value; ///< max of alpha^T x over the slice
    Rational delta;     ///< Delta_I(A, alpha)
    Rational kappa;
    std::size_t dimension = 0;
};

inline KappaValue kappa_I_full(const NormalizedInstance& norm, const Vector& alpha, const IndexSet& I,
                               const Limits& limits = {})
{
    const Matrix& A = norm.base.A();
    detail::check_slice_index(A, I);
    if (!is_integral(alpha))
        throw Error(ErrorKind::InvalidArgument, "kappa: alpha must be integral");
    auto S = slice(norm.base.polyhedron(), I);
    auto vr = v_representation(S, limits, true);
    if (vr.vertices.empty())
        throw Error(ErrorKind::Infeasible, "kappa: slice is empty");
    for (const auto& r : vr.rays)
        if (sgn(dot(alpha, r)) > 0)
            throw Error(ErrorKind::Unbounded, "kappa: alpha unbounded on the slice");
    KappaValue out;
    out.max_value = lp_max_over(vr.vertices, alpha).value;
    out.delta = delta_I(A, alpha, I, limits);
    if (out.delta == 0)
        throw Error(ErrorKind::DegenerateObjective, "Delta_I(A, alpha) = 0 for I = " + to_string(I));
    out.kappa = out.max_value / out.delta;
    out.dimension = dimension(S, vr);
    return out;
}

/// kappa_I(A, b, alpha) = max_{P_I} alpha^T x / Delta_I(A, alpha).
inline Rational kappa_I(const NormalizedInstance& norm, const Vector& alpha, const IndexSet& I,
                        const Limits& limits = {})
{
    return kappa_I_full(norm, alpha, I, limits).kappa;
}

struct SliceEntry {
    IndexSet I;
    std::size_t dimension = 0;
    std::size_t alpha_index = 0;
    Rational max_value;
    Rational delta;
    Rational kappa; ///< meaningful only when delta != 0
};

struct SliceSurvey {
    std::vector<SliceEntry> entries;      ///< one per (independent I, alpha) with delta != 0
    std::size_t degenerate = 0;           ///< (I, alpha) pairs skipped because Delta_I = 0
    std::map<std::size_t, SliceEntry> best_by_dimension; ///< max kappa per slice dimension
};

/**
 * All slices P_I over independent I with |I| <= n-1 (including I empty),
 * restricted to dimensions in [min_dim, max_dim], evaluated at each alpha.
 */
inline SliceSurvey survey_slices(const NormalizedInstance& norm, const std::vector<Vector>& alphas,
                                 std::size_t min_dim, std::size_t max_dim, const Limits& limits = {})
{
    const Matrix& A = norm.base.A();
    const std::size_t n = A.cols(), m = A.rows();
    HPolyhedron P = norm.base.polyhedron();
    SliceSurvey out;
    for (std::size_t s = 0; s + 1 <= n; ++s) {
        detail::check_subset_cap(m, s, limits, "slice survey");
        for_each_subset(m, s, [&](const std::vector<std::size_t>& idx) {
            IndexSet I(idx);
            if (!I.empty() && rank(A.select_rows(I)) != I.size())
                return;
            // a slice through an independent I has dimension <= n - |I|
            if (n - s < min_dim)
                return;
            auto S = slice(P, I);
            auto vr = v_representation(S, limits, false);
            std::size_t d = dimension(S, vr);
            if (d < min_dim || d > max_dim)
                return;
            auto deltas = delta_I_many(A, alphas, I, limits);
            for (std::size_t a = 0; a < alphas.size(); ++a) {
                if (deltas[a] == 0) {
                    ++out.degenerate;
                    continue;
                }
                SliceEntry e{I, d, a, lp_max_over(vr.vertices, alphas[a]).value, deltas[a], 0};
                e.kappa = e.max_value / e.delta;
                auto it = out.best_by_dimension.find(d);
                if (it == out.best_by_dimension.end() || e.kappa > it->second.kappa)
                    out.best_by_dimension[d] = e;
                out.entries.push_back(std::move(e));
            }
        });
    }
    return out;
}

/// kappa_d: the largest kappa_I over slices of dimension d.
inline Rational kappa_d(const NormalizedInstance& norm, const Vector& alpha, std::size_t d, const Limits& limits = {})
{
    auto sv = survey_slices(norm, {alpha}, d, d, limits);
    auto it = sv.best_by_dimension.find(d);
    if (it == sv.best_by_dimension.end())
        throw Error(ErrorKind::Undefined, "kappa_d: no nondegenerate slice of dimension " + std::to_string(d));
    return it->second.kappa;
}

// ---------------------------------------------------------------------------
// Volume inequality
// ---------------------------------------------------------------------------

/// Both sides of kappa_n vol(P_alpha) Delta < 2^{n-1} |alpha|, squared.
struct VolumeBoundCheck {
    Rational max_value;         ///< kappa_n * Delta
    Rational delta;
    Rational squared_volume;    ///< vol_{n-1}(P_alpha)^2
    Rational lhs;               ///< max_value^2 * squared_volume
    Rational rhs;               ///< 4^{n-1} * |alpha|^2
    bool holds = false;
};

/// {x : |A x| <= 1, alpha^T x = 0}.
inline HPolyhedron unit_slab_section(const Matrix& A, const Vector& alpha)
{
    Matrix M = A.stacked(-A).stacked(Matrix::from_rows({alpha}));
    Vector rhs(2 * A.rows(), Rational(1));
    rhs.push_back(0);
    return HPolyhedron(std::move(M), std::move(rhs), IndexSet{2 * A.rows()});
}

inline VolumeBoundCheck check_volume_bound_full(const NormalizedInstance& norm, const Vector& alpha,
                                                const Limits& limits = {})
{
    const std::size_t n = norm.base.n();
    if (n != 2 && n != 3)
        throw Error(ErrorKind::Dimension, "volume bound: n must be 2 or 3");
    if (is_zero(alpha))
        throw Error(ErrorKind::InvalidArgument, "volume bound: alpha must be nonzero");
    HPolyhedron P = norm.base.polyhedron();
    if (dimension(P, limits) != n)
        throw Error(ErrorKind::Hypothesis, "volume bound: P is not full-dimensional");
    VolumeBoundCheck out;
    out.max_value = lp_max(P, alpha, limits).value;
    out.delta = delta_I(norm.base.A(), alpha, {}, limits);
    auto vol = volume_low_dim(unit_slab_section(norm.base.A(), alpha), limits);
    if (vol.dimension != n - 1)
        throw Error(ErrorKind::Hypothesis, "volume bound: section has the wrong dimension");
    out.squared_volume = vol.squared_measure;
    out.lhs = out.max_value * out.max_value * out.squared_volume;
    Rational four_pow = 1;
    for (std::size_t i = 1; i < n; ++i)
        four_pow *= 4;
    out.rhs = four_pow * squared_norm(alpha);
    out.holds = out.lhs < out.rhs;
    return out;
}

inline bool check_volume_bound(const NormalizedInstance& norm, const Vector& alpha, const Limits& limits = {})
{
    return check_volume_bound_full(norm, alpha, limits).holds;
}

} // namespace proxlab

#endif
