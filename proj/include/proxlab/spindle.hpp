#ifndef PROXLAB_SPINDLE_HPP
#define PROXLAB_SPINDLE_HPP

#include "proxlab/proximity.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace proxlab {

enum class RowCopy { Lower, Upper, Zero };

/**
 * S(A, x*) as a tagged system. With â_i = sign(a_i^T x*) a_i, the rows are
 * -â_i^T x <= 0 (lower copies), â_i^T x <= â_i^T x* (upper copies), both for
 * the support rows, followed by a_i^T x = 0 for the remaining rows.
 */
struct SpindleRep {
    Matrix A;
    Vector apex;
    std::vector<int> sign_vector;
    IndexSet support;
    HPolyhedron system;
    std::vector<std::size_t> source_row; ///< row of A behind each system row
    std::vector<RowCopy> copy;

    std::size_t lower(std::size_t k) const { return k; }
    std::size_t upper(std::size_t k) const { return support.size() + k; }
};

inline SpindleRep build_spindle(const Matrix& A, const Vector& x_star)
{
    if (x_star.size() != A.cols())
        throw Error(ErrorKind::Dimension, "build_spindle: apex has wrong length");
    SpindleRep S;
    S.A = A;
    S.apex = x_star;
    std::vector<std::size_t> supp, zero;
    for (std::size_t i = 0; i < A.rows(); ++i) {
        Rational v = dot(A.row(i), x_star);
        S.sign_vector.push_back(sgn(v));
        (sgn(v) == 0 ? zero : supp).push_back(i);
    }
    S.support = IndexSet(supp);
    std::vector<Vector> rows;
    Vector rhs;
    for (auto i : supp) {
        rows.push_back(-Rational(S.sign_vector[i]) * A.row(i));
        rhs.push_back(0);
        S.source_row.push_back(i);
        S.copy.push_back(RowCopy::Lower);
    }
    for (auto i : supp) {
        Vector ah = Rational(S.sign_vector[i]) * A.row(i);
        rhs.push_back(dot(ah, x_star));
        rows.push_back(std::move(ah));
        S.source_row.push_back(i);
        S.copy.push_back(RowCopy::Upper);
    }
    std::vector<std::size_t> eq;
    for (auto i : zero) {
        eq.push_back(rows.size());
        rows.push_back(A.row(i));
        rhs.push_back(0);
        S.source_row.push_back(i);
        S.copy.push_back(RowCopy::Zero);
    }
    S.system = HPolyhedron(Matrix::from_rows(rows, A.cols()), rhs, IndexSet(eq));
    return S;
}

/// C(A, x*): the lower copies and the zero rows only.
inline HPolyhedron cone_system(const Matrix& A, const Vector& x_star)
{
    std::vector<Vector> rows;
    std::vector<std::size_t> eq;
    for (std::size_t i = 0; i < A.rows(); ++i) {
        int s = sgn(dot(A.row(i), x_star));
        if (s == 0)
            eq.push_back(rows.size());
        rows.push_back(s == 0 ? A.row(i) : -Rational(s) * A.row(i));
    }
    return HPolyhedron(Matrix::from_rows(rows, A.cols()), zero_vector(rows.size()), IndexSet(eq));
}

/// Extreme rays of C(A, x*), primitive integral, from one-dimensional kernels.
inline std::vector<Vector> cone_rays(const Matrix& A, const Vector& x_star, const Limits& limits = {})
{
    return v_representation(cone_system(A, x_star), limits, true).rays;
}

// ---------------------------------------------------------------------------
// Face lattice of a spindle
// ---------------------------------------------------------------------------

struct Face {
    std::vector<std::size_t> vertex_ids; ///< into SpindleFaces::vertices
    IndexSet tight_rows;                 ///< system rows tight on the whole face
    std::size_t dim = 0;
};

struct SpindleFaces {
    SpindleRep rep;
    std::vector<Vector> vertices; ///< lexicographic
    std::vector<IndexSet> tight;  ///< tight system rows per vertex
    std::size_t dim = 0;

    std::optional<std::size_t> find(const Vector& x) const
    {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), x);
        if (it == vertices.end() || *it != x)
            return std::nullopt;
        return static_cast<std::size_t>(it - vertices.begin());
    }
};

inline SpindleFaces spindle_faces(SpindleRep rep, const Limits& limits = {})
{
    SpindleFaces f;
    auto vr = v_representation(rep.system, limits, false);
    for (const auto& v : vr.vertices) {
        f.vertices.push_back(v.point);
        f.tight.push_back(rep.system.tight_rows(v.point));
    }
    f.dim = affine_dimension(f.vertices);
    f.rep = std::move(rep);
    return f;
}

/// Smallest face containing the given vertices.
inline Face face_closure(const SpindleFaces& sf, const std::vector<std::size_t>& ids)
{
    if (ids.empty())
        throw Error(ErrorKind::InvalidArgument, "face_closure of no vertices");
    IndexSet t = sf.tight[ids.front()];
    for (auto id : ids)
        t = t.minus(t.minus(sf.tight[id])); // intersection
    Face F;
    F.tight_rows = t;
    std::vector<Vector> pts;
    for (std::size_t v = 0; v < sf.vertices.size(); ++v)
        if (t.minus(sf.tight[v]).empty()) {
            F.vertex_ids.push_back(v);
            pts.push_back(sf.vertices[v]);
        }
    F.dim = affine_dimension(pts);
    return F;
}

/// The face of all vertices tight on the given system rows.
inline Face face_of_rows(const SpindleFaces& sf, const IndexSet& rows)
{
    std::vector<std::size_t> ids;
    for (std::size_t v = 0; v < sf.vertices.size(); ++v)
        if (rows.minus(sf.tight[v]).empty())
            ids.push_back(v);
    if (ids.empty())
        throw Error(ErrorKind::Infeasible, "face_of_rows: rows define an empty face");
    return face_closure(sf, ids);
}

inline Face face_join(const SpindleFaces& sf, const Face& F, std::size_t vertex)
{
    auto ids = F.vertex_ids;
    ids.push_back(vertex);
    return face_closure(sf, ids);
}

inline bool face_contains(const Face& F, std::size_t vertex)
{
    return std::binary_search(F.vertex_ids.begin(), F.vertex_ids.end(), vertex);
}

/**
 * A face of dimension `target` containing F: repeatedly joins the
 * lexicographically first vertex whose join raises the dimension by one.
 */
inline Face face_enlarge(const SpindleFaces& sf, Face F, std::size_t target)
{
    if (target > sf.dim || F.dim > target)
        throw Error(ErrorKind::Range, "face_enlarge: target dimension out of range");
    while (F.dim < target) {
        bool grown = false;
        for (std::size_t v = 0; v < sf.vertices.size() && !grown; ++v) {
            if (face_contains(F, v))
                continue;
            Face H = face_join(sf, F, v);
            if (H.dim == F.dim + 1) {
                F = std::move(H);
                grown = true;
            }
        }
        if (!grown)
            throw Error(ErrorKind::Certification, "face_enlarge: no covering face found");
    }
    return F;
}

// ---------------------------------------------------------------------------
// Spindle properties
// ---------------------------------------------------------------------------

/// S ⊆ P, checked on the vertices of the (bounded) spindle.
inline bool spindle_within(const SpindleFaces& sf, const HPolyhedron& P)
{
    return std::all_of(sf.vertices.begin(), sf.vertices.end(), [&](const Vector& v) { return P.contains(v); });
}

/// v vertex implies apex - v vertex.
inline bool spindle_symmetric(const SpindleFaces& sf)
{
    return std::all_of(sf.vertices.begin(), sf.vertices.end(),
                       [&](const Vector& v) { return sf.find(sf.rep.apex - v).has_value(); });
}

// ---------------------------------------------------------------------------
// Basis path through the spindle
// ---------------------------------------------------------------------------

struct FacePathResult {
    Vector vertex;
    Face F; ///< d-face containing the apex and vertex
    Face G; ///< (k-d)-face containing 0 and vertex
    std::vector<std::size_t> basis; ///< system rows of the final basis
    std::size_t lower_in_basis = 0;
    std::size_t upper_in_basis = 0;
    std::size_t pivots = 0;
    std::vector<Vector> path; ///< basic solutions visited, starting at 0
};

/**
 * Pivots from a basis tight at 0 towards the apex (objective: sum of the
 * upper-copy rows) with Bland's rule, stopping once exactly k - d upper
 * copies are basic.
 */
inline FacePathResult face_path(const SpindleFaces& sf, std::size_t d, std::size_t max_pivots = 100000)
{
    const SpindleRep& S = sf.rep;
    const std::size_t k = sf.dim, n = S.A.cols();
    if (d < 1 || d > k)
        throw Error(ErrorKind::Range, "face_path: d must lie in [1, dim S]");
    const Matrix& M = S.system.A();
    const Vector& rhs = S.system.b();
    const std::size_t q = S.support.size();

    auto E = independent_subset(M, S.system.equality_rows().indices());
    if (E.size() != n - k)
        throw Error(ErrorKind::Certification, "face_path: equality rank does not match dim S");
    std::vector<std::size_t> lowers(q);
    std::iota(lowers.begin(), lowers.end(), std::size_t{0});
    std::vector<std::size_t> J = independent_subset(M, lowers, E);
    if (J.size() != n)
        throw Error(ErrorKind::Certification, "face_path: no basis tight at 0");

    Vector c = zero_vector(n);
    for (std::size_t j = q; j < 2 * q; ++j)
        c = c + M.row(j);

    FacePathResult out;
    auto count_upper = [&] {
        return static_cast<std::size_t>(
            std::count_if(J.begin(), J.end(), [&](std::size_t j) { return j >= q && j < 2 * q; }));
    };
    Vector y;
    while (true) {
        Matrix AJ = M.select_rows(J);
        Vector bJ;
        for (auto j : J)
            bJ.push_back(rhs[j]);
        y = solve(AJ, bJ);
        out.path.push_back(y);
        if (count_upper() == k - d)
            break;
        if (out.pivots >= max_pivots)
            throw Error(ErrorKind::Stalled, "face_path: pivot limit reached");
        Vector lambda = solve(AJ.transpose(), c);
        // Bland: smallest leaving row among inequality rows with negative multiplier
        std::optional<std::size_t> leave_pos;
        for (std::size_t p = 0; p < J.size(); ++p) {
            if (S.system.equality_rows().contains(J[p]) || sgn(lambda[p]) >= 0)
                continue;
            if (!leave_pos || J[p] < J[*leave_pos])
                leave_pos = p;
        }
        if (!leave_pos)
            throw Error(ErrorKind::Stalled, "face_path: optimum reached before k - d upper copies were basic");
        Vector e = zero_vector(n);
        e[*leave_pos] = -1;
        Vector dir = solve(AJ, e);
        std::optional<std::size_t> enter;
        Rational best;
        for (std::size_t i = 0; i < M.rows(); ++i) {
            if (S.system.equality_rows().contains(i) || std::find(J.begin(), J.end(), i) != J.end())
                continue;
            Rational ad = dot(M.row(i), dir);
            if (sgn(ad) <= 0)
                continue;
            Rational t = (rhs[i] - dot(M.row(i), y)) / ad;
            if (!enter || t < best) {
                enter = i;
                best = t;
            }
        }
        if (!enter)
            throw Error(ErrorKind::Stalled, "face_path: unbounded pivot direction");
        J[*leave_pos] = *enter;
        ++out.pivots;
    }
    out.vertex = y;
    std::sort(J.begin(), J.end());
    out.basis = J;
    std::vector<std::size_t> up, lo;
    for (auto j : J) {
        if (j < q)
            lo.push_back(j);
        else if (j < 2 * q)
            up.push_back(j);
    }
    out.lower_in_basis = lo.size();
    out.upper_in_basis = up.size();

    auto vid = sf.find(y);
    if (!vid)
        throw Error(ErrorKind::Certification, "face_path: basic solution is not a spindle vertex");
    auto face_or_all = [&](const std::vector<std::size_t>& rows) {
        if (!rows.empty())
            return face_of_rows(sf, IndexSet(rows));
        std::vector<std::size_t> all(sf.vertices.size());
        std::iota(all.begin(), all.end(), std::size_t{0});
        return face_closure(sf, all);
    };
    Face F0 = face_or_all(up);
    Face G0 = face_or_all(lo);
    out.F = face_enlarge(sf, F0, d);
    out.G = face_enlarge(sf, G0, k - d);
    return out;
}

// ---------------------------------------------------------------------------
// Template walk
// ---------------------------------------------------------------------------

/// (3,...,3,2,...,2) with as few twos as possible, summing to d.
inline std::vector<std::size_t> default_blocks(std::size_t d)
{
    if (d == 0)
        throw Error(ErrorKind::Range, "default_blocks: d must be positive");
    if (d == 1)
        return {1};
    std::vector<std::size_t> out;
    std::size_t twos = d % 3 == 0 ? 0 : (d % 3 == 2 ? 1 : 2);
    std::size_t threes = (d - 2 * twos) / 3;
    out.assign(threes, 3);
    out.insert(out.end(), twos, 2);
    return out;
}

struct WalkStep {
    Vector from;                ///< x*_i
    Vector to;                  ///< x*_{i+1}
    std::size_t block = 0;      ///< d_i
    std::size_t spindle_dim = 0;
    bool terminal = false;
    std::vector<Vector> F;      ///< vertices of F_i
    std::size_t F_dim = 0;
    std::vector<Vector> G;      ///< vertices of G_i (empty for the terminal step)
    std::size_t G_dim = 0;
    IndexSet I;                 ///< I_i: independent rows with ker A_{I_i} = span(x*_i - F_i)
    Rational step_value;        ///< alpha^T (x*_i - x*_{i+1})
    Rational face_max;          ///< max over x*_i - F_i of alpha^T x
    Rational slice_max;         ///< max over P_{I_i} of alpha^T x = kappa_{I_i} Delta_{I_i}
    Rational delta;             ///< Delta_{I_i}(A, alpha)
    std::optional<Rational> kappa;
    std::size_t slice_dim = 0;  ///< dim P_{I_i}
};

struct WalkTrace {
    Vector alpha;
    std::vector<std::size_t> d_seq;
    Rational objective; ///< alpha^T x* = max over P
    std::vector<Vector> points;
    std::vector<WalkStep> steps;

    std::size_t t() const { return steps.size(); }
};

struct WalkCertificate {
    bool telescoping = false;      ///< alpha^T x* = sum of step values
    bool step_bounds = false;      ///< step value <= face max <= slice max, every step
    bool count_bound = false;      ///< t - 1 <= k
    bool dimension_decrease = false; ///< dim S(x_{i+1}) <= dim G_i = dim S(x_i) - d_i
    bool last_face = false;        ///< d_{t-1} >= dim S(x_{t-1})
    bool slice_dims = false;       ///< dim P_{I_i} = dim F_i
    bool all() const
    {
        return telescoping && step_bounds && count_bound && dimension_decrease && last_face && slice_dims;
    }
};

namespace detail {

inline IndexSet kernel_rows_of_face(const SpindleFaces& sf, const Face& face_at_zero)
{
    std::vector<std::size_t> src;
    for (auto r : face_at_zero.tight_rows)
        src.push_back(sf.rep.source_row[r]);
    std::sort(src.begin(), src.end());
    src.erase(std::unique(src.begin(), src.end()), src.end());
    auto ind = independent_subset(sf.rep.A, src);
    return IndexSet(ind);
}

} // namespace detail

/**
 * Walk x* = x_0, x_1, ..., x_t = 0 through nested spindles, advancing over a
 * d_i-face at each step. Among admissible vertices the walk takes the one
 * with the largest alpha^T x (ties lexicographic) and cross-checks that the
 * pivoting path yields an admissible vertex too.
 */
inline WalkTrace template_walk(const NormalizedInstance& norm, const Vector& alpha, std::vector<std::size_t> d_seq,
                               const Limits& limits = {})
{
    const Instance& inst = norm.base;
    const Matrix& A = inst.A();
    HPolyhedron P = inst.polyhedron();
    const std::size_t dimP = dimension(P, limits);
    if (alpha.size() != inst.n() || !is_integral(alpha))
        throw Error(ErrorKind::InvalidArgument, "template_walk: alpha must be an integral n-vector");
    if (d_seq.empty())
        d_seq = default_blocks(dimP);
    std::size_t total = 0;
    for (auto d : d_seq) {
        if (d == 0)
            throw Error(ErrorKind::InvalidArgument, "template_walk: blocks must be positive");
        total += d;
    }
    if (total != dimP)
        throw Error(ErrorKind::InvalidArgument, "template_walk: d_seq sums to " + std::to_string(total) +
                                                    ", dim P is " + std::to_string(dimP));

    WalkTrace tr;
    tr.alpha = alpha;
    tr.d_seq = d_seq;
    auto lp = lp_max(P, alpha, limits);
    tr.objective = lp.value;
    Vector x = lp.vertex.point;
    tr.points.push_back(x);
    const std::size_t k = d_seq.size() - 1;

    for (std::size_t i = 0;; ++i) {
        SpindleFaces sf = spindle_faces(build_spindle(A, x), limits);
        if (sf.dim == 0)
            break; // x = 0: nothing left to walk
        WalkStep st;
        st.from = x;
        st.block = i <= k ? d_seq[i] : 0;
        st.spindle_dim = sf.dim;
        Face F;
        if (i <= k && d_seq[i] < sf.dim) {
            const std::size_t d = d_seq[i];
            const std::size_t apex = *sf.find(x);
            auto zero = sf.find(zero_vector(x.size()));
            if (!zero)
                throw Error(ErrorKind::Certification, "template_walk: 0 is not a spindle vertex");
            Face at_apex = face_closure(sf, {apex});
            Face at_zero = face_closure(sf, {*zero});
            std::optional<std::size_t> pick;
            std::set<std::size_t> admissible;
            for (std::size_t v = 0; v < sf.vertices.size(); ++v) {
                if (face_join(sf, at_apex, v).dim > d || face_join(sf, at_zero, v).dim > sf.dim - d)
                    continue;
                admissible.insert(v);
                if (!pick || dot(alpha, sf.vertices[v]) > dot(alpha, sf.vertices[*pick]))
                    pick = v;
            }
            auto fp = face_path(sf, d);
            if (!admissible.count(*sf.find(fp.vertex)))
                throw Error(ErrorKind::Certification, "template_walk: pivot path vertex is not admissible");
            F = face_enlarge(sf, face_join(sf, at_apex, *pick), d);
            Face G = face_enlarge(sf, face_join(sf, at_zero, *pick), sf.dim - d);
            st.to = sf.vertices[*pick];
            for (auto id : G.vertex_ids)
                st.G.push_back(sf.vertices[id]);
            st.G_dim = G.dim;
        } else {
            std::vector<std::size_t> all(sf.vertices.size());
            std::iota(all.begin(), all.end(), std::size_t{0});
            F = face_closure(sf, all);
            st.terminal = true;
            st.to = zero_vector(x.size());
        }
        for (auto id : F.vertex_ids)
            st.F.push_back(sf.vertices[id]);
        st.F_dim = F.dim;

        // x_i - F_i is the face of S(x_i) through 0 mirroring F_i
        std::vector<std::size_t> mirror;
        for (auto id : F.vertex_ids)
            mirror.push_back(*sf.find(x - sf.vertices[id]));
        std::sort(mirror.begin(), mirror.end());
        Face Fm = face_closure(sf, mirror);
        st.I = detail::kernel_rows_of_face(sf, Fm);
        st.step_value = dot(alpha, st.from - st.to);
        bool first = true;
        for (const auto& v : st.F) {
            Rational val = dot(alpha, x - v);
            if (first || val > st.face_max)
                st.face_max = val;
            first = false;
        }
        auto Pi = slice(P, st.I);
        auto vr = v_representation(Pi, limits, false);
        st.slice_max = lp_max_over(vr.vertices, alpha).value;
        st.slice_dim = dimension(Pi, vr);
        st.delta = delta_I(A, alpha, st.I, limits);
        if (st.delta != 0)
            st.kappa = st.slice_max / st.delta;

        x = st.to;
        tr.points.push_back(x);
        tr.steps.push_back(std::move(st));
        if (tr.steps.back().terminal)
            break;
    }
    return tr;
}

inline WalkCertificate certify_walk(const WalkTrace& tr, const Matrix& A, const Limits& limits = {})
{
    WalkCertificate c;
    Rational sum = 0;
    for (const auto& s : tr.steps)
        sum += s.step_value;
    c.telescoping = sum == dot(tr.alpha, tr.points.front()) && sum == tr.objective && is_zero(tr.points.back());
    c.step_bounds = std::all_of(tr.steps.begin(), tr.steps.end(), [](const WalkStep& s) {
        return s.step_value <= s.face_max && s.face_max <= s.slice_max;
    });
    if (tr.steps.empty()) {
        // alpha^T x <= 0 on P: the walk is empty
        c.count_bound = c.dimension_decrease = c.last_face = c.slice_dims = c.step_bounds = true;
        return c;
    }
    c.count_bound = tr.t() <= tr.d_seq.size();
    c.dimension_decrease = true;
    for (std::size_t i = 0; i + 1 < tr.steps.size(); ++i) {
        const auto& s = tr.steps[i];
        std::size_t next_dim = spindle_faces(build_spindle(A, s.to), limits).dim;
        c.dimension_decrease = c.dimension_decrease && next_dim == tr.steps[i + 1].spindle_dim &&
                               s.G_dim == s.spindle_dim - s.block && next_dim <= s.G_dim;
    }
    const auto& last = tr.steps.back();
    c.last_face = tr.d_seq[tr.t() - 1] >= last.spindle_dim && last.F_dim == last.spindle_dim;
    c.slice_dims = std::all_of(tr.steps.begin(), tr.steps.end(), [&](const WalkStep& s) {
        return s.slice_dim == s.F_dim && s.I.size() == A.cols() - s.F_dim;
    });
    return c;
}

/// alpha^T x* <= Delta_I * sum_i kappa_{d_i} (I empty), with kappa_d from exhaustive slice surveys.
struct TemplateBound {
    Rational objective;
    Rational delta;
    std::vector<Rational> kappas;
    Rational bound;
    bool holds = false;
};

inline TemplateBound template_bound(const NormalizedInstance& norm, const Vector& alpha,
                                    const std::vector<std::size_t>& d_seq, const Limits& limits = {})
{
    TemplateBound tb;
    tb.objective = lp_max(norm.base.polyhedron(), alpha, limits).value;
    tb.delta = delta_I(norm.base.A(), alpha, {}, limits);
    auto sv = survey_slices(norm, {alpha}, 1, norm.base.n(), limits);
    Rational s = 0;
    for (auto d : d_seq) {
        auto it = sv.best_by_dimension.find(d);
        Rational kd = it == sv.best_by_dimension.end() ? Rational(0) : it->second.kappa;
        tb.kappas.push_back(kd);
        s += kd;
    }
    tb.bound = tb.delta * s;
    tb.holds = tb.objective <= tb.bound;
    return tb;
}

// ---------------------------------------------------------------------------
// Primitive-ray decomposition
// ---------------------------------------------------------------------------

struct RayTerm {
    Vector ray;          ///< primitive in the lattice B^{-1} Z^n
    Integer multiplicity;
};

struct RayDecomposition {
    std::vector<RayTerm> terms;
    std::vector<Vector> chosen_vertices; ///< v at each recursion step
    Integer total_multiplicity = 0;      ///< N
    bool rays_in_cone = false;           ///< every ray is an extreme ray of C(x*)
    bool sums_in_spindle = false;        ///< all partial sums lie in S(x*)
    bool sums_distinct = false;
    bool no_lattice_point = false;       ///< no partial sum is a nonzero integral point
    bool sums_to_apex = false;
};

namespace detail {

inline Integer content(const Vector& integral)
{
    Integer g = 0;
    for (const auto& v : integral)
        g = gcd_of(g, v.get_num());
    return g;
}

} // namespace detail

/**
 * Writes x* as a nonnegative integral combination of primitive vectors of
 * Lambda = B^{-1} Z^n on rays of C(x*), by repeatedly peeling off a vertex of
 * the spindle adjacent to 0.
 */
inline RayDecomposition ray_decomposition(const Matrix& A, const Matrix& T, const Matrix& B, const Vector& x_star,
                                          const Limits& limits = {})
{
    if (!B.is_square() || B.rows() != A.cols() || det(B) == 0)
        throw Error(ErrorKind::Hypothesis, "ray_decomposition: B must be square and invertible");
    if (T.rows() != A.rows() || T.cols() != B.rows() || !(T * B == A))
        throw Error(ErrorKind::Hypothesis, "ray_decomposition: A != T B");
    if (!is_totally_unimodular(T))
        throw Error(ErrorKind::Hypothesis, "ray_decomposition: T is not totally unimodular");
    if (!is_integral(B * x_star))
        throw Error(ErrorKind::Hypothesis, "ray_decomposition: x* is not in B^{-1} Z^n");

    RayDecomposition out;
    std::map<Vector, Integer> merged;
    std::vector<Vector> order;
    Vector y = x_star;
    std::size_t prev_dim = A.cols() + 1;
    while (true) {
        SpindleFaces sf = spindle_faces(build_spindle(A, y), limits);
        if (sf.dim >= prev_dim)
            throw Error(ErrorKind::Certification, "ray_decomposition: spindle dimension did not drop");
        prev_dim = sf.dim;
        if (sf.dim == 0)
            break;
        Vector v;
        if (sf.dim == 1) {
            v = y;
        } else {
            auto zero = *sf.find(zero_vector(y.size()));
            Face at_zero = face_closure(sf, {zero});
            bool found = false;
            for (std::size_t id = 0; id < sf.vertices.size() && !found; ++id) {
                if (id == zero || sf.vertices[id] == y)
                    continue;
                if (face_join(sf, at_zero, id).dim == 1) {
                    v = sf.vertices[id];
                    found = true;
                }
            }
            if (!found)
                throw Error(ErrorKind::Certification, "ray_decomposition: no vertex adjacent to 0");
        }
        Vector Bv = B * v;
        if (!is_integral(Bv))
            throw Error(ErrorKind::Certification, "ray_decomposition: spindle vertex outside the lattice");
        Integer mu = detail::content(Bv);
        Vector r = Rational(1, 1) / Rational(mu) * v;
        if (!merged.count(r))
            order.push_back(r);
        merged[r] += mu;
        out.chosen_vertices.push_back(v);
        y = y - v;
    }
    for (const auto& r : order) {
        out.terms.push_back({r, merged[r]});
        out.total_multiplicity += merged[r];
    }

    auto rays = cone_rays(A, x_star, limits);
    std::set<Vector> rayset(rays.begin(), rays.end());
    out.rays_in_cone = std::all_of(out.terms.begin(), out.terms.end(),
                                   [&](const RayTerm& t) { return rayset.count(primitive_integer(t.ray)) > 0; });

    SpindleRep S = build_spindle(A, x_star);
    std::set<Vector> seen;
    Vector s = zero_vector(x_star.size());
    out.sums_in_spindle = true;
    out.sums_distinct = true;
    out.no_lattice_point = true;
    seen.insert(s);
    for (const auto& t : out.terms) {
        for (Integer c = 0; c < t.multiplicity; ++c) {
            s = s + t.ray;
            out.sums_in_spindle = out.sums_in_spindle && S.system.contains(s);
            out.sums_distinct = out.sums_distinct && seen.insert(s).second;
            out.no_lattice_point = out.no_lattice_point && !(is_integral(s) && !is_zero(s));
        }
    }
    out.sums_to_apex = s == x_star;
    return out;
}

} // namespace proxlab

#endif
