#ifndef PROXLAB_LIFTING_HPP
#define PROXLAB_LIFTING_HPP

#include "proxlab/proximity.hpp"

#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace proxlab {

/**
 * A slice P_I of dimension d = n - |I| rewritten as a full-dimensional
 * instance in R^d. A_I U = [L 0] with U unimodular; the lifted data are
 * Â = (AU)_{Ī,J̄}, b̂ = b_Ī, α̂ = (α^T U)_J̄ where J̄ are the last d columns.
 */
struct LiftResult {
    IndexSet I;
    std::vector<std::size_t> row_order; ///< I followed by the complement Ī: the explicit row permutation
    std::size_t d = 0;
    Matrix U;
    Matrix U_inv;
    Matrix A_hat;
    Vector b_hat;
    Vector alpha_hat;

    /// x in ker A_I  ->  (U^{-1} x)_{J̄}
    Vector to_lifted(const Vector& x) const
    {
        Vector y = U_inv * x;
        return Vector(y.end() - static_cast<std::ptrdiff_t>(d), y.end());
    }

    /// y in R^d  ->  U (0; y)
    Vector from_lifted(const Vector& y) const
    {
        Vector z = zero_vector(U.rows() - d);
        z.insert(z.end(), y.begin(), y.end());
        return U * z;
    }

    Instance instance() const { return Instance(A_hat, b_hat, alpha_hat); }
};

inline LiftResult lift(const NormalizedInstance& norm, const Vector& alpha, const IndexSet& I,
                       const Limits& limits = {})
{
    const Matrix& A = norm.base.A();
    const std::size_t n = A.cols();
    detail::check_slice_index(A, I);
    if (alpha.size() != n || !is_integral(alpha))
        throw Error(ErrorKind::InvalidArgument, "lift: alpha must be an integral n-vector");
    const std::size_t d = n - I.size();
    if (dimension(slice(norm.base.polyhedron(), I), limits) != d)
        throw Error(ErrorKind::Hypothesis, "lift: the linear span of P_I is not ker A_I");

    LiftResult L;
    L.I = I;
    L.d = d;
    L.U = I.empty() ? Matrix::identity(n) : hermite_unimodular(A.select_rows(I)).U;
    L.U_inv = inverse(L.U);
    IndexSet Ibar = IndexSet::range(A.rows()).minus(I);
    L.row_order = I.indices();
    L.row_order.insert(L.row_order.end(), Ibar.begin(), Ibar.end());
    std::vector<std::size_t> Jbar(d);
    std::iota(Jbar.begin(), Jbar.end(), I.size());
    Matrix AU = A * L.U;
    L.A_hat = AU.submatrix(Ibar.indices(), Jbar);
    for (auto i : Ibar)
        L.b_hat.push_back(norm.base.b()[i]);
    Vector aU = L.U.transpose() * alpha;
    L.alpha_hat.assign(aU.begin() + static_cast<std::ptrdiff_t>(I.size()), aU.end());
    return L;
}

struct LiftVerification {
    bool unimodular = false;
    bool block_shape = false;
    bool objective_transport = false; ///< alpha^T x = alpha_hat^T (U^{-1} x)_J̄ on slice vertices and lattice samples
    bool vertex_bijection = false;    ///< P_I vertices map onto P(Â, b̂) vertices
    bool lattice_only_zero = false;   ///< P(Â, b̂) ∩ Z^d = {0}
    bool delta_identity = false;      ///< Delta(Â, α̂) = Delta_I(A, α)
    bool kappa_identity = false;      ///< kappa(Â, b̂, α̂) = kappa_I(A, b, α); max values when Delta = 0
    Rational delta_original;
    Rational delta_lifted;
    Rational max_original;
    Rational max_lifted;

    /// First failed identity, or empty.
    std::string failure() const
    {
        if (!unimodular)
            return "unimodularity";
        if (!block_shape)
            return "block-shape";
        if (!objective_transport)
            return "objective-transport";
        if (!vertex_bijection)
            return "vertex-bijection";
        if (!lattice_only_zero)
            return "lattice";
        if (!delta_identity)
            return "delta-identity";
        if (!kappa_identity)
            return "kappa-identity";
        return {};
    }
};

inline LiftVerification inspect_lift(const NormalizedInstance& norm, const Vector& alpha, const LiftResult& L,
                                     const Limits& limits = {})
{
    LiftVerification v;
    const Matrix& A = norm.base.A();
    const std::size_t n = A.cols();
    v.unimodular = L.U.is_integral() && L.U.is_square() && L.U.rows() == n && abs(det(L.U)) == 1;
    if (!v.unimodular)
        return v;
    Matrix AU = A * L.U;
    v.block_shape = true;
    for (auto i : L.I)
        for (std::size_t j = L.I.size(); j < n; ++j)
            v.block_shape = v.block_shape && AU(i, j) == 0;
    if (!v.block_shape)
        return v;

    auto S = slice(norm.base.polyhedron(), L.I);
    auto vr = v_representation(S, limits, false);
    HPolyhedron Q(L.A_hat, L.b_hat);
    auto vq = v_representation(Q, limits, false);
    v.objective_transport = true;
    std::set<Vector> mapped;
    for (const auto& x : vr.vertices) {
        Vector y = L.to_lifted(x.point);
        v.objective_transport = v.objective_transport && dot(alpha, x.point) == dot(L.alpha_hat, y) &&
                                L.from_lifted(y) == x.point;
        mapped.insert(y);
    }
    std::set<Vector> lifted_vertices;
    for (const auto& y : vq.vertices)
        lifted_vertices.insert(y.point);
    v.vertex_bijection = mapped == lifted_vertices;

    auto pts = lattice_points(Q, limits);
    v.lattice_only_zero = pts.size() == 1 && is_zero(pts.front());
    // forward-then-inverse on kernel lattice points near the origin
    for (std::size_t j = 0; j < L.d; ++j) {
        Vector y = zero_vector(L.d);
        y[j] = 1;
        Vector x = L.from_lifted(y);
        v.objective_transport = v.objective_transport && is_integral(x) && L.to_lifted(x) == y &&
                                is_zero(A.select_rows(L.I) * x) && dot(alpha, x) == dot(L.alpha_hat, y);
    }

    v.delta_original = delta_I(A, alpha, L.I, limits);
    v.delta_lifted = delta_I(L.A_hat, L.alpha_hat, {}, limits);
    v.delta_identity = v.delta_original == v.delta_lifted;
    v.max_original = lp_max_over(vr.vertices, alpha).value;
    v.max_lifted = lp_max_over(vq.vertices, L.alpha_hat).value;
    if (v.delta_original != 0 && v.delta_lifted != 0)
        v.kappa_identity = v.max_original / v.delta_original == v.max_lifted / v.delta_lifted;
    else
        v.kappa_identity = v.max_original == v.max_lifted;
    return v;
}

/// Throws a lift-defect error naming the first identity that fails.
inline bool verify_lift(const NormalizedInstance& norm, const Vector& alpha, const LiftResult& L,
                        const Limits& limits = {})
{
    auto v = inspect_lift(norm, alpha, L, limits);
    if (auto f = v.failure(); !f.empty())
        throw Error(ErrorKind::LiftDefect, "lifted instance fails the " + f + " identity");
    return true;
}

} // namespace proxlab

#endif
