#ifndef PROXLAB_TESTS_ORACLES_HPP
#define PROXLAB_TESTS_ORACLES_HPP

// Independent reference computations used only by the tests. Nothing here
// calls into the elimination code of the library.

#include "proxlab/exactmath.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using IntMat = std::vector<std::vector<std::int64_t>>;

/// Determinant by cofactor expansion along the first row.
inline std::int64_t laplace_det(const IntMat& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return m[0][0];
    std::int64_t total = 0;
    for (std::size_t p = 0; p < n; ++p) {
        if (m[0][p] == 0)
            continue;
        IntMat sub;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<std::int64_t> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != p)
                    row.push_back(m[i][j]);
            sub.push_back(row);
        }
        const std::int64_t s = (p % 2 == 0) ? 1 : -1;
        total += s * m[0][p] * laplace_det(sub);
    }
    return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out)
{
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    subsets(n, k, 0, cur, out);
    return out;
}

inline IntMat minor_of(const IntMat& m, const std::vector<std::size_t>& r, const std::vector<std::size_t>& c)
{
    IntMat s;
    for (auto i : r) {
        std::vector<std::int64_t> row;
        for (auto j : c)
            row.push_back(m[i][j]);
        s.push_back(row);
    }
    return s;
}

/// Max |det| over all k x k submatrices, via cofactor expansion.
inline std::int64_t brute_max_minor(const IntMat& m, std::size_t k)
{
    std::int64_t best = 0;
    for (const auto& r : subsets(m.size(), k))
        for (const auto& c : subsets(m[0].size(), k)) {
            std::int64_t d = laplace_det(minor_of(m, r, c));
            best = std::max(best, d < 0 ? -d : d);
        }
    return best;
}

inline IntMat random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound)
{
    std::uniform_int_distribution<int> d(-bound, bound);
    IntMat m(rows, std::vector<std::int64_t>(cols));
    for (auto& row : m)
        for (auto& x : row)
            x = d(rng);
    return m;
}

inline proxlab::Matrix to_matrix(const IntMat& m)
{
    proxlab::Matrix out(m.size(), m.empty() ? 0 : m[0].size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j)
            out(i, j) = proxlab::Rational(static_cast<long>(m[i][j]));
    return out;
}

inline proxlab::Vector vec(std::initializer_list<long> xs)
{
    proxlab::Vector v;
    for (auto x : xs)
        v.push_back(proxlab::Rational(x));
    return v;
}

inline proxlab::Rational q(long p, long d = 1)
{
    proxlab::Rational r(p, d);
    r.canonicalize();
    return r;
}


/// Vertices of {A x <= b} by Cramer's rule over all n-subsets of rows.
inline std::vector<std::vector<proxlab::Rational>> cramer_vertices(const IntMat& A, const std::vector<std::int64_t>& b)
{
    const std::size_t n = A[0].size();
    std::vector<std::vector<proxlab::Rational>> out;
    std::vector<std::size_t> cols(n);
    for (std::size_t j = 0; j < n; ++j)
        cols[j] = j;
    for (const auto& rows : subsets(A.size(), n)) {
        IntMat M = minor_of(A, rows, cols);
        std::int64_t D = laplace_det(M);
        if (D == 0)
            continue;
        std::vector<proxlab::Rational> x(n);
        for (std::size_t j = 0; j < n; ++j) {
            IntMat Mj = M;
            for (std::size_t r = 0; r < n; ++r)
                Mj[r][j] = b[rows[r]];
            x[j] = q(laplace_det(Mj), D);
        }
        bool ok = true;
        for (std::size_t i = 0; i < A.size() && ok; ++i) {
            proxlab::Rational s = 0;
            for (std::size_t j = 0; j < n; ++j)
                s += A[i][j] * x[j];
            ok = s <= b[i];
        }
        if (ok && std::find(out.begin(), out.end(), x) == out.end())
            out.push_back(x);
    }
    return out;
}

/// Integral points of {A x <= b} in [-r, r]^n by scanning.
inline std::vector<std::vector<std::int64_t>> scan_points(const IntMat& A, const std::vector<std::int64_t>& b,
                                                          std::int64_t r)
{
    const std::size_t n = A[0].size();
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> z(n, -r);
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i < A.size() && ok; ++i) {
            std::int64_t s = 0;
            for (std::size_t j = 0; j < n; ++j)
                s += A[i][j] * z[j];
            ok = s <= b[i];
        }
        if (ok)
            out.push_back(z);
        std::size_t j = 0;
        while (j < n && z[j] == r)
            z[j++] = -r;
        if (j == n)
            break;
        ++z[j];
    }
    return out;
}

/// Proximity of max{c x : A x <= b} against optimal integral points inside [-r, r]^n.
inline proxlab::Rational brute_proximity(const IntMat& A, const std::vector<std::int64_t>& b,
                                         const std::vector<std::int64_t>& c, std::int64_t r)
{
    auto vs = cramer_vertices(A, b);
    auto pts = scan_points(A, b, r);
    auto val = [&](const auto& x) {
        proxlab::Rational s = 0;
        for (std::size_t j = 0; j < c.size(); ++j)
            s += c[j] * proxlab::Rational(x[j]);
        return s;
    };
    proxlab::Rational lp = val(vs.front()), ip = val(pts.front());
    for (const auto& v : vs)
        lp = std::max(lp, val(v));
    for (const auto& z : pts)
        ip = std::max(ip, val(z));
    proxlab::Rational worst = 0;
    for (const auto& v : vs) {
        if (val(v) != lp)
            continue;
        proxlab::Rational best = -1;
        for (const auto& z : pts) {
            if (val(z) != ip)
                continue;
            proxlab::Rational d = 0;
            for (std::size_t j = 0; j < v.size(); ++j)
                d = std::max(d, proxlab::Rational(abs(v[j] - z[j])));
            if (best < 0 || d < best)
                best = d;
        }
        worst = std::max(worst, best);
    }
    return worst;
}

/// Delta_I(A, alpha) from its definition, by cofactor expansion.
inline proxlab::Rational brute_delta_I(const IntMat& A, const std::vector<std::int64_t>& alpha,
                                       const std::vector<std::size_t>& I)
{
    const std::size_t n = A[0].size();
    std::int64_t g = 0;
    std::vector<std::size_t> cols(n);
    for (std::size_t j = 0; j < n; ++j)
        cols[j] = j;
    for (const auto& cs : subsets(n, I.size()))
        g = std::gcd(g, laplace_det(minor_of(A, I, cs)));
    if (g < 0)
        g = -g;
    std::int64_t best = 0;
    for (const auto& K : subsets(A.size(), n - 1)) {
        if (!std::includes(K.begin(), K.end(), I.begin(), I.end()))
            continue;
        IntMat M{alpha};
        for (auto k : K)
            M.push_back(A[k]);
        std::int64_t d = laplace_det(M);
        best = std::max(best, d < 0 ? -d : d);
    }
    return q(best, g);
}

/// Integral points of the bounded polytope {A x <= b}; scan radius from its vertices.
inline std::size_t count_points(const IntMat& A, const std::vector<std::int64_t>& b)
{
    proxlab::Rational r = 0;
    for (const auto& v : cramer_vertices(A, b))
        for (const auto& x : v)
            r = std::max(r, proxlab::Rational(abs(x)));
    return scan_points(A, b, proxlab::ceil_of(r).get_si()).size();
}

/// Twice-signed-area formula, absolute value halved.
inline proxlab::Rational shoelace(const std::vector<proxlab::Vector>& cyc)
{
    proxlab::Rational s = 0;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        const auto& a = cyc[i];
        const auto& b = cyc[(i + 1) % cyc.size()];
        s += a[0] * b[1] - a[1] * b[0];
    }
    return abs(s) / 2;
}

} // namespace oracle

#endif
