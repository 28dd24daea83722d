#ifndef PROXLAB_EXACTMATH_HPP
#define PROXLAB_EXACTMATH_HPP

/**
 * Exact scalars, vectors and dense matrices over the rationals, plus the
 * determinant / rank / Hermite / minor machinery the rest of the library
 * builds on. Nothing in here rounds: integers and rationals are GMP values,
 * eliminations are fraction-free (Bareiss) wherever a determinant is wanted.
 */

#include "proxlab/error.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace proxlab {

using Integer = mpz_class;
using Rational = mpq_class;
using Vector = std::vector<Rational>;

// ---------------------------------------------------------------------------
// IndexSet
// ---------------------------------------------------------------------------

/// Sorted set of distinct row (or column) indices.
class IndexSet {
public:
    IndexSet() = default;

    IndexSet(std::initializer_list<std::size_t> idx)
        : IndexSet(std::vector<std::size_t>(idx))
    {
    }

    explicit IndexSet(std::vector<std::size_t> idx) : idx_(std::move(idx))
    {
        std::sort(idx_.begin(), idx_.end());
        if (std::adjacent_find(idx_.begin(), idx_.end()) != idx_.end())
            throw Error(ErrorKind::InvalidArgument, "index set contains duplicates");
    }

    static IndexSet range(std::size_t n)
    {
        std::vector<std::size_t> v(n);
        std::iota(v.begin(), v.end(), std::size_t{0});
        return IndexSet(std::move(v));
    }

    std::size_t size() const noexcept { return idx_.size(); }
    bool empty() const noexcept { return idx_.empty(); }
    auto begin() const noexcept { return idx_.begin(); }
    auto end() const noexcept { return idx_.end(); }
    std::size_t operator[](std::size_t i) const { return idx_[i]; }
    const std::vector<std::size_t>& indices() const noexcept { return idx_; }

    bool contains(std::size_t i) const { return std::binary_search(idx_.begin(), idx_.end(), i); }

    /// Throws unless every member is < bound.
    void check_bound(std::size_t bound) const
    {
        if (!idx_.empty() && idx_.back() >= bound)
            throw Error(ErrorKind::Range, "index " + std::to_string(idx_.back()) + " out of range " +
                                              std::to_string(bound));
    }

    IndexSet united(const IndexSet& other) const
    {
        std::vector<std::size_t> out;
        std::set_union(idx_.begin(), idx_.end(), other.idx_.begin(), other.idx_.end(),
                       std::back_inserter(out));
        return IndexSet(std::move(out));
    }

    IndexSet minus(const IndexSet& other) const
    {
        std::vector<std::size_t> out;
        std::set_difference(idx_.begin(), idx_.end(), other.idx_.begin(), other.idx_.end(),
                            std::back_inserter(out));
        return IndexSet(std::move(out));
    }

    IndexSet with(std::size_t i) const
    {
        if (contains(i))
            return *this;
        auto v = idx_;
        v.push_back(i);
        return IndexSet(std::move(v));
    }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;
    friend bool operator<(const IndexSet& a, const IndexSet& b) { return a.idx_ < b.idx_; }

private:
    std::vector<std::size_t> idx_;
};

inline std::string to_string(const IndexSet& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

// ---------------------------------------------------------------------------
// Combinatorics
// ---------------------------------------------------------------------------

inline unsigned long long binomial(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned long long r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        // r * (n - k + i) / i stays integral at every step
        unsigned long long num = n - k + i;
        if (r > ~0ULL / num)
            return ~0ULL;
        r = r * num / i;
    }
    return r;
}

/**
 * Calls visit(const std::vector<std::size_t>&) for every k-subset of
 * {0,...,n-1} in lexicographic order. If visit returns bool, a false return
 * stops the enumeration; the function then returns false.
 */
template <class Visit>
bool for_each_subset(std::size_t n, std::size_t k, Visit&& visit)
{
    if (k > n)
        return true;
    std::vector<std::size_t> c(k);
    std::iota(c.begin(), c.end(), std::size_t{0});
    while (true) {
        if constexpr (std::is_same_v<std::invoke_result_t<Visit&, const std::vector<std::size_t>&>, bool>) {
            if (!visit(static_cast<const std::vector<std::size_t>&>(c)))
                return false;
        } else {
            visit(static_cast<const std::vector<std::size_t>&>(c));
        }
        std::size_t i = k;
        while (i > 0 && c[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return true;
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j)
            c[j] = c[j - 1] + 1;
    }
}

// ---------------------------------------------------------------------------
// Vectors
// ---------------------------------------------------------------------------

inline Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

inline Vector unit_vector(std::size_t n, std::size_t i, int sign = 1)
{
    Vector v = zero_vector(n);
    v.at(i) = sign;
    return v;
}

inline Rational dot(const Vector& a, const Vector& b)
{
    if (a.size() != b.size())
        throw Error(ErrorKind::Dimension, "dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

inline Vector operator+(const Vector& a, const Vector& b)
{
    if (a.size() != b.size())
        throw Error(ErrorKind::Dimension, "vector add: length mismatch");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

inline Vector operator-(const Vector& a, const Vector& b)
{
    if (a.size() != b.size())
        throw Error(ErrorKind::Dimension, "vector sub: length mismatch");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

inline Vector operator-(const Vector& a)
{
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = -a[i];
    return r;
}

inline Vector operator*(const Rational& s, const Vector& a)
{
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = s * a[i];
    return r;
}

inline Rational inf_norm(const Vector& v)
{
    Rational m = 0;
    for (const auto& x : v)
        if (abs(x) > m)
            m = abs(x);
    return m;
}

inline Rational squared_norm(const Vector& v) { return dot(v, v); }

inline bool is_zero(const Vector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

inline bool is_integral(const Rational& x) { return x.get_den() == 1; }

inline bool is_integral(const Vector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_integral(x); });
}

inline Integer floor_of(const Rational& x)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

inline Integer ceil_of(const Rational& x)
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

inline Integer gcd_of(const Integer& a, const Integer& b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer lcm_of(const Integer& a, const Integer& b)
{
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

/**
 * Scales a nonzero rational vector by a positive factor so that it becomes a
 * primitive integer vector (entries coprime). Direction is preserved.
 */
inline Vector primitive_integer(const Vector& v)
{
    Integer l = 1;
    for (const auto& x : v)
        l = lcm_of(l, x.get_den());
    Integer g = 0;
    std::vector<Integer> ints(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = v[i].get_num() * (l / v[i].get_den());
        g = gcd_of(g, ints[i]);
    }
    if (g == 0)
        throw Error(ErrorKind::Undefined, "primitive_integer of zero vector");
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = Rational(ints[i] / g);
    return out;
}

inline std::string to_string(const Rational& x) { return x.get_str(); }

inline std::string to_string(const Vector& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ", ";
        out += v[i].get_str();
    }
    return out + ")";
}

// ---------------------------------------------------------------------------
// Matrix
// ---------------------------------------------------------------------------

class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    Matrix(std::initializer_list<std::initializer_list<Rational>> init)
    {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : init) {
            if (r.size() != cols_)
                throw Error(ErrorKind::Dimension, "ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols_if_empty = 0)
    {
        Matrix m(rows.size(), rows.empty() ? cols_if_empty : rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_)
                throw Error(ErrorKind::Dimension, "ragged row list");
            for (std::size_t j = 0; j < m.cols_; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const
    {
        return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                      data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    Vector column(std::size_t j) const
    {
        Vector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            v[i] = (*this)(i, j);
        return v;
    }

    std::vector<Vector> row_list() const
    {
        std::vector<Vector> out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            out.push_back(row(i));
        return out;
    }

    Matrix select_rows(std::span<const std::size_t> idx) const
    {
        Matrix m(idx.size(), cols_);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                m(i, j) = (*this)(idx[i], j);
        return m;
    }

    Matrix select_rows(const IndexSet& idx) const { return select_rows(std::span<const std::size_t>(idx.indices())); }

    Matrix select_cols(std::span<const std::size_t> idx) const
    {
        Matrix m(rows_, idx.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < idx.size(); ++j)
                m(i, j) = (*this)(i, idx[j]);
        return m;
    }

    Matrix submatrix(std::span<const std::size_t> r, std::span<const std::size_t> c) const
    {
        Matrix m(r.size(), c.size());
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t j = 0; j < c.size(); ++j)
                m(i, j) = (*this)(r[i], c[j]);
        return m;
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    /// Rows of *this followed by rows of below.
    Matrix stacked(const Matrix& below) const
    {
        if (rows_ && below.rows_ && cols_ != below.cols_)
            throw Error(ErrorKind::Dimension, "stacked: column mismatch");
        Matrix m(rows_ + below.rows_, rows_ ? cols_ : below.cols_);
        std::copy(data_.begin(), data_.end(), m.data_.begin());
        std::copy(below.data_.begin(), below.data_.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
        return m;
    }

    bool is_integral() const
    {
        return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.get_den() == 1; });
    }

    bool is_zero() const
    {
        return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
    }

    Rational max_abs_entry() const
    {
        Rational m = 0;
        for (const auto& x : data_)
            if (abs(x) > m)
                m = abs(x);
        return m;
    }

    Matrix operator-() const
    {
        Matrix m = *this;
        for (auto& x : m.data_)
            x = -x;
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw Error(ErrorKind::Dimension, "matrix product: inner dimension mismatch");
        Matrix m(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (sgn(aik) == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    m(i, j) += aik * b(k, j);
            }
        return m;
    }

    friend Vector operator*(const Matrix& a, const Vector& x)
    {
        if (a.cols_ != x.size())
            throw Error(ErrorKind::Dimension, "matrix-vector product: length mismatch");
        Vector y(a.rows_, Rational(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                y[i] += a(i, j) * x[j];
        return y;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

inline std::string to_string(const Matrix& m)
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i)
            os << "; ";
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? " " : "") << m(i, j).get_str();
    }
    os << "]";
    return os.str();
}

/// Row vector a^T stacked on top of M.
inline Matrix stack_row(const Vector& top, const Matrix& rest)
{
    return Matrix::from_rows({top}).stacked(rest);
}

// ---------------------------------------------------------------------------
// Fraction-free elimination kernels
// ---------------------------------------------------------------------------

namespace detail {

/// Dense row-major integer matrix used as scratch space by the eliminations.
struct IntGrid {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Integer> a;

    Integer& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Integer& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    void swap_rows(std::size_t r, std::size_t s)
    {
        for (std::size_t j = 0; j < cols; ++j)
            std::swap(at(r, j), at(s, j));
    }
};

/// Multiplies each row by the lcm of its denominators; row scaling does not
/// change rank and changes the determinant by a known factor.
inline IntGrid integerize(const Matrix& m, Integer* det_scale = nullptr)
{
    IntGrid g{m.rows(), m.cols(), std::vector<Integer>(m.rows() * m.cols())};
    if (det_scale)
        *det_scale = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j).get_den() != 1)
                l = lcm_of(l, m(i, j).get_den());
        for (std::size_t j = 0; j < m.cols(); ++j)
            g.at(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
        if (det_scale)
            *det_scale *= l;
    }
    return g;
}

/**
 * In-place fraction-free (Bareiss) forward elimination to row echelon form.
 * Works on the first `pivot_cols` columns; trailing columns (an augmented
 * right-hand side) are carried along. Returns the pivot columns in order and
 * flips *sign for each row swap.
 */
inline std::vector<std::size_t> bareiss_echelon(IntGrid& g, std::size_t pivot_cols, int* sign = nullptr)
{
    std::vector<std::size_t> pivots;
    Integer prev = 1;
    Integer t;
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_cols && r < g.rows; ++c) {
        std::size_t p = r;
        while (p < g.rows && g.at(p, c) == 0)
            ++p;
        if (p == g.rows)
            continue;
        if (p != r) {
            g.swap_rows(p, r);
            if (sign)
                *sign = -*sign;
        }
        const Integer& piv = g.at(r, c);
        for (std::size_t i = r + 1; i < g.rows; ++i) {
            const Integer lead = g.at(i, c);
            for (std::size_t j = c + 1; j < g.cols; ++j) {
                t = g.at(i, j) * piv;
                t -= lead * g.at(r, j);
                mpz_divexact(g.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            g.at(i, c) = 0;
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline Integer bareiss_det(IntGrid g)
{
    int sign = 1;
    auto piv = bareiss_echelon(g, g.cols, &sign);
    if (piv.size() < g.rows)
        return 0;
    Integer d = g.at(g.rows - 1, g.cols - 1);
    return sign < 0 ? Integer(-d) : d;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Determinant, rank, solve, inverse, kernel
// ---------------------------------------------------------------------------

/// Exact determinant by fraction-free elimination.
inline Rational det(const Matrix& m)
{
    if (!m.is_square())
        throw Error(ErrorKind::Dimension, "det of non-square " + std::to_string(m.rows()) + "x" +
                                              std::to_string(m.cols()) + " matrix");
    if (m.rows() == 0)
        return 1;
    Integer scale;
    auto g = detail::integerize(m, &scale);
    Rational d(detail::bareiss_det(std::move(g)));
    if (scale != 1)
        d /= scale;
    d.canonicalize();
    return d;
}

inline std::size_t rank(const Matrix& m)
{
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    auto g = detail::integerize(m);
    return detail::bareiss_echelon(g, g.cols).size();
}

inline std::size_t rank(const std::vector<Vector>& rows, std::size_t cols)
{
    return rank(Matrix::from_rows(rows, cols));
}

/**
 * Solves the square system M x = rhs. Returns false (leaving x untouched)
 * when M is singular.
 */
inline bool try_solve(const Matrix& m, const Vector& rhs, Vector& x)
{
    if (!m.is_square() || rhs.size() != m.rows())
        throw Error(ErrorKind::Dimension, "solve: shape mismatch");
    const std::size_t n = m.rows();
    detail::IntGrid g{n, n + 1, std::vector<Integer>(n * (n + 1))};
    for (std::size_t i = 0; i < n; ++i) {
        Integer l = rhs[i].get_den();
        for (std::size_t j = 0; j < n; ++j)
            if (m(i, j).get_den() != 1)
                l = lcm_of(l, m(i, j).get_den());
        for (std::size_t j = 0; j < n; ++j)
            g.at(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
        g.at(i, n) = rhs[i].get_num() * (l / rhs[i].get_den());
    }
    auto piv = detail::bareiss_echelon(g, n);
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

inline Vector solve(const Matrix& m, const Vector& rhs)
{
    Vector x;
    if (!try_solve(m, rhs, x))
        throw Error(ErrorKind::Singular, "solve: singular matrix");
    return x;
}

inline Matrix inverse(const Matrix& m)
{
    if (!m.is_square())
        throw Error(ErrorKind::Dimension, "inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        auto col = solve(m, unit_vector(n, j));
        for (std::size_t i = 0; i < n; ++i)
            inv(i, j) = col[i];
    }
    return inv;
}

/// Basis of the right kernel {x : M x = 0}, via reduced row echelon form.
inline std::vector<Vector> kernel_basis(const Matrix& m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    Matrix r = m;
    std::vector<std::size_t> pivot_col;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        std::size_t p = pr;
        while (p < rows && sgn(r(p, c)) == 0)
            ++p;
        if (p == rows)
            continue;
        for (std::size_t j = 0; j < cols; ++j)
            std::swap(r(p, j), r(pr, j));
        Rational inv = 1 / r(pr, c);
        for (std::size_t j = 0; j < cols; ++j)
            r(pr, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pr || sgn(r(i, c)) == 0)
                continue;
            Rational f = r(i, c);
            for (std::size_t j = 0; j < cols; ++j)
                r(i, j) -= f * r(pr, j);
        }
        pivot_col.push_back(c);
        ++pr;
    }
    std::vector<Vector> basis;
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col)
        is_pivot[c] = true;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        Vector v = zero_vector(cols);
        v[free] = 1;
        for (std::size_t k = 0; k < pivot_col.size(); ++k)
            v[pivot_col[k]] = -r(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/**
 * Greedily selects rows (in the given order) that are linearly independent of
 * those already selected. Returns the selected row indices.
 */
inline std::vector<std::size_t> independent_subset(const Matrix& m, std::span<const std::size_t> candidates,
                                                   std::span<const std::size_t> seed = {})
{
    std::vector<std::size_t> chosen(seed.begin(), seed.end());
    std::size_t r = chosen.empty() ? 0 : rank(m.select_rows(chosen));
    if (r != chosen.size())
        throw Error(ErrorKind::Singular, "independent_subset: seed rows are dependent");
    for (auto c : candidates) {
        if (std::find(chosen.begin(), chosen.end(), c) != chosen.end())
            continue;
        chosen.push_back(c);
        if (rank(m.select_rows(chosen)) == chosen.size())
            ++r;
        else
            chosen.pop_back();
        if (r == m.cols())
            break;
    }
    return chosen;
}

// ---------------------------------------------------------------------------
// Minors
// ---------------------------------------------------------------------------

/**
 * Delta_k(M): the largest absolute value of a k x k minor, by exhaustive
 * enumeration of row and column subsets. Delta_0 is 1 by convention.
 */
inline Rational max_abs_minor(const Matrix& m, std::size_t k, const Limits& limits = {})
{
    if (k == 0)
        return 1;
    if (k > std::min(m.rows(), m.cols()))
        throw Error(ErrorKind::Range, "max_abs_minor: k=" + std::to_string(k) + " exceeds min(rows, cols)");
    if (binomial(m.rows(), k) > limits.max_subsets / std::max<unsigned long long>(1, binomial(m.cols(), k)))
        throw Error(ErrorKind::Resource, "max_abs_minor: subset cap exceeded");
    Rational best = 0;
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& r) {
        Matrix rows = m.select_rows(r);
        for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& c) {
            Rational d = abs(det(rows.select_cols(c)));
            if (d > best)
                best = d;
        });
    });
    return best;
}

/// gcd of the absolute values of all rank(M) x rank(M) minors.
inline Rational gcd_minors(const Matrix& m)
{
    if (!m.is_integral())
        throw Error(ErrorKind::InvalidArgument, "gcd_minors: matrix must be integral");
    const std::size_t r = rank(m);
    if (r == 0)
        throw Error(ErrorKind::Undefined, "gcd_minors of a zero matrix");
    Integer g = 0;
    for_each_subset(m.rows(), r, [&](const std::vector<std::size_t>& rows) {
        Matrix sub = m.select_rows(rows);
        return for_each_subset(m.cols(), r, [&](const std::vector<std::size_t>& cols) {
            g = gcd_of(g, det(sub.select_cols(cols)).get_num());
            return g != 1;
        });
    });
    return Rational(g);
}

// ---------------------------------------------------------------------------
// Hermite form by unimodular column operations
// ---------------------------------------------------------------------------

struct HermiteResult {
    Matrix U; ///< unimodular, n x n
    Matrix H; ///< M * U: lower triangular leading r x r block, zeros to the right
};

/**
 * Column-style Hermite normal form of a full-row-rank integral r x n matrix:
 * M U = [L 0] with L lower triangular, positive diagonal, and entries left of
 * the diagonal reduced into [0, L_ii).
 */
inline HermiteResult hermite_unimodular(const Matrix& m)
{
    if (!m.is_integral())
        throw Error(ErrorKind::InvalidArgument, "hermite_unimodular: matrix must be integral");
    const std::size_t r = m.rows(), n = m.cols();
    if (rank(m) != r)
        throw Error(ErrorKind::Singular, "hermite_unimodular: matrix is not of full row rank");

    std::vector<Integer> h(r * n), u(n * n, Integer(0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h[i * n + j] = m(i, j).get_num();
    for (std::size_t i = 0; i < n; ++i)
        u[i * n + i] = 1;

    auto H = [&](std::size_t i, std::size_t j) -> Integer& { return h[i * n + j]; };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        if (a == b)
            return;
        for (std::size_t i = 0; i < r; ++i)
            std::swap(h[i * n + a], h[i * n + b]);
        for (std::size_t i = 0; i < n; ++i)
            std::swap(u[i * n + a], u[i * n + b]);
    };
    // col_dst -= q * col_src
    auto col_axpy = [&](std::size_t dst, std::size_t src, const Integer& q) {
        if (q == 0)
            return;
        for (std::size_t i = 0; i < r; ++i)
            h[i * n + dst] -= q * h[i * n + src];
        for (std::size_t i = 0; i < n; ++i)
            u[i * n + dst] -= q * u[i * n + src];
    };
    auto col_negate = [&](std::size_t c) {
        for (std::size_t i = 0; i < r; ++i)
            h[i * n + c] = -h[i * n + c];
        for (std::size_t i = 0; i < n; ++i)
            u[i * n + c] = -u[i * n + c];
    };

    for (std::size_t i = 0; i < r; ++i) {
        while (true) {
            std::size_t best = n;
            for (std::size_t j = i; j < n; ++j)
                if (H(i, j) != 0 && (best == n || abs(H(i, j)) < abs(H(i, best))))
                    best = j;
            col_swap(i, best);
            bool done = true;
            for (std::size_t j = i + 1; j < n; ++j) {
                if (H(i, j) == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), H(i, j).get_mpz_t(), H(i, i).get_mpz_t());
                col_axpy(j, i, q);
                if (H(i, j) != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (H(i, i) < 0)
            col_negate(i);
        for (std::size_t j = 0; j < i; ++j) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), H(i, j).get_mpz_t(), H(i, i).get_mpz_t());
            col_axpy(j, i, q);
        }
    }

    HermiteResult out{Matrix(n, n), Matrix(r, n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.U(i, j) = Rational(u[i * n + j]);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.H(i, j) = Rational(h[i * n + j]);
    return out;
}

// ---------------------------------------------------------------------------
// Total unimodularity (exhaustive; desk scale only)
// ---------------------------------------------------------------------------

inline bool is_totally_unimodular(const Matrix& m)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& x = m(i, j);
            if (!(x == 0 || x == 1 || x == -1))
                return false;
        }
    const std::size_t kmax = std::min(m.rows(), m.cols());
    for (std::size_t k = 2; k <= kmax; ++k) {
        bool ok = for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& r) {
            Matrix rows = m.select_rows(r);
            return for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& c) {
                Rational d = det(rows.select_cols(c));
                return d == 0 || d == 1 || d == -1;
            });
        });
        if (!ok)
            return false;
    }
    return true;
}

} // namespace proxlab

#endif
