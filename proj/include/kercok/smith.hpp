#pragma once

#include "kercok/matrix.hpp"

#include <optional>
#include <vector>

namespace kercok {

/// U·M·V = D with U, V invertible over the ring, D diagonal with
/// d_0 | d_1 | ... | d_{rank-1} and zeros after. Uinv = U^{-1}.
template <class R>
struct SmithForm {
    using Scalar = typename R::Scalar;

    R ring;
    Mat<R> U, Uinv, V;
    std::vector<Scalar> diag; ///< the nonzero diagonal entries, canonical associates
    Index rows = 0, cols = 0;

    Index rank() const { return static_cast<Index>(diag.size()); }

    Mat<R> D() const
    {
        Mat<R> d = zeros(ring, rows, cols);
        for (Index i = 0; i < rank(); ++i)
            d(i, i) = diag[static_cast<std::size_t>(i)];
        return d;
    }

    std::vector<Scalar> invariant_factors() const { return diag; }
};

namespace detail {

template <class R>
class SmithReducer {
public:
    using Scalar = typename R::Scalar;

    SmithReducer(const R& ring, const Mat<R>& m)
        : ring_(ring), a_(m), u_(identity(ring, m.rows())), uinv_(identity(ring, m.rows())),
          v_(identity(ring, m.cols()))
    {
    }

    SmithForm<R> run()
    {
        const Index rows = a_.rows(), cols = a_.cols();
        std::vector<Scalar> diag;
        for (Index t = 0; t < std::min(rows, cols); ++t) {
            if (!reduce_step(t))
                break;
            const Scalar unit = ring_.normalizing_unit(a_(t, t));
            if (!(unit == ring_.one()))
                scale_row(t, unit);
            diag.push_back(a_(t, t));
        }
        SmithForm<R> out{ring_, std::move(u_), std::move(uinv_), std::move(v_), std::move(diag), rows, cols};
        return out;
    }

private:
    // Returns false when the active block is zero.
    bool reduce_step(Index t)
    {
        const Index rows = a_.rows(), cols = a_.cols();
        for (;;) {
            Index pr = -1, pc = -1;
            if (!find_pivot(t, pr, pc))
                return false;
            if (pr != t)
                swap_rows(t, pr);
            if (pc != t)
                swap_cols(t, pc);

            bool clean = true;
            for (Index i = t + 1; i < rows; ++i) {
                if (ring_.is_zero(a_(i, t)))
                    continue;
                auto [q, r] = ring_.divmod(a_(i, t), a_(t, t));
                add_row_multiple(i, t, ring_.neg(q));
                if (!ring_.is_zero(r))
                    clean = false;
            }
            for (Index j = t + 1; j < cols; ++j) {
                if (ring_.is_zero(a_(t, j)))
                    continue;
                auto [q, r] = ring_.divmod(a_(t, j), a_(t, t));
                add_col_multiple(j, t, ring_.neg(q));
                if (!ring_.is_zero(r))
                    clean = false;
            }
            if (!clean)
                continue;

            if constexpr (!R::is_field) {
                Index bad_row = -1;
                for (Index i = t + 1; i < rows && bad_row < 0; ++i)
                    for (Index j = t + 1; j < cols; ++j)
                        if (!ring_.is_zero(ring_.divmod(a_(i, j), a_(t, t)).second)) {
                            bad_row = i;
                            break;
                        }
                if (bad_row >= 0) {
                    add_row_multiple(t, bad_row, ring_.one());
                    continue;
                }
            }
            return true;
        }
    }

    // Smallest norm, ties to the lowest (row, col) in row-major order.
    bool find_pivot(Index t, Index& pr, Index& pc) const
    {
        bool found = false;
        decltype(ring_.norm(a_(0, 0))) best{};
        for (Index i = t; i < a_.rows(); ++i)
            for (Index j = t; j < a_.cols(); ++j) {
                if (ring_.is_zero(a_(i, j)))
                    continue;
                auto n = ring_.norm(a_(i, j));
                if (!found || n < best) {
                    found = true;
                    best = n;
                    pr = i;
                    pc = j;
                    if constexpr (R::is_field)
                        return true;
                }
            }
        return found;
    }

    void swap_rows(Index i, Index k)
    {
        a_.row(i).swap(a_.row(k));
        u_.row(i).swap(u_.row(k));
        uinv_.col(i).swap(uinv_.col(k));
    }

    void swap_cols(Index j, Index k)
    {
        a_.col(j).swap(a_.col(k));
        v_.col(j).swap(v_.col(k));
    }

    // row_i += c·row_k  (U' = E·U, Uinv' = Uinv·E^{-1}: col_k -= c·col_i)
    void add_row_multiple(Index i, Index k, const Scalar& c)
    {
        for (Index j = 0; j < a_.cols(); ++j)
            if (!ring_.is_zero(a_(k, j)))
                a_(i, j) = ring_.add(a_(i, j), ring_.mul(c, a_(k, j)));
        for (Index j = 0; j < u_.cols(); ++j)
            if (!ring_.is_zero(u_(k, j)))
                u_(i, j) = ring_.add(u_(i, j), ring_.mul(c, u_(k, j)));
        for (Index r = 0; r < uinv_.rows(); ++r)
            if (!ring_.is_zero(uinv_(r, i)))
                uinv_(r, k) = ring_.sub(uinv_(r, k), ring_.mul(c, uinv_(r, i)));
    }

    // col_j += c·col_k
    void add_col_multiple(Index j, Index k, const Scalar& c)
    {
        for (Index r = 0; r < a_.rows(); ++r)
            if (!ring_.is_zero(a_(r, k)))
                a_(r, j) = ring_.add(a_(r, j), ring_.mul(c, a_(r, k)));
        for (Index r = 0; r < v_.rows(); ++r)
            if (!ring_.is_zero(v_(r, k)))
                v_(r, j) = ring_.add(v_(r, j), ring_.mul(c, v_(r, k)));
    }

    void scale_row(Index t, const Scalar& unit)
    {
        const Scalar inv = ring_.unit_inverse(unit);
        for (Index j = 0; j < a_.cols(); ++j)
            a_(t, j) = ring_.mul(unit, a_(t, j));
        for (Index j = 0; j < u_.cols(); ++j)
            u_(t, j) = ring_.mul(unit, u_(t, j));
        for (Index r = 0; r < uinv_.rows(); ++r)
            uinv_(r, t) = ring_.mul(uinv_(r, t), inv);
    }

    R ring_;
    Mat<R> a_, u_, uinv_, v_;
};

} // namespace detail

/// Smith normal form over any of the Euclidean rings. Deterministic: the pivot
/// is the smallest-norm nonzero entry of the active block, ties broken by the
/// lowest (row, col).
template <class R>
SmithForm<R> smith(const R& ring, const Mat<R>& m)
{
    return detail::SmithReducer<R>(ring, m).run();
}

/// Integer Smith normal form.
inline SmithForm<IntegerRing> smith_normal_form(const Mat<IntegerRing>& m)
{
    return smith(IntegerRing{}, m);
}

template <class R>
Index rank(const R& ring, const Mat<R>& m)
{
    return smith(ring, m).rank();
}

/// Solves m·x = b for each column of b separately using a precomputed form.
template <class R>
std::vector<std::optional<Mat<R>>> solve_each(const SmithForm<R>& snf, const Mat<R>& b)
{
    const R& ring = snf.ring;
    if (b.rows() != snf.rows)
        throw DimensionMismatch("solve: right-hand side has " + std::to_string(b.rows()) +
                                " rows, matrix has " + std::to_string(snf.rows));
    const Index r = snf.rank();
    Mat<R> c = mul(ring, snf.U, b);
    std::vector<std::optional<Mat<R>>> out;
    out.reserve(static_cast<std::size_t>(b.cols()));
    for (Index j = 0; j < b.cols(); ++j) {
        bool ok = true;
        for (Index i = r; i < snf.rows && ok; ++i)
            ok = ring.is_zero(c(i, j));
        Mat<R> y = zeros(ring, r, 1);
        for (Index i = 0; i < r && ok; ++i) {
            auto [q, rem] = ring.divmod(c(i, j), snf.diag[static_cast<std::size_t>(i)]);
            ok = ring.is_zero(rem);
            y(i, 0) = q;
        }
        if (!ok) {
            out.emplace_back(std::nullopt);
            continue;
        }
        out.emplace_back(mul(ring, Mat<R>(snf.V.leftCols(r)), y));
    }
    return out;
}

/// Some x with m·x = b (integral over INT), or nothing. b may have several
/// columns; all must be solvable.
template <class R>
std::optional<Mat<R>> solve(const R& ring, const Mat<R>& m, const Mat<R>& b)
{
    if (b.rows() != m.rows())
        throw DimensionMismatch("solve: right-hand side has " + std::to_string(b.rows()) +
                                " rows, matrix has " + std::to_string(m.rows()));
    auto snf = smith(ring, m);
    auto cols = solve_each(snf, b);
    Mat<R> x = zeros(ring, m.cols(), b.cols());
    for (Index j = 0; j < b.cols(); ++j) {
        if (!cols[static_cast<std::size_t>(j)])
            return std::nullopt;
        x.col(j) = *cols[static_cast<std::size_t>(j)];
    }
    return x;
}

/// Columns form a basis of {x : m·x = 0}; over INT a basis of the full
/// integer kernel lattice.
template <class R>
Mat<R> kernel_basis(const SmithForm<R>& snf)
{
    return snf.V.rightCols(snf.cols - snf.rank());
}

template <class R>
Mat<R> kernel_basis(const R& ring, const Mat<R>& m)
{
    return kernel_basis(smith(ring, m));
}

/// w with l·w = v when v lies in the column span (column lattice over INT).
template <class R>
std::optional<Mat<R>> lattice_membership(const R& ring, const Mat<R>& v, const Mat<R>& l)
{
    if (v.rows() != l.rows())
        throw DimensionMismatch("lattice_membership: vector has " + std::to_string(v.rows()) +
                                " rows, lattice has " + std::to_string(l.rows()));
    return solve(ring, l, v);
}

/// Basis of the column span (column lattice over INT).
template <class R>
Mat<R> column_span_basis(const R& ring, const Mat<R>& m)
{
    auto snf = smith(ring, m);
    const Index r = snf.rank();
    return mul(ring, Mat<R>(snf.Uinv.leftCols(r)), diagonal_matrix(ring, snf.diag));
}

/// Fraction-free determinant (Bareiss).
template <class R>
typename R::Scalar determinant(const R& ring, Mat<R> a)
{
    if (a.rows() != a.cols())
        throw DimensionMismatch("determinant of a non-square matrix");
    const Index n = a.rows();
    typename R::Scalar prev = ring.one();
    bool negate = false;
    for (Index k = 0; k < n; ++k) {
        Index p = k;
        while (p < n && ring.is_zero(a(p, k)))
            ++p;
        if (p == n)
            return ring.zero();
        if (p != k) {
            a.row(p).swap(a.row(k));
            negate = !negate;
        }
        for (Index i = k + 1; i < n; ++i)
            for (Index j = k + 1; j < n; ++j) {
                auto num = ring.sub(ring.mul(a(i, j), a(k, k)), ring.mul(a(i, k), a(k, j)));
                a(i, j) = ring.divmod(num, prev).first;
            }
        prev = a(k, k);
    }
    auto det = n == 0 ? ring.one() : a(n - 1, n - 1);
    return negate ? ring.neg(det) : det;
}

} // namespace kercok
