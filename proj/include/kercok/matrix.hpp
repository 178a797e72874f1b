#pragma once

#include "kercok/ring.hpp"

#include <Eigen/Core>

#include <string>
#include <vector>

namespace kercok {

template <class S>
using MatrixX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <class R>
using Mat = MatrixX<typename R::Scalar>;

using Index = Eigen::Index;

template <class R>
Mat<R> zeros(const R& ring, Index rows, Index cols)
{
    return Mat<R>::Constant(rows, cols, ring.zero());
}

template <class R>
Mat<R> identity(const R& ring, Index n)
{
    Mat<R> m = zeros(ring, n, n);
    for (Index i = 0; i < n; ++i)
        m(i, i) = ring.one();
    return m;
}

template <class R>
Mat<R> reduced(const R& ring, Mat<R> m)
{
    if constexpr (std::is_same_v<R, PrimeField>)
        for (Index i = 0; i < m.size(); ++i)
            m.data()[i] = ring.reduce(m.data()[i]);
    return m;
}

/// Converts a small-integer matrix into the ring.
template <class R>
Mat<R> from_ints(const R& ring, Index rows, Index cols, std::initializer_list<long long> values)
{
    if (static_cast<Index>(values.size()) != rows * cols)
        throw DimensionMismatch("from_ints: expected " + std::to_string(rows * cols) + " entries");
    Mat<R> m(rows, cols);
    auto it = values.begin();
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j)
            m(i, j) = ring.from_int(*it++);
    return m;
}

template <class R>
void require_product_dims(const Mat<R>& a, const Mat<R>& b, const char* what)
{
    if (a.cols() != b.rows())
        throw DimensionMismatch(std::string(what) + ": " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " times " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
}

/// Ring product. FP entries stay below 2^16, so int64 accumulation of the
/// inner products cannot overflow for any realistic inner dimension.
template <class R>
Mat<R> mul(const R& ring, const Mat<R>& a, const Mat<R>& b)
{
    require_product_dims<R>(a, b, "mul");
    if (a.rows() == 0 || b.cols() == 0)
        return zeros(ring, a.rows(), b.cols());
    if (a.cols() == 0)
        return zeros(ring, a.rows(), b.cols());
    Mat<R> c = zeros(ring, a.rows(), b.cols());
    for (Index j = 0; j < b.cols(); ++j)
        for (Index k = 0; k < a.cols(); ++k) {
            const auto& bk = b(k, j);
            if (ring.is_zero(bk))
                continue;
            for (Index i = 0; i < a.rows(); ++i)
                if (!ring.is_zero(a(i, k)))
                    c(i, j) += a(i, k) * bk;
        }
    return reduced(ring, std::move(c));
}

template <class R>
Mat<R> add(const R& ring, const Mat<R>& a, const Mat<R>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("add: shape mismatch");
    return reduced(ring, Mat<R>(a + b));
}

template <class R>
Mat<R> sub(const R& ring, const Mat<R>& a, const Mat<R>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("sub: shape mismatch");
    return reduced(ring, Mat<R>(a - b));
}

template <class R>
Mat<R> neg(const R& ring, const Mat<R>& a)
{
    return reduced(ring, Mat<R>(-a));
}

template <class R>
Mat<R> scaled(const R& ring, const typename R::Scalar& s, const Mat<R>& a)
{
    Mat<R> out = a;
    for (Index i = 0; i < out.size(); ++i)
        out.data()[i] = ring.mul(s, out.data()[i]);
    return out;
}

template <class R>
bool is_zero(const R& ring, const Mat<R>& a)
{
    for (Index i = 0; i < a.size(); ++i)
        if (!ring.is_zero(a.data()[i]))
            return false;
    return true;
}

template <class R>
Mat<R> hstack(const R& ring, const Mat<R>& a, const Mat<R>& b)
{
    if (a.rows() != b.rows())
        throw DimensionMismatch("hstack: row counts differ");
    Mat<R> out = zeros(ring, a.rows(), a.cols() + b.cols());
    out.leftCols(a.cols()) = a;
    out.rightCols(b.cols()) = b;
    return out;
}

template <class R>
Mat<R> vstack(const R& ring, const Mat<R>& a, const Mat<R>& b)
{
    if (a.cols() != b.cols())
        throw DimensionMismatch("vstack: column counts differ");
    Mat<R> out = zeros(ring, a.rows() + b.rows(), a.cols());
    out.topRows(a.rows()) = a;
    out.bottomRows(b.rows()) = b;
    return out;
}

template <class R>
Mat<R> block_diag(const R& ring, const Mat<R>& a, const Mat<R>& b)
{
    Mat<R> out = zeros(ring, a.rows() + b.rows(), a.cols() + b.cols());
    out.topLeftCorner(a.rows(), a.cols()) = a;
    out.bottomRightCorner(b.rows(), b.cols()) = b;
    return out;
}

/// Kronecker product a ⊗ b.
template <class R>
Mat<R> kron(const R& ring, const Mat<R>& a, const Mat<R>& b)
{
    Mat<R> out = zeros(ring, a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            if (!ring.is_zero(a(i, j)))
                out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = scaled(ring, a(i, j), b);
    return out;
}

/// Column-major vectorization.
template <class R>
Mat<R> vec(const Mat<R>& a)
{
    Mat<R> out(a.size(), 1);
    for (Index j = 0; j < a.cols(); ++j)
        for (Index i = 0; i < a.rows(); ++i)
            out(j * a.rows() + i, 0) = a(i, j);
    return out;
}

template <class R>
Mat<R> unvec(const Mat<R>& v, Index rows, Index cols)
{
    Mat<R> out(rows, cols);
    for (Index j = 0; j < cols; ++j)
        for (Index i = 0; i < rows; ++i)
            out(i, j) = v(j * rows + i, 0);
    return out;
}

template <class R>
Mat<R> diagonal_matrix(const R& ring, const std::vector<typename R::Scalar>& d)
{
    Index n = static_cast<Index>(d.size());
    Mat<R> m = zeros(ring, n, n);
    for (Index i = 0; i < n; ++i)
        m(i, i) = d[static_cast<std::size_t>(i)];
    return m;
}

template <class R>
Mat<R> select_rows(const Mat<R>& m, const std::vector<Index>& rows)
{
    Mat<R> out(static_cast<Index>(rows.size()), m.cols());
    for (std::size_t i = 0; i < rows.size(); ++i)
        out.row(static_cast<Index>(i)) = m.row(rows[i]);
    return out;
}

template <class R>
Mat<R> select_cols(const Mat<R>& m, const std::vector<Index>& cols)
{
    Mat<R> out(m.rows(), static_cast<Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        out.col(static_cast<Index>(j)) = m.col(cols[j]);
    return out;
}

template <class R>
std::vector<std::vector<std::string>> to_strings(const Mat<R>& m)
{
    std::vector<std::vector<std::string>> out(static_cast<std::size_t>(m.rows()));
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            out[static_cast<std::size_t>(i)].push_back(scalar_to_string(m(i, j)));
    return out;
}

} // namespace kercok
