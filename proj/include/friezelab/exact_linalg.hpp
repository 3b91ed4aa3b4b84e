#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

namespace friezelab {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Reduced row echelon form over an exact field (no pivoting by magnitude;
/// the first nonzero entry in a column is taken). Returns the pivot columns.
template <typename Scalar>
std::vector<Eigen::Index> rref_in_place(DenseMatrix<Scalar>& a) {
    std::vector<Eigen::Index> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
        Eigen::Index pivot = row;
        while (pivot < a.rows() && a(pivot, col) == Scalar(0)) ++pivot;
        if (pivot == a.rows()) continue;
        a.row(pivot).swap(a.row(row));
        const Scalar inv = Scalar(1) / a(row, col);
        for (Eigen::Index j = col; j < a.cols(); ++j) a(row, j) *= inv;
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col) == Scalar(0)) continue;
            const Scalar f = a(i, col);
            for (Eigen::Index j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
    DenseMatrix<typename Derived::Scalar> a = m;
    return static_cast<Eigen::Index>(rref_in_place(a).size());
}

/// Basis (as columns) of the right kernel {v : m v = 0}.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> exact_kernel(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    DenseMatrix<Scalar> a = m;
    const auto pivots = rref_in_place(a);
    std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
    for (auto c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

    DenseMatrix<Scalar> basis = DenseMatrix<Scalar>::Zero(a.cols(), a.cols() - static_cast<Eigen::Index>(pivots.size()));
    Eigen::Index k = 0;
    for (Eigen::Index free = 0; free < a.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        basis(free, k) = Scalar(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            basis(pivots[r], k) = -a(static_cast<Eigen::Index>(r), free);
        }
        ++k;
    }
    return basis;
}

/// Rows spanning the left kernel {y : y m = 0}. Used as a quotient map onto
/// coker(m): its kernel is exactly the column space of m.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> exact_left_kernel(const Eigen::MatrixBase<Derived>& m) {
    return exact_kernel(m.transpose()).transpose();
}

}  // namespace friezelab
