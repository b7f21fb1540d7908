#ifndef RESONEST_CORRELATION_HPP
#define RESONEST_CORRELATION_HPP

#include <Eigen/Core>

namespace resonest {
namespace kernels {

/// Exchange-transpose J * A^T * J of a square matrix.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
exchange_transpose(const Eigen::MatrixBase<Derived>& a)
{
    return a.transpose().reverse();
}

///
/// Forward-backward averaged sample correlation of order `m`.
///
/// With x_n = (x[n], ..., x[n+m-1]) for every full window n, the forward
/// estimate is R = (1/K) sum_n x_n x_n^T, K = size - m + 1. The result is
///
///   R_fb = (R + J R^T J) / 2,
///
/// symmetric and persymmetric to the last bit for real data.
///
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
forward_backward_correlation(const Eigen::MatrixBase<Derived>& x, Eigen::Index m)
{
    using Scalar = typename Derived::Scalar;
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

    const Eigen::Index windows = x.size() - m + 1;
    Matrix data(windows, m);
    for (Eigen::Index j = 0; j < m; ++j)
        data.col(j) = x.segment(j, windows);

    Matrix forward = Matrix::Zero(m, m);
    forward.template selfadjointView<Eigen::Lower>().rankUpdate(data.adjoint(), Scalar(1) / Scalar(windows));
    forward.template triangularView<Eigen::StrictlyUpper>() = forward.adjoint();

    return (forward + exchange_transpose(forward)) / Scalar(2);
}

} // namespace kernels
} // namespace resonest

#endif // RESONEST_CORRELATION_HPP
