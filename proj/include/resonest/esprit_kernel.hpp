#ifndef RESONEST_ESPRIT_KERNEL_HPP
#define RESONEST_ESPRIT_KERNEL_HPP

#include "resonest/correlation.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <complex>

namespace resonest {
namespace kernels {

template <typename Scalar>
struct EspritPoles
{
    Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1> poles;
    /// Eigenvalues of the correlation matrix, descending.
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> eigenvalues;
    /// (lambda_n - lambda_{n+1}) / lambda_1; zero for an all-zero input.
    Scalar relative_gap = 0;
};

///
/// Signal poles z_i (x[t] ~ sum_i c_i z_i^t) of a real sequence.
///
/// The dominant `n` eigenvectors of the m x m forward-backward correlation
/// span the signal subspace U. Rows 0..m-2 and 1..m-1 of U are related by
/// U_lo * Phi = U_hi; Phi is solved in the least-squares sense and its
/// eigenvalues are the poles.
///
template <typename Derived>
EspritPoles<typename Derived::Scalar> esprit_poles(const Eigen::MatrixBase<Derived>& x, Eigen::Index m,
                                                   Eigen::Index n)
{
    using Scalar = typename Derived::Scalar;
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

    const Matrix r = forward_backward_correlation(x, m);
    Eigen::SelfAdjointEigenSolver<Matrix> eig(r);

    EspritPoles<Scalar> out;
    out.eigenvalues = eig.eigenvalues().reverse();
    const Scalar largest = out.eigenvalues[0];
    if (!(largest > Scalar(0)))
        return out;
    out.relative_gap = (out.eigenvalues[n - 1] - out.eigenvalues[n]) / largest;

    // Eigenvalues are ascending, so the signal subspace is the last n columns.
    const Matrix subspace = eig.eigenvectors().rightCols(n);
    const Matrix lower = subspace.topRows(m - 1);
    const Matrix upper = subspace.bottomRows(m - 1);
    const Matrix phi = lower.colPivHouseholderQr().solve(upper);

    Eigen::EigenSolver<Matrix> rotation(phi, false);
    out.poles = rotation.eigenvalues();
    return out;
}

} // namespace kernels
} // namespace resonest

#endif // RESONEST_ESPRIT_KERNEL_HPP
