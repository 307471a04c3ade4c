#pragma once

#include <Eigen/Dense>

#include <cmath>

namespace qnd {

namespace detail {

template <typename MatrixType>
void pade13(const MatrixType& A, MatrixType& U, MatrixType& V) {
    using Real = typename MatrixType::RealScalar;
    static const Real b[] = {64764752532480000., 32382376266240000., 7771770303897600.,
                             1187353796428800.,  129060195264000.,   10559470521600.,
                             670442572800.,      33522128640.,       1323241920.,
                             40840800.,          960960.,            16380.,
                             182.,               1.};
    const MatrixType I = MatrixType::Identity(A.rows(), A.cols());
    const MatrixType A2 = A * A;
    const MatrixType A4 = A2 * A2;
    const MatrixType A6 = A4 * A2;
    MatrixType tmp = A6 * (b[13] * A6 + b[11] * A4 + b[9] * A2);
    tmp += b[7] * A6 + b[5] * A4 + b[3] * A2 + b[1] * I;
    U.noalias() = A * tmp;
    V = A6 * (b[12] * A6 + b[10] * A4 + b[8] * A2);
    V += b[6] * A6 + b[4] * A4 + b[2] * A2 + b[0] * I;
}

}  // namespace detail

/// Dense matrix exponential by scaling-and-squaring with a (13,13) Pade
/// approximant. Intended for the small operator matrices used here; the
/// scaling step keeps ||A/2^s|| within the approximant's radius.
template <typename MatrixType>
MatrixType expm(const MatrixType& A) {
    using Real = typename MatrixType::RealScalar;
    // theta_13 from Higham's backward-error analysis of the (13,13) approximant
    const Real theta13 = Real(5.371920351148152);
    const Real norm = A.cwiseAbs().rowwise().sum().maxCoeff();  // induced inf-norm

    int squarings = 0;
    if (norm > theta13) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / theta13)));
    }
    const MatrixType As = A / Real(1 << squarings);

    MatrixType U(A.rows(), A.cols()), V(A.rows(), A.cols());
    detail::pade13(As, U, V);

    MatrixType num = V + U;
    MatrixType den = V - U;
    MatrixType R = den.partialPivLu().solve(num);
    for (int i = 0; i < squarings; ++i) R = R * R;
    return R;
}

}  // namespace qnd
