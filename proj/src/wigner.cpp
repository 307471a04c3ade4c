#include "qnd/wigner.hpp"

#include "qnd/fock.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qnd {

namespace {

void check_single_mode(const DensityOperator& rho) {
    if (rho.space.mode_count() != 1)
        throw std::invalid_argument(
            "wigner: state has more than one mode; reduce with partial_trace first");
    if (rho.matrix.rows() != rho.space.total_dim())
        throw std::invalid_argument("wigner: matrix does not match space");
}

/// Fock dimension large enough that displacing the input by up to
/// `abs_alpha_max` keeps the displaced support's tail below 1e-9.
int padded_dim(int dim_in, double abs_alpha_max) {
    const double reach = abs_alpha_max + std::sqrt(static_cast<double>(dim_in));
    const int needed = coherent_dim_for_tail(reach * reach, 1e-9);
    return std::max(dim_in, needed);
}

Matrix pad_state(const Matrix& rho, int dim) {
    Matrix out = Matrix::Zero(dim, dim);
    out.topLeftCorner(rho.rows(), rho.cols()) = rho;
    return out;
}

}  // namespace

PhaseSpaceGrid PhaseSpaceGrid::uniform(double min, double max, int n) {
    if (n < 2 || !(max > min))
        throw std::invalid_argument("PhaseSpaceGrid: need n >= 2 and max > min");
    RealVector v = RealVector::LinSpaced(n, min, max);
    return {v, v};
}

void PhaseSpaceGrid::validate() const {
    for (const RealVector* axis : {&x, &p}) {
        if (axis->size() < 2) throw std::invalid_argument("PhaseSpaceGrid: axis too short");
        const double step = (*axis)(1) - (*axis)(0);
        if (!(step > 0)) throw std::invalid_argument("PhaseSpaceGrid: axis must be increasing");
        for (Eigen::Index i = 1; i < axis->size(); ++i) {
            const double d = (*axis)(i) - (*axis)(i - 1);
            if (std::abs(d - step) > 1e-9 * std::max(1.0, std::abs(step)))
                throw std::invalid_argument("PhaseSpaceGrid: axis spacing must be uniform");
        }
    }
}

double WignerMap::riemann_sum() const {
    const double dx = grid.x(1) - grid.x(0);
    const double dp = grid.p(1) - grid.p(0);
    return values.sum() * dx * dp;
}

WignerMap wigner(const DensityOperator& rho_single_mode, const PhaseSpaceGrid& grid) {
    check_single_mode(rho_single_mode);
    grid.validate();

    const double ax_max = std::max(std::abs(grid.x(0)), std::abs(grid.x(grid.x.size() - 1)));
    const double ap_max = std::max(std::abs(grid.p(0)), std::abs(grid.p(grid.p.size() - 1)));
    const double alpha_max = std::hypot(ax_max, ap_max) / std::numbers::sqrt2;
    const int dim = padded_dim(rho_single_mode.space.dim(0), alpha_max);

    const Matrix rho = pad_state(rho_single_mode.matrix, dim);

    // D(-alpha) = phase * D(-i p/sqrt2) D(-x/sqrt2); phases cancel under the
    // conjugation inside the parity trace, so the two factors are cached
    // per axis instead of exponentiating per grid point.
    std::vector<Matrix> dx_ops(static_cast<std::size_t>(grid.x.size()));
    for (Eigen::Index i = 0; i < grid.x.size(); ++i)
        dx_ops[static_cast<std::size_t>(i)] =
            displacement_op(Complex(-grid.x(i) / std::numbers::sqrt2, 0.0), dim);
    std::vector<Matrix> dp_ops(static_cast<std::size_t>(grid.p.size()));
    for (Eigen::Index j = 0; j < grid.p.size(); ++j)
        dp_ops[static_cast<std::size_t>(j)] =
            displacement_op(Complex(0.0, -grid.p(j) / std::numbers::sqrt2), dim);

    RealVector parity(dim);
    for (int n = 0; n < dim; ++n) parity(n) = (n % 2 == 0) ? 1.0 : -1.0;

    WignerMap map{grid, RealMatrix(grid.x.size(), grid.p.size())};
    Matrix rho_x(dim, dim), b(dim, dim);
    for (Eigen::Index i = 0; i < grid.x.size(); ++i) {
        const Matrix& dxo = dx_ops[static_cast<std::size_t>(i)];
        rho_x.noalias() = dxo * rho * dxo.adjoint();
        for (Eigen::Index j = 0; j < grid.p.size(); ++j) {
            const Matrix& dpo = dp_ops[static_cast<std::size_t>(j)];
            b.noalias() = dpo * rho_x;
            // sum_n parity(n) * (b * dpo^dag)(n, n) without the second product
            double w = 0.0;
            for (int n = 0; n < dim; ++n)
                w += parity(n) * (b.row(n) * dpo.row(n).adjoint())(0, 0).real();
            map.values(i, j) = w / std::numbers::pi;
        }
    }
    return map;
}

double wigner_point(const DensityOperator& rho_single_mode, double x, double p) {
    check_single_mode(rho_single_mode);
    const double alpha_abs = std::hypot(x, p) / std::numbers::sqrt2;
    const int dim = padded_dim(rho_single_mode.space.dim(0), alpha_abs);
    const Matrix rho = pad_state(rho_single_mode.matrix, dim);
    const Complex alpha(x / std::numbers::sqrt2, p / std::numbers::sqrt2);
    const Matrix d = displacement_op(-alpha, dim);
    const Matrix rd = d * rho * d.adjoint();
    double w = 0.0;
    for (int n = 0; n < dim; ++n) w += ((n % 2 == 0) ? 1.0 : -1.0) * rd(n, n).real();
    return w / std::numbers::pi;
}

}  // namespace qnd
