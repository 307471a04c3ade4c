#pragma once

#include "qnd/types.hpp"

#include <span>
#include <utility>

namespace qnd {

/// <n-1|a|n> = sqrt(n) annihilation operator on a single truncated mode.
Matrix annihilation_op(int dim);
Matrix creation_op(int dim);
Matrix number_op(int dim);

struct LadderOps {
    Matrix annihilation;
    Matrix creation;
};
LadderOps ladder_ops(int dim);

/// Tensor-embed a single-mode operator at `mode_index`, identity elsewhere.
Matrix embed(const Matrix& op, int mode_index, const ModeSpace& space);

/// Poisson tail weight sum_{n>=dim} e^{-|a|^2} |a|^{2n}/n! of a truncated
/// coherent state.
double coherent_tail(double abs_alpha_sq, int dim);

/// Smallest truncation dimension whose coherent tail is below eps.
int coherent_dim_for_tail(double abs_alpha_sq, double eps);

/// Truncated coherent state c_n = e^{-|a|^2/2} a^n / sqrt(n!). Throws if the
/// recorded tail weight is not below eps_trunc, naming the required dim.
StateVector coherent_state(Complex alpha, int dim, double eps_trunc = 1e-10);

StateVector fock_state(int n, int dim);

/// Kronecker product of pure states, left factor slowest.
StateVector tensor(const StateVector& a, const StateVector& b);
StateVector tensor(const StateVector& a, const StateVector& b, const StateVector& c);

/// Single-mode displacement D(alpha) = exp(alpha a^dag - alpha^* a),
/// evaluated as a matrix exponential of the truncated generator.
Matrix displacement_op(Complex alpha, int dim);

/// Trace out all modes not in `keep` (indices into rho.space, strictly
/// increasing). The result keeps the surviving modes in their original order.
DensityOperator partial_trace(const DensityOperator& rho, std::span<const int> keep);
DensityOperator partial_trace(const DensityOperator& rho, std::initializer_list<int> keep);

/// Population of the top `levels` Fock levels of a single-mode state; used to
/// detect displacement pushing weight into the truncation edge.
double fock_edge_weight(const DensityOperator& rho_single_mode, int levels = 2);

}  // namespace qnd
