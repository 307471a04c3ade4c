#pragma once

#include <Eigen/Dense>

#include <complex>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qnd {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Thrown when a run configuration is malformed (CLI exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a numerical tolerance is breached mid-run (CLI exit code 3).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Tensor-product space of truncated bosonic modes. The full three-mode
/// space is ordered (probe, auxiliary, signal); reduced spaces produced by
/// partial traces keep that relative order. Index 0 is the slowest tensor
/// factor (leftmost in the Kronecker product).
class ModeSpace {
public:
    explicit ModeSpace(std::vector<int> dims) : dims_(std::move(dims)) {
        if (dims_.empty())
            throw std::invalid_argument("ModeSpace: no modes");
        for (int d : dims_)
            if (d < 2)
                throw std::invalid_argument("ModeSpace: every mode dimension must be >= 2, got " +
                                            std::to_string(d));
    }

    ModeSpace(std::initializer_list<int> dims) : ModeSpace(std::vector<int>(dims)) {}

    static ModeSpace three_mode(int probe_dim, int aux_dim, int signal_dim) {
        return ModeSpace({probe_dim, aux_dim, signal_dim});
    }

    int mode_count() const { return static_cast<int>(dims_.size()); }
    int dim(int mode) const { return dims_.at(static_cast<std::size_t>(mode)); }
    const std::vector<int>& dims() const { return dims_; }

    int total_dim() const {
        return std::accumulate(dims_.begin(), dims_.end(), 1, std::multiplies<int>());
    }

    /// Stride of a mode in the flattened index (row-major over modes).
    int stride(int mode) const {
        int s = 1;
        for (int m = mode + 1; m < mode_count(); ++m) s *= dims_[static_cast<std::size_t>(m)];
        return s;
    }

    bool operator==(const ModeSpace& other) const { return dims_ == other.dims_; }
    bool operator!=(const ModeSpace& other) const { return !(*this == other); }

private:
    std::vector<int> dims_;
};

/// Pure state on a ModeSpace. `trunc_tail` records the weight lost to the
/// Fock truncation at construction so downstream tolerances can be audited.
struct StateVector {
    Vector amplitudes;
    ModeSpace space;
    double trunc_tail = 0.0;
};

/// Mixed state on a ModeSpace (dense, Hermitian, trace ~ 1).
struct DensityOperator {
    Matrix matrix;
    ModeSpace space;
};

inline DensityOperator to_density(const StateVector& psi) {
    return {psi.amplitudes * psi.amplitudes.adjoint(), psi.space};
}

inline double hermiticity_error(const Matrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

inline double trace_real(const DensityOperator& rho) { return rho.matrix.trace().real(); }

inline double purity(const DensityOperator& rho) {
    return (rho.matrix * rho.matrix).trace().real();
}

/// Expectation value of a (Hermitian) operator in a mixed state.
inline double expectation(const DensityOperator& rho, const Matrix& op) {
    return (op * rho.matrix).trace().real();
}

inline Complex expectation_complex(const DensityOperator& rho, const Matrix& op) {
    return (op * rho.matrix).trace();
}

}  // namespace qnd
