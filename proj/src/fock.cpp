#include "qnd/fock.hpp"

#include "qnd/expm.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qnd {

Matrix annihilation_op(int dim) {
    if (dim < 2) throw std::invalid_argument("annihilation_op: dim must be >= 2");
    Matrix a = Matrix::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

Matrix creation_op(int dim) { return annihilation_op(dim).adjoint(); }

Matrix number_op(int dim) {
    if (dim < 2) throw std::invalid_argument("number_op: dim must be >= 2");
    Matrix n = Matrix::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) n(k, k) = static_cast<double>(k);
    return n;
}

LadderOps ladder_ops(int dim) {
    Matrix a = annihilation_op(dim);
    return {a, a.adjoint()};
}

Matrix embed(const Matrix& op, int mode_index, const ModeSpace& space) {
    if (mode_index < 0 || mode_index >= space.mode_count())
        throw std::invalid_argument("embed: mode index out of range");
    if (op.rows() != op.cols() || op.rows() != space.dim(mode_index))
        throw std::invalid_argument("embed: operator dimension " + std::to_string(op.rows()) +
                                    " does not match mode dimension " +
                                    std::to_string(space.dim(mode_index)));

    const int total = space.total_dim();
    const int d = space.dim(mode_index);
    const int stride = space.stride(mode_index);
    const int outer = total / (d * stride);  // product of dims left of the mode

    Matrix out = Matrix::Zero(total, total);
    for (int o = 0; o < outer; ++o) {
        const int base = o * d * stride;
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) {
                const Complex v = op(r, c);
                if (v == Complex(0, 0)) continue;
                for (int s = 0; s < stride; ++s)
                    out(base + r * stride + s, base + c * stride + s) = v;
            }
    }
    return out;
}

double coherent_tail(double abs_alpha_sq, int dim) {
    // cumulative Poisson mass below dim, summed in long double
    long double term = std::exp(-static_cast<long double>(abs_alpha_sq));
    long double cum = term;
    for (int n = 1; n < dim; ++n) {
        term *= static_cast<long double>(abs_alpha_sq) / n;
        cum += term;
    }
    long double tail = 1.0L - cum;
    return tail > 0 ? static_cast<double>(tail) : 0.0;
}

int coherent_dim_for_tail(double abs_alpha_sq, double eps) {
    for (int dim = 2; dim < 4096; ++dim)
        if (coherent_tail(abs_alpha_sq, dim) < eps) return dim;
    throw std::invalid_argument("coherent_dim_for_tail: no dimension below 4096 reaches eps");
}

StateVector coherent_state(Complex alpha, int dim, double eps_trunc) {
    if (dim < 2) throw std::invalid_argument("coherent_state: dim must be >= 2");
    const double a2 = std::norm(alpha);
    const double tail = coherent_tail(a2, dim);
    if (tail >= eps_trunc)
        throw std::invalid_argument(
            "coherent_state: truncation too small, tail " + std::to_string(tail) + " >= " +
            std::to_string(eps_trunc) + "; |alpha|^2 = " + std::to_string(a2) + " needs dim >= " +
            std::to_string(coherent_dim_for_tail(a2, eps_trunc)));

    Vector c(dim);
    c(0) = std::exp(-a2 / 2.0);
    for (int n = 1; n < dim; ++n) c(n) = c(n - 1) * alpha / std::sqrt(static_cast<double>(n));
    return {std::move(c), ModeSpace({dim}), tail};
}

StateVector fock_state(int n, int dim) {
    if (dim < 2) throw std::invalid_argument("fock_state: dim must be >= 2");
    if (n < 0 || n >= dim) throw std::invalid_argument("fock_state: level out of range");
    Vector c = Vector::Zero(dim);
    c(n) = 1.0;
    return {std::move(c), ModeSpace({dim}), 0.0};
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    std::vector<int> dims = a.space.dims();
    dims.insert(dims.end(), b.space.dims().begin(), b.space.dims().end());
    Vector out(a.amplitudes.size() * b.amplitudes.size());
    for (Eigen::Index i = 0; i < a.amplitudes.size(); ++i)
        out.segment(i * b.amplitudes.size(), b.amplitudes.size()) = a.amplitudes(i) * b.amplitudes;
    // tails add to first order (cross terms are higher order in the tails)
    return {std::move(out), ModeSpace(dims), a.trunc_tail + b.trunc_tail};
}

StateVector tensor(const StateVector& a, const StateVector& b, const StateVector& c) {
    return tensor(tensor(a, b), c);
}

Matrix displacement_op(Complex alpha, int dim) {
    if (dim < 2) throw std::invalid_argument("displacement_op: dim must be >= 2");
    Matrix gen = alpha * creation_op(dim) - std::conj(alpha) * annihilation_op(dim);
    return expm(gen);
}

DensityOperator partial_trace(const DensityOperator& rho, std::span<const int> keep) {
    const ModeSpace& space = rho.space;
    if (keep.empty()) throw std::invalid_argument("partial_trace: keep set must be nonempty");
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= space.mode_count())
            throw std::invalid_argument("partial_trace: mode index out of range");
        if (i > 0 && keep[i] <= keep[i - 1])
            throw std::invalid_argument("partial_trace: keep indices must be strictly increasing");
    }
    if (rho.matrix.rows() != space.total_dim())
        throw std::invalid_argument("partial_trace: matrix does not match space");

    std::vector<int> kept(keep.begin(), keep.end());
    std::vector<int> traced;
    for (int m = 0; m < space.mode_count(); ++m)
        if (std::find(kept.begin(), kept.end(), m) == kept.end()) traced.push_back(m);

    std::vector<int> kept_dims;
    for (int m : kept) kept_dims.push_back(space.dim(m));
    ModeSpace out_space(kept_dims);
    const int dout = out_space.total_dim();

    int dtr = 1;
    for (int m : traced) dtr *= space.dim(m);

    // flat index = sum over kept modes (out index digits) + traced modes digits
    auto full_index = [&](int out_idx, int tr_idx) {
        int idx = 0;
        int o = out_idx;
        for (int i = static_cast<int>(kept.size()) - 1; i >= 0; --i) {
            const int d = space.dim(kept[static_cast<std::size_t>(i)]);
            idx += (o % d) * space.stride(kept[static_cast<std::size_t>(i)]);
            o /= d;
        }
        int t = tr_idx;
        for (int i = static_cast<int>(traced.size()) - 1; i >= 0; --i) {
            const int d = space.dim(traced[static_cast<std::size_t>(i)]);
            idx += (t % d) * space.stride(traced[static_cast<std::size_t>(i)]);
            t /= d;
        }
        return idx;
    };

    Matrix out = Matrix::Zero(dout, dout);
    for (int r = 0; r < dout; ++r)
        for (int c = 0; c < dout; ++c) {
            Complex sum = 0;
            for (int t = 0; t < dtr; ++t) sum += rho.matrix(full_index(r, t), full_index(c, t));
            out(r, c) = sum;
        }
    return {std::move(out), out_space};
}

DensityOperator partial_trace(const DensityOperator& rho, std::initializer_list<int> keep) {
    std::vector<int> k(keep);
    return partial_trace(rho, std::span<const int>(k));
}

double fock_edge_weight(const DensityOperator& rho_single_mode, int levels) {
    if (rho_single_mode.space.mode_count() != 1)
        throw std::invalid_argument("fock_edge_weight: expected a single-mode state");
    const int dim = rho_single_mode.space.dim(0);
    double w = 0.0;
    for (int n = std::max(0, dim - levels); n < dim; ++n)
        w += rho_single_mode.matrix(n, n).real();
    return w;
}

}  // namespace qnd
