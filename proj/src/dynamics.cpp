#include "qnd/dynamics.hpp"

#include "qnd/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qnd {

namespace {

/// Index map applying a_j rho a_j^dag in O(N^2) without forming products:
/// (a rho a^dag)[r,c] = w[r] w[c] rho[up[r], up[c]] for raisable r, c.
struct JumpMap {
    std::vector<int> up;
    std::vector<double> w;
    double gamma = 0.0;
};

JumpMap make_jump(const ModeSpace& space, int mode, double gamma) {
    const int total = space.total_dim();
    const int d = space.dim(mode);
    const int stride = space.stride(mode);
    JumpMap jm;
    jm.gamma = gamma;
    jm.up.assign(static_cast<std::size_t>(total), -1);
    jm.w.assign(static_cast<std::size_t>(total), 0.0);
    for (int i = 0; i < total; ++i) {
        const int n = (i / stride) % d;
        if (n < d - 1) {
            jm.up[static_cast<std::size_t>(i)] = i + stride;
            jm.w[static_cast<std::size_t>(i)] = std::sqrt(static_cast<double>(n + 1));
        }
    }
    return jm;
}

struct Workspace {
    Matrix H;
    Matrix drift;  // -iH - sum_j (gamma_j/2) n_j
    std::vector<JumpMap> jumps;
    Matrix n_probe, n_aux, n_signal, a_probe;
    int total = 0;

    Matrix m, k1, k2, k3, k4, stage;  // step scratch

    explicit Workspace(const InteractionParams& p) {
        const ModeSpace& s = p.space;
        total = s.total_dim();
        H = build_hamiltonian(p);
        drift = Complex(0, -1) * H;
        const double gammas[3] = {p.gamma_probe, p.gamma_aux, p.gamma_signal};
        for (int mode = 0; mode < 3; ++mode) {
            if (gammas[mode] == 0.0) continue;
            Matrix n = embed(number_op(s.dim(mode)), mode, s);
            drift -= (gammas[mode] / 2.0) * n;
            jumps.push_back(make_jump(s, mode, gammas[mode]));
        }
        n_probe = embed(number_op(s.dim(0)), 0, s);
        n_aux = embed(number_op(s.dim(1)), 1, s);
        n_signal = embed(number_op(s.dim(2)), 2, s);
        a_probe = embed(annihilation_op(s.dim(0)), 0, s);
        m.resize(total, total);
        k1.resize(total, total);
        k2.resize(total, total);
        k3.resize(total, total);
        k4.resize(total, total);
        stage.resize(total, total);
    }

    /// RHS for Hermitian rho: drift*rho + (drift*rho)^dag + jump terms.
    void rhs(const Matrix& rho, Matrix& out) {
        m.noalias() = drift * rho;
        out = m;
        out += m.adjoint();
        for (const JumpMap& j : jumps) {
            for (int c = 0; c < total; ++c) {
                const int uc = j.up[static_cast<std::size_t>(c)];
                if (uc < 0) continue;
                const double wc = j.w[static_cast<std::size_t>(c)] * j.gamma;
                for (int r = 0; r < total; ++r) {
                    const int ur = j.up[static_cast<std::size_t>(r)];
                    if (ur < 0) continue;
                    out(r, c) += wc * j.w[static_cast<std::size_t>(r)] * rho(ur, uc);
                }
            }
        }
    }

    void rk4_step(Matrix& rho, double h) {
        rhs(rho, k1);
        stage = rho + (h / 2) * k1;
        rhs(stage, k2);
        stage = rho + (h / 2) * k2;
        rhs(stage, k3);
        stage = rho + h * k3;
        rhs(stage, k4);
        rho += (h / 6) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }

    SampleObservables observe(const Matrix& rho, double z) const {
        SampleObservables o;
        o.z = z;
        o.n_probe = (n_probe * rho).trace().real();
        o.n_aux = (n_aux * rho).trace().real();
        o.n_signal = (n_signal * rho).trace().real();
        o.a_probe = (a_probe * rho).trace();
        o.trace = rho.trace().real();
        o.purity = (rho * rho).trace().real();
        return o;
    }
};

}  // namespace

void InteractionParams::validate() const {
    if (gamma_probe < 0 || gamma_aux < 0 || gamma_signal < 0)
        throw std::invalid_argument("InteractionParams: loss rates must be nonnegative");
    if (space.mode_count() != 3)
        throw std::invalid_argument("InteractionParams: expected the three-mode space");
}

Matrix build_hamiltonian(const InteractionParams& params) {
    params.validate();
    const ModeSpace& s = params.space;
    Matrix ap = embed(annihilation_op(s.dim(0)), 0, s);
    Matrix aa = embed(annihilation_op(s.dim(1)), 1, s);
    Matrix as = embed(annihilation_op(s.dim(2)), 2, s);
    Matrix term = (params.g / 2.0) * (aa * ap.adjoint() * as.adjoint());
    return term + term.adjoint();
}

DensityOperator lindblad_rhs(const DensityOperator& rho, const InteractionParams& params) {
    params.validate();
    if (rho.space != params.space)
        throw std::invalid_argument("lindblad_rhs: state space does not match params.space");
    const ModeSpace& s = params.space;
    Matrix H = build_hamiltonian(params);
    Matrix out = Complex(0, -1) * (H * rho.matrix - rho.matrix * H);
    const double gammas[3] = {params.gamma_probe, params.gamma_aux, params.gamma_signal};
    for (int mode = 0; mode < 3; ++mode) {
        if (gammas[mode] == 0.0) continue;
        Matrix a = embed(annihilation_op(s.dim(mode)), mode, s);
        Matrix n = a.adjoint() * a;
        out += (gammas[mode] / 2.0) *
               (2.0 * a * rho.matrix * a.adjoint() - n * rho.matrix - rho.matrix * n);
    }
    return {std::move(out), s};
}

PropagationResult propagate(const DensityOperator& rho0, const InteractionParams& params,
                            double z_end, std::span<const double> sample_points,
                            const PropagateOptions& opts) {
    params.validate();
    if (rho0.space != params.space)
        throw std::invalid_argument("propagate: state space does not match params.space");
    if (z_end < 0) throw std::invalid_argument("propagate: z_end must be nonnegative");
    if (opts.steps_per_2pi < 1) throw std::invalid_argument("propagate: steps_per_2pi must be >= 1");

    std::vector<double> samples(sample_points.begin(), sample_points.end());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (samples[i] < 0 || samples[i] > z_end)
            throw std::invalid_argument("propagate: sample point outside [0, z_end]");
        if (i > 0 && samples[i] <= samples[i - 1])
            throw std::invalid_argument("propagate: sample points must be strictly increasing");
    }
    if (samples.empty() || samples.front() > 0.0) samples.insert(samples.begin(), 0.0);
    if (samples.back() < z_end) samples.push_back(z_end);

    const double h_target = 2.0 * std::numbers::pi / opts.steps_per_2pi;
    if (z_end > 0 && h_target < 1e-12 * std::max(z_end, 1.0))
        throw NumericalError("propagate: step size underflow (stiffness)");

    Workspace ws(params);
    // the fast RHS assumes Hermitian rho, which RK4 stages preserve
    Matrix rho = 0.5 * (rho0.matrix + rho0.matrix.adjoint());

    PropagationResult result;
    auto record = [&](double z) {
        result.z.push_back(z);
        result.states.push_back({rho, params.space});
        result.observables.push_back(ws.observe(rho, z));
    };
    record(0.0);

    double z_cur = 0.0;
    Matrix probe_full, probe_half;
    long step_index = 0;
    for (std::size_t si = 1; si < samples.size(); ++si) {
        const double seg = samples[si] - z_cur;
        const long n = std::max(1L, static_cast<long>(std::ceil(seg / h_target - 1e-12)));
        const double h = seg / static_cast<double>(n);
        for (long k = 0; k < n; ++k, ++step_index) {
            const bool probe_error = opts.error_probe_stride > 0 &&
                                     step_index % opts.error_probe_stride == 0;
            if (probe_error) probe_full = rho;
            ws.rk4_step(rho, h);
            ++result.step_stats.accepted;
            if (probe_error) {
                probe_half = std::move(probe_full);
                ws.rk4_step(probe_half, h / 2);
                ws.rk4_step(probe_half, h / 2);
                const double err = (rho - probe_half).cwiseAbs().maxCoeff();
                result.step_stats.max_local_error =
                    std::max(result.step_stats.max_local_error, err);
            }
        }
        z_cur = samples[si];
        record(z_cur);
    }
    return result;
}

double probe_overlap(const DensityOperator& rho, Complex alpha) {
    DensityOperator probe = rho.space.mode_count() == 1 ? rho : partial_trace(rho, {0});
    StateVector target = coherent_state(-alpha, probe.space.dim(0));
    return (target.amplitudes.adjoint() * probe.matrix * target.amplitudes)(0, 0).real();
}

}  // namespace qnd
