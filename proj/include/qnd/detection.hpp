#pragma once

#include "qnd/types.hpp"

namespace qnd {

/// Displacement stage model. The ideal mode applies the exact D(-alpha_p);
/// finite_eta models the highly reflective beam splitter fed with the strong
/// coherent field |-xi alpha_p>, xi = 1/sqrt(1-eta), which is equivalent to a
/// transmissivity-eta loss channel on the probe followed by the exact
/// displacement. Excluded from the headline numbers; provided as a realism
/// knob.
struct BeamSplitterModel {
    enum class Mode { ideal_displacement, finite_eta };
    Mode mode = Mode::ideal_displacement;
    double eta = 1.0;

    double xi() const;
    void validate() const;
};

/// Figures of merit at one probe amplitude, single-photon signal branch.
struct DetectionReport {
    double alpha_p = 0.0;
    double p_click = 0.0;
    double p_err_numeric = 0.0;
    double p_err_analytic = 0.0;
    double signal_fidelity = 0.0;
    int cascade_n = 1;
    double cascade_p_err = 0.0;
    int cascade_n_analytic = 1;
    /// Population the displacement pushed into the top two Fock levels of the
    /// probe; above ~1e-6 the truncation is suspect.
    double displaced_edge_weight = 0.0;
};

/// D(-alpha) rho D(-alpha)^dag on the probe mode. A three-mode input is
/// reduced to the probe first.
DensityOperator displaced_state(const DensityOperator& rho_t, Complex alpha);

/// Pure-loss channel of transmissivity eta on a single-mode state.
DensityOperator loss_channel(const DensityOperator& rho, double eta);

/// Detection stage under the chosen beam-splitter model.
DensityOperator detected_state(const DensityOperator& rho_t, Complex alpha_p,
                               const BeamSplitterModel& bs = {});

/// e^{-4 alpha_p^2}: vacuum weight of |-2 alpha_p> (alpha_p real).
double p_err_analytic(double alpha_p);

/// Vacuum projection of the displaced reduced probe,
/// Tr[|0><0| D(-alpha_p) rho_p D(alpha_p)].
double p_err_numeric(const DensityOperator& rho_t, Complex alpha_p);

/// <1_s| Tr_{p,a}[rho] |1_s>: survival of the signal photon.
double signal_fidelity(const DensityOperator& rho);

/// Click probability 1 - <0_p|rho_D|0_p> of an already-displaced probe state.
double click_probability(const DensityOperator& rho_displaced);

/// Smallest N with p_err^N < threshold.
int cascade_count(double p_err, double threshold = 0.05);

/// Full detection analysis of an end-of-medium three-mode state.
DetectionReport analyze_detection(const DensityOperator& rho, double alpha_p,
                                  double cascade_threshold = 0.05,
                                  const BeamSplitterModel& bs = {});

double efficiency_ratio(const DetectionReport& report);
double cascade_efficiency_ratio(const DetectionReport& report);

}  // namespace qnd
