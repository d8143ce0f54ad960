#pragma once

#include <cstdint>

#include "unclab/rng.hpp"

namespace unclab {

// Four joint counts of one successive measurement on one prepared state.
// Index 0 is the +1 outcome, index 1 the −1 outcome, first index = first
// apparatus. Entries may be raw counts or normalized intensities.
struct CountTable {
    double c[2][2] = {{0.0, 0.0}, {0.0, 0.0}};

    double total() const { return c[0][0] + c[0][1] + c[1][0] + c[1][1]; }
};

// The sixteen intensities of one detuning setting: count tables for the
// prepared states |+z⟩, |−z⟩, |+x⟩ and |+y⟩.
struct StatePreparationSet {
    CountTable psi;    // |+z⟩
    CountTable a_psi;  // |−z⟩ (serves both A|ψ⟩ and B|ψ⟩, global phase drops)
    CountTable x_aux;  // |+x⟩, (A+I)|ψ⟩ = √2|+x⟩
    CountTable y_aux;  // |+y⟩, (B+I)|ψ⟩ = √2|+y⟩
};

struct EstimateWithUncertainty {
    double value = 0.0;
    double std_uncertainty = 0.0;
    double raw_square = 0.0;  // squared estimate before clamping
    bool clamped = false;
};

struct EstimatorOptions {
    // Squared norm of the auxiliary states (A+I)|ψ⟩ and (B+I)|ψ⟩.
    // Calibration hook for sensitivity studies; 2 for the spin experiment.
    double aux_norm_factor = 2.0;
    // Analyzer visibility; mean values are divided by this before the
    // three-state formulas. 1 disables the correction. Note that with the
    // two-stage mixing noise model the second-apparatus means scale as the
    // square of the visibility, so a single division is only a partial
    // correction for the disturbance path.
    double visibility = 1.0;
};

// Mean of the first-apparatus outcome: ((I++ + I+−) − (I−+ + I−−)) / total.
double mean_oa(const CountTable& table);

// Mean of the second-apparatus outcome: ((I++ + I−+) − (I+− + I−−)) / total.
double mean_ob(const CountTable& table);

// Three-state reconstruction of the rms measurement error:
// ε² = 2 + ⟨O_A⟩_psi + ⟨O_A⟩_a_psi − 2⟨O_A⟩_x_aux.
// The result is clamped into [0, 2]; raw_square keeps the unclamped value.
// Throws if a table is empty or ε² is negative beyond five delta-method
// standard deviations (statistically implausible data).
EstimateWithUncertainty epsilon_from_counts(const StatePreparationSet& set,
                                            const EstimatorOptions& opts = {});

// Same reconstruction for the rms disturbance:
// η² = 2 + ⟨O_B⟩_psi + ⟨O_B⟩_a_psi − 2⟨O_B⟩_y_aux.
EstimateWithUncertainty eta_from_counts(const StatePreparationSet& set,
                                        const EstimatorOptions& opts = {});

// Delta-method standard deviations of the squared estimates, from the
// multinomial variances of the table means. Used for the plausibility
// guard and as an independent scale check on the bootstrap.
double delta_sd_eps_sq(const StatePreparationSet& set, const EstimatorOptions& opts = {});
double delta_sd_eta_sq(const StatePreparationSet& set, const EstimatorOptions& opts = {});

struct UncertaintyOptions {
    int resamples = 1000;
    // Apparatus misalignment half-band in degrees; the systematic term
    // re-evaluates the estimates on exact model tables at ±this angle and
    // takes half the spread. 0 disables the systematic term.
    double misalign_deg = 0.0;
    std::uint64_t seed = 1;
    std::uint64_t stream_index = 0;  // per-setting substream selector
    EstimatorOptions estimator{};
};

struct UncertaintyBreakdown {
    double eps = 0.0;  // statistical ⊕ systematic, in quadrature
    double eta = 0.0;
    double eps_statistical = 0.0;
    double eta_statistical = 0.0;
    double eps_systematic = 0.0;
    double eta_systematic = 0.0;
};

// Standard uncertainties of ε and η: nonparametric bootstrap over
// multinomial resampling of each table, plus the ±misalignment systematic
// band. Tables must hold raw counts. phi is the detuning angle in radians.
UncertaintyBreakdown propagate_uncertainty(const StatePreparationSet& set, double phi,
                                           const UncertaintyOptions& opts = {});

// Single-threaded reference for the bootstrap loop.
UncertaintyBreakdown propagate_uncertainty_serial(const StatePreparationSet& set, double phi,
                                                  const UncertaintyOptions& opts = {});

}  // namespace unclab
