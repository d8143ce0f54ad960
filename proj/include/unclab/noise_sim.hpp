#pragma once

#include <array>
#include <cstdint>

#include "unclab/estimator.hpp"
#include "unclab/linalg.hpp"
#include "unclab/measurement.hpp"
#include "unclab/rng.hpp"

namespace unclab {

// The four prepared states of the three-state method.
enum class PreparedState { psi, a_psi, x_aux, y_aux };

inline constexpr std::array<PreparedState, 4> kPreparedStates = {
    PreparedState::psi, PreparedState::a_psi, PreparedState::x_aux, PreparedState::y_aux};

const char* prepared_label(PreparedState s);  // "+z", "-z", "+x", "+y"
StateVector prepared_vector(PreparedState s);

// Virtual apparatus settings. Defaults follow the modeled instrument:
// 5400 counts per prepared state, 96% analyzer contrast, 1.6° coherent
// misalignment of the detuning and preparation angles.
struct NoiseConfig {
    long long counts_per_state = 5400;
    double contrast = 0.96;
    double misalign_deg = 1.6;
    std::uint64_t seed = 1;
    bool poisson_counts = false;  // per-cell Poisson instead of fixed-total multinomial
};

// Joint distribution of the σ_φ then σ_y successive measurement on an
// ideally prepared state.
JointOutcomeDistribution ideal_probabilities(double phi, PreparedState prepared);

// Analyzer visibility: both binary stages are independently mixed toward
// the uniform outcome, conditional (q, 1−q) → (Cq + (1−C)/2, ...).
JointOutcomeDistribution apply_contrast(const JointOutcomeDistribution& p, double contrast);

// Coherent worst-case angle offset: detuning φ → φ+δ and both Bloch angles
// of the prepared state shifted by δ.
JointOutcomeDistribution apply_misalignment(double phi, double misalign_deg,
                                            PreparedState prepared);

// One multinomial draw of size n over the four cells.
CountTable sample_counts(const JointOutcomeDistribution& p, long long n, RngStream& rng);

// Independent Poisson draws with cell means n·p. Totals fluctuate.
CountTable sample_counts_poisson(const JointOutcomeDistribution& p, long long n, RngStream& rng);

struct ExperimentRun {
    double phi = 0.0;
    NoiseConfig noise;
    StatePreparationSet tables;
    // The distributions the counts were actually drawn from, i.e. after the
    // misalignment and contrast transforms.
    std::array<JointOutcomeDistribution, 4> true_probabilities{};
};

// Full virtual experiment at one detuning setting: for each prepared state,
// ideal → misalignment → contrast → counting noise. phi_index selects the
// per-setting RNG substream so sweep points are order-independent.
ExperimentRun run_experiment(double phi, const NoiseConfig& cfg, std::uint64_t phi_index = 0);

// Noise-free tables whose entries are exact probabilities, optionally with
// misalignment and contrast applied. Used as estimator oracles and for the
// systematic-band re-evaluation.
StatePreparationSet exact_probability_tables(double phi, double misalign_deg = 0.0,
                                             double contrast = 1.0);

}  // namespace unclab
