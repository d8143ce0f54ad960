#pragma once

#include <optional>
#include <vector>

#include "unclab/estimator.hpp"
#include "unclab/linalg.hpp"
#include "unclab/noise_sim.hpp"

namespace unclab {

enum class RecordSource { analytic, simulated };

struct ValueUnc {
    double value = 0.0;
    double unc = 0.0;
};

struct Classification {
    bool heisenberg_satisfied = false;
    bool heisenberg_inconclusive = false;
    bool ozawa_satisfied = false;
    bool ozawa_inconclusive = false;
};

// One detuning setting: error, disturbance, standard deviations, the
// commutator bound, and the three relation terms.
struct ErrorDisturbanceRecord {
    double phi = 0.0;
    EstimateWithUncertainty eps;
    EstimateWithUncertainty eta;
    ValueUnc sigma_a;
    ValueUnc sigma_b;
    double bound = 0.0;
    ValueUnc heis_prod;    // ε·η
    ValueUnc eps_sigma_b;  // ε·σ(B)
    ValueUnc sigma_a_eta;  // σ(A)·η
    ValueUnc ozawa_sum;    // sum of the three
    RecordSource source = RecordSource::analytic;
    Classification cls;
};

struct SweepResult {
    std::vector<ErrorDisturbanceRecord> records;          // ordered by phi
    std::optional<NoiseConfig> config;                    // nullopt = analytic
};

// ½|⟨ψ|[A,B]|ψ⟩|
double commutator_bound(const StateVector& psi, const ComplexMatrix& a, const ComplexMatrix& b);

double heisenberg_product(double eps, double eta);
double ozawa_sum(double eps, double eta, double sigma_a, double sigma_b);

// Closed-form curves of the detuned spin experiment in |+z⟩.
double analytic_error(double phi);        // 2 sin(φ/2)
double analytic_disturbance(double phi);  // √2 cos φ

// Compare the record's products against its bound. Analytic records use a
// 1e-9 tolerance band; simulated records use the propagated 1σ and are
// flagged inconclusive within it.
Classification classify(const ErrorDisturbanceRecord& record);

struct RobertsonCheck {
    double lhs = 0.0;  // σ(A)σ(B)
    double rhs = 0.0;  // ½|⟨[A,B]⟩|
    bool satisfied = false;
};

RobertsonCheck robertson_check(const StateVector& psi, const ComplexMatrix& a,
                               const ComplexMatrix& b);

// Everything the estimation path needs besides the tables themselves.
struct EstimationContext {
    std::uint64_t seed = 1;
    double misalign_deg = 1.6;  // systematic band half-width
    int bootstrap_resamples = 1000;
    EstimatorOptions estimator{};
};

// Assemble a simulated record from one setting's count tables. stream_index
// selects the bootstrap substream; callers processing several settings pass
// the setting's position so results are order-independent.
ErrorDisturbanceRecord estimate_record(double phi, const StatePreparationSet& set,
                                       const EstimationContext& ctx, std::uint64_t stream_index);

// Exact quantum-mechanical evaluation over the grid (no noise, no counts).
SweepResult sweep_analytic(const std::vector<double>& phi_grid);

struct SweepOptions {
    int bootstrap_resamples = 1000;
    EstimatorOptions estimator{};
};

// Virtual experiment + three-state estimation per grid point.
SweepResult sweep_simulated(const std::vector<double>& phi_grid, const NoiseConfig& cfg,
                            const SweepOptions& opts = {});
SweepResult sweep_simulated_serial(const std::vector<double>& phi_grid, const NoiseConfig& cfg,
                                   const SweepOptions& opts = {});

}  // namespace unclab
