#pragma once

#include <utility>
#include <vector>

#include "unclab/linalg.hpp"

namespace unclab {

// A family {M_m} of measurement operators with real outcome values m.
// Outcome m occurs with probability ‖M_m ψ‖² and updates the state to
// M_m ψ / ‖M_m ψ‖. Valid families satisfy Σ M_m†M_m = I.
struct MeasurementFamily {
    struct Outcome {
        double value;
        ComplexMatrix op;
    };
    std::vector<Outcome> outcomes;

    int dim() const { return outcomes.empty() ? 0 : outcomes.front().op.dim(); }
};

// {(+1, (I+O)/2), (−1, (I−O)/2)} for Hermitian O with O² = I.
MeasurementFamily projective_family(const ComplexMatrix& o);

bool is_complete(const MeasurementFamily& fam, double tol = kNormTol);
bool is_projective(const MeasurementFamily& fam, double tol = 1e-9);

// O = Σ m·M_m, the observable effectively read out by the family.
ComplexMatrix output_operator(const MeasurementFamily& fam);

// (value, probability) pairs in family order.
std::vector<std::pair<double, double>> outcome_probabilities(const MeasurementFamily& fam,
                                                             const StateVector& psi);

// Normalized M_m ψ / ‖M_m ψ‖. Throws on a zero-probability outcome.
StateVector post_measurement_state(const MeasurementFamily& fam, double value,
                                   const StateVector& psi);

// Joint outcomes of two successive binary ±1 measurements. Index 0 is the
// +1 outcome, index 1 the −1 outcome, for both stages.
struct JointOutcomeDistribution {
    double p[2][2] = {{0.0, 0.0}, {0.0, 0.0}};

    double sum() const { return p[0][0] + p[0][1] + p[1][0] + p[1][1]; }
    double marginal1(int i1) const { return p[i1][0] + p[i1][1]; }
    double marginal2(int i2) const { return p[0][i2] + p[1][i2]; }
};

// p(m1, m2) = ‖M2_{m2} M1_{m1} ψ‖² for binary ±1 families.
JointOutcomeDistribution successive_distribution(const MeasurementFamily& fam1,
                                                 const MeasurementFamily& fam2,
                                                 const StateVector& psi);

// rms error of the family as a measurement of A: ε² = Σ_m ‖M_m(m − A)ψ‖².
// For projective families this equals ‖(O_A − A)ψ‖.
double rms_error(const MeasurementFamily& fam, const ComplexMatrix& a, const StateVector& psi);

// rms disturbance inflicted on B: η² = Σ_m ‖[M_m, B]ψ‖².
// For a binary projective family this reduces to η² = ½‖[O, B]ψ‖².
double rms_disturbance(const MeasurementFamily& fam, const ComplexMatrix& b,
                       const StateVector& psi);

// (Σ_x E_x B E_x, Σ_x E_x B² E_x): the effective mean and second-moment
// operators of B as seen through the family's back-action. Projective only.
std::pair<ComplexMatrix, ComplexMatrix> modified_output_operators(const MeasurementFamily& fam,
                                                                  const ComplexMatrix& b);

// Indirect model: unitary system⊗probe interaction U followed by reading a
// meter observable on the probe. System is the slow tensor index.
struct IndirectModel {
    int system_dim = 0;
    int probe_dim = 0;
    StateVector probe_init;     // |ξ⟩, normalized
    ComplexMatrix interaction;  // U on system⊗probe, unitary
    ComplexMatrix meter;        // M on probe, Hermitian
};

void validate(const IndirectModel& model);

// ε = ‖[U†(I⊗M)U − A⊗I] ψ⊗ξ‖
double indirect_rms_error(const IndirectModel& model, const ComplexMatrix& a,
                          const StateVector& psi);

// η = ‖[U†(B⊗I)U − B⊗I] ψ⊗ξ‖
double indirect_rms_disturbance(const IndirectModel& model, const ComplexMatrix& b,
                                const StateVector& psi);

// Pointer-shift embedding of a projective family: probe dimension = number
// of outcomes, U = Σ_m E_m ⊗ shift_m, meter = Σ_m m|m⟩⟨m|, probe in |0⟩.
// Reproduces the family's rms error and disturbance exactly.
IndirectModel von_neumann_model(const MeasurementFamily& fam);

}  // namespace unclab
