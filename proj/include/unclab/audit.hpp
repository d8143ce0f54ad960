#pragma once

#include <cstdint>
#include <string>

#include "unclab/linalg.hpp"

namespace unclab {

// Randomized checks of the error-disturbance relations. Each draw derives
// its own RNG substream from (seed, domain, index), so the parallel kernels
// and their serial references produce identical results.

struct AuditOptions {
    long long draws = 10000;
    std::uint64_t seed = 1;
    double tol = kAuditTol;  // inequality slack treated as numerical noise
};

struct AuditResult {
    long long draws = 0;
    // Shortfalls of the three-term sum below the commutator bound beyond
    // tol. The relation is a theorem; this should always be zero.
    long long ozawa_violations = 0;
    // Shortfalls of the plain error-disturbance product below the bound.
    // Expected to be nonzero: the product alone is not a valid bound.
    long long heisenberg_violations = 0;
    double min_ozawa_slack = 0.0;
    long long worst_index = -1;
    std::string worst_case;  // parameters of the minimum-slack draw
};

// Projective qubit measurements: random state, random detuning direction
// n·σ, with A = σx and B = σy.
AuditResult projective_audit(const AuditOptions& opts);
AuditResult projective_audit_serial(const AuditOptions& opts);

// Indirect models: random two-qubit unitary, random probe state, random
// Hermitian meter; error and disturbance from the interaction picture.
AuditResult indirect_audit(const AuditOptions& opts);
AuditResult indirect_audit_serial(const AuditOptions& opts);

struct RobertsonAuditResult {
    long long draws = 0;
    long long violations = 0;
    double min_slack = 0.0;
    long long worst_index = -1;
};

// σ(A)σ(B) ≥ ½|⟨[A,B]⟩| over random states and random unit-spectrum
// Hermitian pairs.
RobertsonAuditResult robertson_audit(const AuditOptions& opts);
RobertsonAuditResult robertson_audit_serial(const AuditOptions& opts);

struct ConsistencyAuditResult {
    long long cases = 0;
    double max_eps_diff = 0.0;
    double max_eta_diff = 0.0;
};

// Projective families against their pointer-model embeddings: the two
// formalisms must agree on both error and disturbance.
ConsistencyAuditResult consistency_audit(const AuditOptions& opts);
ConsistencyAuditResult consistency_audit_serial(const AuditOptions& opts);

}  // namespace unclab
