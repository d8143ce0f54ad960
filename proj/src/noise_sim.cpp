#include "unclab/noise_sim.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace unclab {

namespace {

constexpr double kPi = std::numbers::pi;

// Bloch angles (polar, azimuthal) of the ideal preparations.
void bloch_angles(PreparedState s, double& theta, double& azimuth) {
    switch (s) {
        case PreparedState::psi:
            theta = 0.0;
            azimuth = 0.0;
            break;
        case PreparedState::a_psi:
            theta = kPi;
            azimuth = 0.0;
            break;
        case PreparedState::x_aux:
            theta = kPi / 2.0;
            azimuth = 0.0;
            break;
        case PreparedState::y_aux:
            theta = kPi / 2.0;
            azimuth = kPi / 2.0;
            break;
    }
}

JointOutcomeDistribution successive_at(double phi, double theta, double azimuth) {
    const MeasurementFamily m1 = projective_family(sigma_phi(phi));
    const MeasurementFamily m2 = projective_family(pauli('y'));
    return successive_distribution(m1, m2, bloch_state(theta, azimuth));
}

}  // namespace

const char* prepared_label(PreparedState s) {
    switch (s) {
        case PreparedState::psi:
            return "+z";
        case PreparedState::a_psi:
            return "-z";
        case PreparedState::x_aux:
            return "+x";
        case PreparedState::y_aux:
            return "+y";
    }
    return "?";
}

StateVector prepared_vector(PreparedState s) {
    double theta = 0.0, azimuth = 0.0;
    bloch_angles(s, theta, azimuth);
    return bloch_state(theta, azimuth);
}

JointOutcomeDistribution ideal_probabilities(double phi, PreparedState prepared) {
    double theta = 0.0, azimuth = 0.0;
    bloch_angles(prepared, theta, azimuth);
    return successive_at(phi, theta, azimuth);
}

JointOutcomeDistribution apply_contrast(const JointOutcomeDistribution& p, double contrast) {
    if (!(contrast > 0.0) || contrast > 1.0)
        throw std::invalid_argument("apply_contrast: contrast must be in (0, 1]");
    if (contrast == 1.0) return p;
    JointOutcomeDistribution out;
    for (int i1 = 0; i1 < 2; ++i1) {
        const double m1 = p.marginal1(i1);
        const double m1_mixed = contrast * m1 + (1.0 - contrast) / 2.0;
        for (int i2 = 0; i2 < 2; ++i2) {
            const double q = m1 > 0.0 ? p.p[i1][i2] / m1 : 0.5;
            const double q_mixed = contrast * q + (1.0 - contrast) / 2.0;
            out.p[i1][i2] = m1_mixed * q_mixed;
        }
    }
    return out;
}

JointOutcomeDistribution apply_misalignment(double phi, double misalign_deg,
                                            PreparedState prepared) {
    const double delta = misalign_deg * kPi / 180.0;
    double theta = 0.0, azimuth = 0.0;
    bloch_angles(prepared, theta, azimuth);
    return successive_at(phi + delta, theta + delta, azimuth + delta);
}

CountTable sample_counts(const JointOutcomeDistribution& p, long long n, RngStream& rng) {
    if (n < 1) throw std::invalid_argument("sample_counts: n must be >= 1");
    const double probs[4] = {p.p[0][0], p.p[0][1], p.p[1][0], p.p[1][1]};
    long long counts[4] = {0, 0, 0, 0};
    long long remaining = n;
    double mass = probs[0] + probs[1] + probs[2] + probs[3];
    for (int cell = 0; cell < 3 && remaining > 0; ++cell) {
        if (mass <= 0.0) break;
        const double q = std::min(1.0, std::max(0.0, probs[cell] / mass));
        if (q >= 1.0) {
            counts[cell] = remaining;
            remaining = 0;
        } else if (q > 0.0) {
            std::binomial_distribution<long long> bin(remaining, q);
            counts[cell] = bin(rng);
            remaining -= counts[cell];
        }
        mass -= probs[cell];
    }
    counts[3] = remaining;
    CountTable table;
    table.c[0][0] = static_cast<double>(counts[0]);
    table.c[0][1] = static_cast<double>(counts[1]);
    table.c[1][0] = static_cast<double>(counts[2]);
    table.c[1][1] = static_cast<double>(counts[3]);
    return table;
}

CountTable sample_counts_poisson(const JointOutcomeDistribution& p, long long n, RngStream& rng) {
    if (n < 1) throw std::invalid_argument("sample_counts_poisson: n must be >= 1");
    CountTable table;
    for (int i1 = 0; i1 < 2; ++i1)
        for (int i2 = 0; i2 < 2; ++i2) {
            const double mean = static_cast<double>(n) * p.p[i1][i2];
            if (mean > 0.0) {
                std::poisson_distribution<long long> poi(mean);
                table.c[i1][i2] = static_cast<double>(poi(rng));
            }
        }
    return table;
}

ExperimentRun run_experiment(double phi, const NoiseConfig& cfg, std::uint64_t phi_index) {
    if (cfg.counts_per_state < 1)
        throw std::invalid_argument("run_experiment: counts_per_state must be >= 1");
    ExperimentRun run;
    run.phi = phi;
    run.noise = cfg;
    CountTable* tables[4] = {&run.tables.psi, &run.tables.a_psi, &run.tables.x_aux,
                             &run.tables.y_aux};
    for (std::size_t s = 0; s < kPreparedStates.size(); ++s) {
        JointOutcomeDistribution dist = apply_misalignment(phi, cfg.misalign_deg, kPreparedStates[s]);
        dist = apply_contrast(dist, cfg.contrast);
        run.true_probabilities[s] = dist;
        RngStream rng = derive_stream(cfg.seed, StreamDomain::experiment, phi_index * 4 + s);
        *tables[s] = cfg.poisson_counts ? sample_counts_poisson(dist, cfg.counts_per_state, rng)
                                        : sample_counts(dist, cfg.counts_per_state, rng);
    }
    return run;
}

StatePreparationSet exact_probability_tables(double phi, double misalign_deg, double contrast) {
    StatePreparationSet set;
    CountTable* tables[4] = {&set.psi, &set.a_psi, &set.x_aux, &set.y_aux};
    for (std::size_t s = 0; s < kPreparedStates.size(); ++s) {
        JointOutcomeDistribution dist = apply_misalignment(phi, misalign_deg, kPreparedStates[s]);
        dist = apply_contrast(dist, contrast);
        for (int i1 = 0; i1 < 2; ++i1)
            for (int i2 = 0; i2 < 2; ++i2) tables[s]->c[i1][i2] = dist.p[i1][i2];
    }
    return set;
}

}  // namespace unclab
