#include "unclab/measurement.hpp"

#include <cmath>
#include <stdexcept>

namespace unclab {

namespace {

void require_dim(const MeasurementFamily& fam, const StateVector& psi, const char* what) {
    if (fam.dim() != psi.dim()) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

// Position of an outcome value within a family.
int outcome_index(const MeasurementFamily& fam, double value) {
    for (std::size_t i = 0; i < fam.outcomes.size(); ++i)
        if (fam.outcomes[i].value == value) return static_cast<int>(i);
    throw std::invalid_argument("measurement family has no such outcome value");
}

void require_binary_pm1(const MeasurementFamily& fam, const char* what) {
    if (fam.outcomes.size() != 2)
        throw std::invalid_argument(std::string(what) + ": family must have exactly two outcomes");
    outcome_index(fam, 1.0);
    outcome_index(fam, -1.0);
}

}  // namespace

MeasurementFamily projective_family(const ComplexMatrix& o) {
    if (!is_hermitian(o, 1e-9)) throw std::invalid_argument("projective_family: operator not Hermitian");
    if (max_abs_diff(o * o, identity(o.dim())) > 1e-9)
        throw std::invalid_argument("projective_family: spectrum is not {+1, -1}");
    const ComplexMatrix id = identity(o.dim());
    const Complex half(0.5, 0.0);
    MeasurementFamily fam;
    fam.outcomes.push_back({+1.0, half * (id + o)});
    fam.outcomes.push_back({-1.0, half * (id - o)});
    return fam;
}

bool is_complete(const MeasurementFamily& fam, double tol) {
    if (fam.outcomes.empty()) return false;
    ComplexMatrix acc(fam.dim());
    for (const auto& out : fam.outcomes) acc = acc + dagger(out.op) * out.op;
    return max_abs_diff(acc, identity(fam.dim())) <= tol;
}

bool is_projective(const MeasurementFamily& fam, double tol) {
    if (!is_complete(fam, tol)) return false;
    for (const auto& out : fam.outcomes) {
        if (!is_hermitian(out.op, tol)) return false;
        if (max_abs_diff(out.op * out.op, out.op) > tol) return false;
    }
    return true;
}

ComplexMatrix output_operator(const MeasurementFamily& fam) {
    if (fam.outcomes.empty()) throw std::invalid_argument("output_operator: empty family");
    ComplexMatrix acc(fam.dim());
    for (const auto& out : fam.outcomes) acc = acc + Complex(out.value, 0.0) * out.op;
    return acc;
}

std::vector<std::pair<double, double>> outcome_probabilities(const MeasurementFamily& fam,
                                                             const StateVector& psi) {
    require_dim(fam, psi, "outcome_probabilities");
    std::vector<std::pair<double, double>> probs;
    probs.reserve(fam.outcomes.size());
    for (const auto& out : fam.outcomes) {
        const double nrm = norm(out.op * psi);
        probs.emplace_back(out.value, nrm * nrm);
    }
    return probs;
}

StateVector post_measurement_state(const MeasurementFamily& fam, double value,
                                   const StateVector& psi) {
    require_dim(fam, psi, "post_measurement_state");
    const int idx = outcome_index(fam, value);
    StateVector v = fam.outcomes[static_cast<std::size_t>(idx)].op * psi;
    const double nrm = norm(v);
    if (nrm * nrm <= 1e-24)
        throw std::domain_error("post_measurement_state: zero-probability outcome");
    for (int i = 0; i < v.dim(); ++i) v[i] /= nrm;
    return v;
}

JointOutcomeDistribution successive_distribution(const MeasurementFamily& fam1,
                                                 const MeasurementFamily& fam2,
                                                 const StateVector& psi) {
    require_dim(fam1, psi, "successive_distribution");
    require_dim(fam2, psi, "successive_distribution");
    require_binary_pm1(fam1, "successive_distribution");
    require_binary_pm1(fam2, "successive_distribution");
    JointOutcomeDistribution dist;
    const double values[2] = {+1.0, -1.0};
    for (int i1 = 0; i1 < 2; ++i1) {
        const auto& m1 = fam1.outcomes[static_cast<std::size_t>(outcome_index(fam1, values[i1]))].op;
        const StateVector v1 = m1 * psi;
        for (int i2 = 0; i2 < 2; ++i2) {
            const auto& m2 = fam2.outcomes[static_cast<std::size_t>(outcome_index(fam2, values[i2]))].op;
            const double nrm = norm(m2 * v1);
            dist.p[i1][i2] = nrm * nrm;
        }
    }
    return dist;
}

double rms_error(const MeasurementFamily& fam, const ComplexMatrix& a, const StateVector& psi) {
    require_dim(fam, psi, "rms_error");
    if (fam.dim() != a.dim()) throw std::invalid_argument("rms_error: dimension mismatch");
    double acc = 0.0;
    for (const auto& out : fam.outcomes) {
        const ComplexMatrix deviation = Complex(out.value, 0.0) * identity(a.dim()) - a;
        const double nrm = norm(out.op * (deviation * psi));
        acc += nrm * nrm;
    }
    return std::sqrt(acc);
}

double rms_disturbance(const MeasurementFamily& fam, const ComplexMatrix& b,
                       const StateVector& psi) {
    require_dim(fam, psi, "rms_disturbance");
    if (fam.dim() != b.dim()) throw std::invalid_argument("rms_disturbance: dimension mismatch");
    double acc = 0.0;
    for (const auto& out : fam.outcomes) {
        const double nrm = norm(commutator(out.op, b) * psi);
        acc += nrm * nrm;
    }
    return std::sqrt(acc);
}

std::pair<ComplexMatrix, ComplexMatrix> modified_output_operators(const MeasurementFamily& fam,
                                                                  const ComplexMatrix& b) {
    if (!is_projective(fam)) throw std::invalid_argument("modified_output_operators: family not projective");
    if (fam.dim() != b.dim())
        throw std::invalid_argument("modified_output_operators: dimension mismatch");
    ComplexMatrix ob(fam.dim());
    ComplexMatrix ob2(fam.dim());
    const ComplexMatrix bsq = b * b;
    for (const auto& out : fam.outcomes) {
        ob = ob + out.op * b * out.op;
        ob2 = ob2 + out.op * bsq * out.op;
    }
    return {ob, ob2};
}

void validate(const IndirectModel& model) {
    if (model.system_dim < 1 || model.probe_dim < 1)
        throw std::invalid_argument("IndirectModel: dims must be >= 1");
    if (model.probe_init.dim() != model.probe_dim)
        throw std::invalid_argument("IndirectModel: probe state dimension mismatch");
    if (model.interaction.dim() != model.system_dim * model.probe_dim)
        throw std::invalid_argument("IndirectModel: interaction dimension mismatch");
    if (model.meter.dim() != model.probe_dim)
        throw std::invalid_argument("IndirectModel: meter dimension mismatch");
    if (!is_normalized(model.probe_init))
        throw std::invalid_argument("IndirectModel: probe state not normalized");
    if (!is_unitary(model.interaction))
        throw std::invalid_argument("IndirectModel: interaction not unitary");
    if (!is_hermitian(model.meter, 1e-9))
        throw std::invalid_argument("IndirectModel: meter not Hermitian");
}

double indirect_rms_error(const IndirectModel& model, const ComplexMatrix& a,
                          const StateVector& psi) {
    validate(model);
    if (a.dim() != model.system_dim || psi.dim() != model.system_dim)
        throw std::invalid_argument("indirect_rms_error: dimension mismatch");
    const ComplexMatrix sensed =
        dagger(model.interaction) * tensor(identity(model.system_dim), model.meter) * model.interaction;
    const ComplexMatrix target = tensor(a, identity(model.probe_dim));
    return norm((sensed - target) * tensor(psi, model.probe_init));
}

double indirect_rms_disturbance(const IndirectModel& model, const ComplexMatrix& b,
                                const StateVector& psi) {
    validate(model);
    if (b.dim() != model.system_dim || psi.dim() != model.system_dim)
        throw std::invalid_argument("indirect_rms_disturbance: dimension mismatch");
    const ComplexMatrix before = tensor(b, identity(model.probe_dim));
    const ComplexMatrix after = dagger(model.interaction) * before * model.interaction;
    return norm((after - before) * tensor(psi, model.probe_init));
}

IndirectModel von_neumann_model(const MeasurementFamily& fam) {
    if (!is_projective(fam)) throw std::invalid_argument("von_neumann_model: family not projective");
    const int d = fam.dim();
    const int k = static_cast<int>(fam.outcomes.size());

    IndirectModel model;
    model.system_dim = d;
    model.probe_dim = k;
    model.probe_init = StateVector(k);
    model.probe_init[0] = 1.0;

    // U = Σ_m E_m ⊗ shift_m with shift_m|j⟩ = |j+m mod k⟩.
    model.interaction = ComplexMatrix(d * k);
    for (int m = 0; m < k; ++m) {
        ComplexMatrix shift(k);
        for (int j = 0; j < k; ++j) shift((j + m) % k, j) = 1.0;
        model.interaction = model.interaction + tensor(fam.outcomes[static_cast<std::size_t>(m)].op, shift);
    }

    model.meter = ComplexMatrix(k);
    for (int m = 0; m < k; ++m) model.meter(m, m) = fam.outcomes[static_cast<std::size_t>(m)].value;
    return model;
}

}  // namespace unclab
