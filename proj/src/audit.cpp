#include "unclab/audit.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <stdexcept>
#include <vector>

#include "unclab/measurement.hpp"
#include "unclab/relation.hpp"
#include "unclab/rng.hpp"
#include "unclab/sampling.hpp"

namespace unclab {

namespace {

void require_draws(const AuditOptions& opts) {
    if (opts.draws < 1) throw std::invalid_argument("audit: draws must be >= 1");
}

struct DrawOutcome {
    double eps = 0.0;
    double eta = 0.0;
    double sigma_a = 0.0;
    double sigma_b = 0.0;
    double bound = 0.0;

    double ozawa_slack() const { return eps * eta + eps * sigma_b + sigma_a * eta - bound; }
    double heisenberg_slack() const { return eps * eta - bound; }
};

DrawOutcome projective_draw(std::uint64_t seed, std::uint64_t index) {
    RngStream rng = derive_stream(seed, StreamDomain::projective_audit, index);
    const StateVector psi = random_qubit_state(rng);
    const auto n = random_unit_bloch(rng);
    const MeasurementFamily fam = projective_family(pauli_vector(n[0], n[1], n[2]));
    const ComplexMatrix a = pauli('x');
    const ComplexMatrix b = pauli('y');
    DrawOutcome out;
    out.eps = rms_error(fam, a, psi);
    out.eta = rms_disturbance(fam, b, psi);
    out.sigma_a = std_dev(psi, a);
    out.sigma_b = std_dev(psi, b);
    out.bound = commutator_bound(psi, a, b);
    return out;
}

DrawOutcome indirect_draw(std::uint64_t seed, std::uint64_t index) {
    RngStream rng = derive_stream(seed, StreamDomain::indirect_audit, index);
    IndirectModel model;
    model.system_dim = 2;
    model.probe_dim = 2;
    model.interaction = random_unitary(4, rng);
    model.probe_init = random_qubit_state(rng);
    model.meter = random_hermitian_unit_spectrum(2, rng);
    const StateVector psi = random_qubit_state(rng);
    const ComplexMatrix a = pauli('x');
    const ComplexMatrix b = pauli('y');
    DrawOutcome out;
    out.eps = indirect_rms_error(model, a, psi);
    out.eta = indirect_rms_disturbance(model, b, psi);
    out.sigma_a = std_dev(psi, a);
    out.sigma_b = std_dev(psi, b);
    out.bound = commutator_bound(psi, a, b);
    return out;
}

std::string describe_worst(const char* kind, long long index, const DrawOutcome& d) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "%s draw %lld: eps=%.6g eta=%.6g sigma_a=%.6g sigma_b=%.6g bound=%.6g slack=%.6g",
                  kind, index, d.eps, d.eta, d.sigma_a, d.sigma_b, d.bound, d.ozawa_slack());
    return buf;
}

using DrawFn = DrawOutcome (*)(std::uint64_t, std::uint64_t);

AuditResult relation_audit_impl(const AuditOptions& opts, DrawFn draw, const char* kind,
                                bool parallel) {
    require_draws(opts);
    AuditResult result;
    result.draws = opts.draws;
    result.min_ozawa_slack = std::numeric_limits<double>::infinity();

    if (parallel) {
        const long long n = opts.draws;
        std::vector<double> slack(static_cast<std::size_t>(n));
        std::vector<unsigned char> heis(static_cast<std::size_t>(n));
        std::exception_ptr err = nullptr;
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < n; ++i) {
            try {
                const DrawOutcome d = draw(opts.seed, static_cast<std::uint64_t>(i));
                slack[static_cast<std::size_t>(i)] = d.ozawa_slack();
                heis[static_cast<std::size_t>(i)] = d.heisenberg_slack() < -opts.tol ? 1 : 0;
            } catch (...) {
#pragma omp critical
                if (err == nullptr) err = std::current_exception();
            }
        }
        if (err != nullptr) std::rethrow_exception(err);
        for (long long i = 0; i < n; ++i) {
            const double s = slack[static_cast<std::size_t>(i)];
            if (s < -opts.tol) ++result.ozawa_violations;
            result.heisenberg_violations += heis[static_cast<std::size_t>(i)];
            if (s < result.min_ozawa_slack) {
                result.min_ozawa_slack = s;
                result.worst_index = i;
            }
        }
    } else {
        for (long long i = 0; i < opts.draws; ++i) {
            const DrawOutcome d = draw(opts.seed, static_cast<std::uint64_t>(i));
            const double s = d.ozawa_slack();
            if (s < -opts.tol) ++result.ozawa_violations;
            if (d.heisenberg_slack() < -opts.tol) ++result.heisenberg_violations;
            if (s < result.min_ozawa_slack) {
                result.min_ozawa_slack = s;
                result.worst_index = i;
            }
        }
    }

    result.worst_case =
        describe_worst(kind, result.worst_index, draw(opts.seed, static_cast<std::uint64_t>(result.worst_index)));
    return result;
}

}  // namespace

AuditResult projective_audit(const AuditOptions& opts) {
    return relation_audit_impl(opts, projective_draw, "projective", true);
}

AuditResult projective_audit_serial(const AuditOptions& opts) {
    return relation_audit_impl(opts, projective_draw, "projective", false);
}

AuditResult indirect_audit(const AuditOptions& opts) {
    return relation_audit_impl(opts, indirect_draw, "indirect", true);
}

AuditResult indirect_audit_serial(const AuditOptions& opts) {
    return relation_audit_impl(opts, indirect_draw, "indirect", false);
}

namespace {

double robertson_slack(std::uint64_t seed, std::uint64_t index) {
    RngStream rng = derive_stream(seed, StreamDomain::robertson_audit, index);
    const StateVector psi = random_qubit_state(rng);
    const ComplexMatrix a = random_hermitian_unit_spectrum(2, rng);
    const ComplexMatrix b = random_hermitian_unit_spectrum(2, rng);
    const RobertsonCheck check = robertson_check(psi, a, b);
    return check.lhs - check.rhs;
}

RobertsonAuditResult robertson_impl(const AuditOptions& opts, bool parallel) {
    require_draws(opts);
    RobertsonAuditResult result;
    result.draws = opts.draws;
    result.min_slack = std::numeric_limits<double>::infinity();

    if (parallel) {
        const long long n = opts.draws;
        std::vector<double> slack(static_cast<std::size_t>(n));
        std::exception_ptr err = nullptr;
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < n; ++i) {
            try {
                slack[static_cast<std::size_t>(i)] = robertson_slack(opts.seed, static_cast<std::uint64_t>(i));
            } catch (...) {
#pragma omp critical
                if (err == nullptr) err = std::current_exception();
            }
        }
        if (err != nullptr) std::rethrow_exception(err);
        for (long long i = 0; i < n; ++i) {
            const double s = slack[static_cast<std::size_t>(i)];
            if (s < -opts.tol) ++result.violations;
            if (s < result.min_slack) {
                result.min_slack = s;
                result.worst_index = i;
            }
        }
    } else {
        for (long long i = 0; i < opts.draws; ++i) {
            const double s = robertson_slack(opts.seed, static_cast<std::uint64_t>(i));
            if (s < -opts.tol) ++result.violations;
            if (s < result.min_slack) {
                result.min_slack = s;
                result.worst_index = i;
            }
        }
    }
    return result;
}

struct ConsistencyDiffs {
    double eps = 0.0;
    double eta = 0.0;
};

ConsistencyDiffs consistency_case(std::uint64_t seed, std::uint64_t index) {
    RngStream rng = derive_stream(seed, StreamDomain::consistency_audit, index);
    const auto n = random_unit_bloch(rng);
    const MeasurementFamily fam = projective_family(pauli_vector(n[0], n[1], n[2]));
    const StateVector psi = random_qubit_state(rng);
    const ComplexMatrix a = random_hermitian_unit_spectrum(2, rng);
    const ComplexMatrix b = random_hermitian_unit_spectrum(2, rng);
    const IndirectModel model = von_neumann_model(fam);
    ConsistencyDiffs diffs;
    diffs.eps = std::abs(rms_error(fam, a, psi) - indirect_rms_error(model, a, psi));
    diffs.eta = std::abs(rms_disturbance(fam, b, psi) - indirect_rms_disturbance(model, b, psi));
    return diffs;
}

ConsistencyAuditResult consistency_impl(const AuditOptions& opts, bool parallel) {
    require_draws(opts);
    ConsistencyAuditResult result;
    result.cases = opts.draws;

    if (parallel) {
        const long long n = opts.draws;
        std::vector<double> eps_diff(static_cast<std::size_t>(n));
        std::vector<double> eta_diff(static_cast<std::size_t>(n));
        std::exception_ptr err = nullptr;
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < n; ++i) {
            try {
                const ConsistencyDiffs d = consistency_case(opts.seed, static_cast<std::uint64_t>(i));
                eps_diff[static_cast<std::size_t>(i)] = d.eps;
                eta_diff[static_cast<std::size_t>(i)] = d.eta;
            } catch (...) {
#pragma omp critical
                if (err == nullptr) err = std::current_exception();
            }
        }
        if (err != nullptr) std::rethrow_exception(err);
        for (long long i = 0; i < n; ++i) {
            result.max_eps_diff = std::max(result.max_eps_diff, eps_diff[static_cast<std::size_t>(i)]);
            result.max_eta_diff = std::max(result.max_eta_diff, eta_diff[static_cast<std::size_t>(i)]);
        }
    } else {
        for (long long i = 0; i < opts.draws; ++i) {
            const ConsistencyDiffs d = consistency_case(opts.seed, static_cast<std::uint64_t>(i));
            result.max_eps_diff = std::max(result.max_eps_diff, d.eps);
            result.max_eta_diff = std::max(result.max_eta_diff, d.eta);
        }
    }
    return result;
}

}  // namespace

RobertsonAuditResult robertson_audit(const AuditOptions& opts) { return robertson_impl(opts, true); }

RobertsonAuditResult robertson_audit_serial(const AuditOptions& opts) {
    return robertson_impl(opts, false);
}

ConsistencyAuditResult consistency_audit(const AuditOptions& opts) {
    return consistency_impl(opts, true);
}

ConsistencyAuditResult consistency_audit_serial(const AuditOptions& opts) {
    return consistency_impl(opts, false);
}

}  // namespace unclab
