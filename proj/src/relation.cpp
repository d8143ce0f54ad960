#include "unclab/relation.hpp"

#include <cmath>
#include <stdexcept>

#include "unclab/measurement.hpp"

namespace unclab {

namespace {

void require_grid(const std::vector<double>& grid) {
    if (grid.empty()) throw std::invalid_argument("sweep: empty phi grid");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!std::isfinite(grid[i])) throw std::invalid_argument("sweep: non-finite phi");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw std::invalid_argument("sweep: phi grid must be strictly increasing");
    }
}

// Products with first-order uncertainty propagation, treating the factors
// as independent.
ValueUnc product(double a, double ua, double b, double ub) {
    return {a * b, std::hypot(b * ua, a * ub)};
}

void fill_products(ErrorDisturbanceRecord& rec) {
    rec.heis_prod = product(rec.eps.value, rec.eps.std_uncertainty, rec.eta.value,
                            rec.eta.std_uncertainty);
    rec.eps_sigma_b = product(rec.eps.value, rec.eps.std_uncertainty, rec.sigma_b.value,
                              rec.sigma_b.unc);
    rec.sigma_a_eta = product(rec.sigma_a.value, rec.sigma_a.unc, rec.eta.value,
                              rec.eta.std_uncertainty);
    rec.ozawa_sum.value = rec.heis_prod.value + rec.eps_sigma_b.value + rec.sigma_a_eta.value;
    rec.ozawa_sum.unc = std::sqrt(rec.heis_prod.unc * rec.heis_prod.unc +
                                  rec.eps_sigma_b.unc * rec.eps_sigma_b.unc +
                                  rec.sigma_a_eta.unc * rec.sigma_a_eta.unc);
}

ErrorDisturbanceRecord analytic_record(double phi) {
    const StateVector psi = plus_z();
    const ComplexMatrix a = pauli('x');
    const ComplexMatrix b = pauli('y');
    const MeasurementFamily fam = projective_family(sigma_phi(phi));

    ErrorDisturbanceRecord rec;
    rec.phi = phi;
    rec.source = RecordSource::analytic;
    rec.eps.value = rms_error(fam, a, psi);
    rec.eps.raw_square = rec.eps.value * rec.eps.value;
    rec.eta.value = rms_disturbance(fam, b, psi);
    rec.eta.raw_square = rec.eta.value * rec.eta.value;
    rec.sigma_a.value = std_dev(psi, a);
    rec.sigma_b.value = std_dev(psi, b);
    rec.bound = commutator_bound(psi, a, b);
    fill_products(rec);
    rec.cls = classify(rec);
    return rec;
}

// σ estimated from a ±1-valued marginal mean: σ² = 1 − m².
ValueUnc sigma_from_mean(double corrected_mean, double raw_mean, double total, double visibility) {
    const double sd_mean =
        std::sqrt(std::max(0.0, 1.0 - raw_mean * raw_mean) / total) / visibility;
    const double var = 1.0 - corrected_mean * corrected_mean;
    if (var <= 0.0) return {0.0, sd_mean};
    const double sigma = std::sqrt(var);
    return {sigma, std::abs(corrected_mean) * sd_mean / sigma};
}

}  // namespace

double commutator_bound(const StateVector& psi, const ComplexMatrix& a, const ComplexMatrix& b) {
    return 0.5 * std::abs(expectation(psi, commutator(a, b)));
}

double heisenberg_product(double eps, double eta) {
    if (eps < 0.0 || eta < 0.0) throw std::invalid_argument("heisenberg_product: negative input");
    return eps * eta;
}

double ozawa_sum(double eps, double eta, double sigma_a, double sigma_b) {
    if (eps < 0.0 || eta < 0.0 || sigma_a < 0.0 || sigma_b < 0.0)
        throw std::invalid_argument("ozawa_sum: negative input");
    return eps * eta + eps * sigma_b + sigma_a * eta;
}

double analytic_error(double phi) { return 2.0 * std::sin(phi / 2.0); }

double analytic_disturbance(double phi) { return std::sqrt(2.0) * std::cos(phi); }

Classification classify(const ErrorDisturbanceRecord& record) {
    Classification cls;
    if (record.source == RecordSource::analytic) {
        cls.heisenberg_satisfied = record.heis_prod.value >= record.bound - kAuditTol;
        cls.ozawa_satisfied = record.ozawa_sum.value >= record.bound - kAuditTol;
    } else {
        cls.heisenberg_satisfied = record.heis_prod.value >= record.bound;
        cls.ozawa_satisfied = record.ozawa_sum.value >= record.bound;
        cls.heisenberg_inconclusive =
            std::abs(record.heis_prod.value - record.bound) <= record.heis_prod.unc;
        cls.ozawa_inconclusive =
            std::abs(record.ozawa_sum.value - record.bound) <= record.ozawa_sum.unc;
    }
    return cls;
}

RobertsonCheck robertson_check(const StateVector& psi, const ComplexMatrix& a,
                               const ComplexMatrix& b) {
    RobertsonCheck check;
    check.lhs = std_dev(psi, a) * std_dev(psi, b);
    check.rhs = commutator_bound(psi, a, b);
    check.satisfied = check.lhs >= check.rhs - kAuditTol;
    return check;
}

ErrorDisturbanceRecord estimate_record(double phi, const StatePreparationSet& set,
                                       const EstimationContext& ctx, std::uint64_t stream_index) {
    ErrorDisturbanceRecord rec;
    rec.phi = phi;
    rec.source = RecordSource::simulated;

    rec.eps = epsilon_from_counts(set, ctx.estimator);
    rec.eta = eta_from_counts(set, ctx.estimator);

    UncertaintyOptions uopts;
    uopts.resamples = ctx.bootstrap_resamples;
    uopts.misalign_deg = ctx.misalign_deg;
    uopts.seed = ctx.seed;
    uopts.stream_index = stream_index;
    uopts.estimator = ctx.estimator;
    const UncertaintyBreakdown unc = propagate_uncertainty(set, phi, uopts);
    rec.eps.std_uncertainty = unc.eps;
    rec.eta.std_uncertainty = unc.eta;

    // Standard deviations from the ψ-table marginals.
    const double vis = ctx.estimator.visibility;
    rec.sigma_a = sigma_from_mean(mean_oa(set.psi) / vis, mean_oa(set.psi), set.psi.total(), vis);
    rec.sigma_b = sigma_from_mean(mean_ob(set.psi) / vis, mean_ob(set.psi), set.psi.total(), vis);

    // Theory bound of the modeled experiment.
    rec.bound = commutator_bound(plus_z(), pauli('x'), pauli('y'));
    fill_products(rec);
    rec.cls = classify(rec);
    return rec;
}

SweepResult sweep_analytic(const std::vector<double>& phi_grid) {
    require_grid(phi_grid);
    SweepResult result;
    result.records.resize(phi_grid.size());
    for (std::size_t i = 0; i < phi_grid.size(); ++i)
        result.records[i] = analytic_record(phi_grid[i]);
    return result;
}

namespace {

SweepResult sweep_simulated_impl(const std::vector<double>& phi_grid, const NoiseConfig& cfg,
                                 const SweepOptions& opts, bool parallel) {
    require_grid(phi_grid);
    EstimationContext ctx;
    ctx.seed = cfg.seed;
    ctx.misalign_deg = cfg.misalign_deg;
    ctx.bootstrap_resamples = opts.bootstrap_resamples;
    ctx.estimator = opts.estimator;

    SweepResult result;
    result.config = cfg;
    result.records.resize(phi_grid.size());
    const int count = static_cast<int>(phi_grid.size());
    if (parallel) {
        std::exception_ptr err = nullptr;
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < count; ++i) {
            try {
                const ExperimentRun run = run_experiment(phi_grid[static_cast<std::size_t>(i)], cfg,
                                                         static_cast<std::uint64_t>(i));
                result.records[static_cast<std::size_t>(i)] =
                    estimate_record(run.phi, run.tables, ctx, static_cast<std::uint64_t>(i));
            } catch (...) {
#pragma omp critical
                if (err == nullptr) err = std::current_exception();
            }
        }
        if (err != nullptr) std::rethrow_exception(err);
    } else {
        for (int i = 0; i < count; ++i) {
            const ExperimentRun run =
                run_experiment(phi_grid[static_cast<std::size_t>(i)], cfg, static_cast<std::uint64_t>(i));
            result.records[static_cast<std::size_t>(i)] =
                estimate_record(run.phi, run.tables, ctx, static_cast<std::uint64_t>(i));
        }
    }
    return result;
}

}  // namespace

SweepResult sweep_simulated(const std::vector<double>& phi_grid, const NoiseConfig& cfg,
                            const SweepOptions& opts) {
    return sweep_simulated_impl(phi_grid, cfg, opts, true);
}

SweepResult sweep_simulated_serial(const std::vector<double>& phi_grid, const NoiseConfig& cfg,
                                   const SweepOptions& opts) {
    return sweep_simulated_impl(phi_grid, cfg, opts, false);
}

}  // namespace unclab
