#include "unclab/estimator.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "unclab/noise_sim.hpp"

namespace unclab {

namespace {

constexpr std::uint64_t kBootstrapIndexStride = 1ULL << 20;  // resamples per setting limit

void require_counts(const CountTable& t, const char* what) {
    for (int i1 = 0; i1 < 2; ++i1)
        for (int i2 = 0; i2 < 2; ++i2)
            if (!(t.c[i1][i2] >= 0.0)) throw std::invalid_argument(std::string(what) + ": negative count");
    if (!(t.total() > 0.0)) throw std::invalid_argument(std::string(what) + ": zero-total count table");
}

double corrected_mean_oa(const CountTable& t, const EstimatorOptions& opts) {
    return mean_oa(t) / opts.visibility;
}

double corrected_mean_ob(const CountTable& t, const EstimatorOptions& opts) {
    return mean_ob(t) / opts.visibility;
}

// Multinomial variance of a ±1 mean estimated from a table, after the
// visibility division.
double mean_variance(const CountTable& t, double corrected_mean, const EstimatorOptions& opts) {
    const double raw = corrected_mean * opts.visibility;
    const double var_raw = std::max(0.0, 1.0 - raw * raw) / t.total();
    return var_raw / (opts.visibility * opts.visibility);
}

EstimateWithUncertainty clamp_core(double square) {
    EstimateWithUncertainty est;
    est.raw_square = square;
    double clamped = square;
    if (clamped < 0.0) {
        clamped = 0.0;
        est.clamped = true;
    } else if (clamped > 4.0) {
        clamped = 4.0;
        est.clamped = true;
    }
    est.value = std::sqrt(clamped);
    return est;
}

EstimateWithUncertainty clamp_estimate(double square, double sd_square, const char* what) {
    if (square < -5.0 * sd_square)
        throw std::domain_error(std::string(what) +
                                ": squared estimate is negative beyond statistical plausibility");
    return clamp_core(square);
}

void validate_options(const EstimatorOptions& opts) {
    if (!(opts.visibility > 0.0) || opts.visibility > 1.0)
        throw std::invalid_argument("EstimatorOptions: visibility must be in (0, 1]");
    if (!(opts.aux_norm_factor > 0.0))
        throw std::invalid_argument("EstimatorOptions: aux_norm_factor must be positive");
}

double eps_square(const StatePreparationSet& set, const EstimatorOptions& opts) {
    return 2.0 + corrected_mean_oa(set.psi, opts) + corrected_mean_oa(set.a_psi, opts) -
           opts.aux_norm_factor * corrected_mean_oa(set.x_aux, opts);
}

double eta_square(const StatePreparationSet& set, const EstimatorOptions& opts) {
    return 2.0 + corrected_mean_ob(set.psi, opts) + corrected_mean_ob(set.a_psi, opts) -
           opts.aux_norm_factor * corrected_mean_ob(set.y_aux, opts);
}

JointOutcomeDistribution table_proportions(const CountTable& t) {
    JointOutcomeDistribution p;
    const double total = t.total();
    for (int i1 = 0; i1 < 2; ++i1)
        for (int i2 = 0; i2 < 2; ++i2) p.p[i1][i2] = t.c[i1][i2] / total;
    return p;
}

CountTable resample(const CountTable& t, RngStream& rng) {
    const long long n = std::llround(t.total());
    if (n < 1) throw std::invalid_argument("propagate_uncertainty: table total below one count");
    return sample_counts(table_proportions(t), n, rng);
}

struct BootstrapDraw {
    double eps;
    double eta;
};

BootstrapDraw bootstrap_draw(const StatePreparationSet& set, const UncertaintyOptions& opts,
                             std::uint64_t resample_index) {
    RngStream rng = derive_stream(opts.seed, StreamDomain::bootstrap,
                                  opts.stream_index * kBootstrapIndexStride + resample_index);
    StatePreparationSet redrawn;
    redrawn.psi = resample(set.psi, rng);
    redrawn.a_psi = resample(set.a_psi, rng);
    redrawn.x_aux = resample(set.x_aux, rng);
    redrawn.y_aux = resample(set.y_aux, rng);
    // Clamp without the plausibility guard: a resample may legitimately
    // stray past it even when the input data is sound.
    return {clamp_core(eps_square(redrawn, opts.estimator)).value,
            clamp_core(eta_square(redrawn, opts.estimator)).value};
}

double sample_sd(const std::vector<double>& xs) {
    if (xs.size() < 2) return 0.0;
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double acc = 0.0;
    for (double x : xs) acc += (x - mean) * (x - mean);
    return std::sqrt(acc / static_cast<double>(xs.size() - 1));
}

// Half-spread of the estimates when the detuning and preparation angles are
// re-evaluated on exact model tables at ±misalign_deg.
void systematic_band(double phi, const UncertaintyOptions& opts, double& eps_sys, double& eta_sys) {
    eps_sys = 0.0;
    eta_sys = 0.0;
    if (opts.misalign_deg == 0.0) return;
    const StatePreparationSet plus = exact_probability_tables(phi, opts.misalign_deg);
    const StatePreparationSet minus = exact_probability_tables(phi, -opts.misalign_deg);
    eps_sys = 0.5 * std::abs(epsilon_from_counts(plus, opts.estimator).value -
                             epsilon_from_counts(minus, opts.estimator).value);
    eta_sys = 0.5 * std::abs(eta_from_counts(plus, opts.estimator).value -
                             eta_from_counts(minus, opts.estimator).value);
}

UncertaintyBreakdown propagate_impl(const StatePreparationSet& set, double phi,
                                    const UncertaintyOptions& opts, bool parallel) {
    if (opts.resamples < 2) throw std::invalid_argument("propagate_uncertainty: need >= 2 resamples");
    if (static_cast<std::uint64_t>(opts.resamples) >= kBootstrapIndexStride)
        throw std::invalid_argument("propagate_uncertainty: too many resamples");
    for (const CountTable* t : {&set.psi, &set.a_psi, &set.x_aux, &set.y_aux}) {
        require_counts(*t, "propagate_uncertainty");
        if (std::llround(t->total()) < 1)
            throw std::invalid_argument("propagate_uncertainty: table total below one count");
    }
    validate_options(opts.estimator);

    const int r = opts.resamples;
    std::vector<double> eps_draws(static_cast<std::size_t>(r));
    std::vector<double> eta_draws(static_cast<std::size_t>(r));
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < r; ++i) {
            const BootstrapDraw d = bootstrap_draw(set, opts, static_cast<std::uint64_t>(i));
            eps_draws[static_cast<std::size_t>(i)] = d.eps;
            eta_draws[static_cast<std::size_t>(i)] = d.eta;
        }
    } else {
        for (int i = 0; i < r; ++i) {
            const BootstrapDraw d = bootstrap_draw(set, opts, static_cast<std::uint64_t>(i));
            eps_draws[static_cast<std::size_t>(i)] = d.eps;
            eta_draws[static_cast<std::size_t>(i)] = d.eta;
        }
    }

    UncertaintyBreakdown out;
    out.eps_statistical = sample_sd(eps_draws);
    out.eta_statistical = sample_sd(eta_draws);
    systematic_band(phi, opts, out.eps_systematic, out.eta_systematic);
    out.eps = std::hypot(out.eps_statistical, out.eps_systematic);
    out.eta = std::hypot(out.eta_statistical, out.eta_systematic);
    return out;
}

}  // namespace

double mean_oa(const CountTable& table) {
    require_counts(table, "mean_oa");
    return (table.c[0][0] + table.c[0][1] - table.c[1][0] - table.c[1][1]) / table.total();
}

double mean_ob(const CountTable& table) {
    require_counts(table, "mean_ob");
    return (table.c[0][0] + table.c[1][0] - table.c[0][1] - table.c[1][1]) / table.total();
}

EstimateWithUncertainty epsilon_from_counts(const StatePreparationSet& set,
                                            const EstimatorOptions& opts) {
    validate_options(opts);
    return clamp_estimate(eps_square(set, opts), delta_sd_eps_sq(set, opts), "epsilon_from_counts");
}

EstimateWithUncertainty eta_from_counts(const StatePreparationSet& set,
                                        const EstimatorOptions& opts) {
    validate_options(opts);
    return clamp_estimate(eta_square(set, opts), delta_sd_eta_sq(set, opts), "eta_from_counts");
}

double delta_sd_eps_sq(const StatePreparationSet& set, const EstimatorOptions& opts) {
    validate_options(opts);
    const double f = opts.aux_norm_factor;
    const double var = mean_variance(set.psi, corrected_mean_oa(set.psi, opts), opts) +
                       mean_variance(set.a_psi, corrected_mean_oa(set.a_psi, opts), opts) +
                       f * f * mean_variance(set.x_aux, corrected_mean_oa(set.x_aux, opts), opts);
    return std::sqrt(var);
}

double delta_sd_eta_sq(const StatePreparationSet& set, const EstimatorOptions& opts) {
    validate_options(opts);
    const double f = opts.aux_norm_factor;
    const double var = mean_variance(set.psi, corrected_mean_ob(set.psi, opts), opts) +
                       mean_variance(set.a_psi, corrected_mean_ob(set.a_psi, opts), opts) +
                       f * f * mean_variance(set.y_aux, corrected_mean_ob(set.y_aux, opts), opts);
    return std::sqrt(var);
}

UncertaintyBreakdown propagate_uncertainty(const StatePreparationSet& set, double phi,
                                           const UncertaintyOptions& opts) {
    return propagate_impl(set, phi, opts, true);
}

UncertaintyBreakdown propagate_uncertainty_serial(const StatePreparationSet& set, double phi,
                                                  const UncertaintyOptions& opts) {
    return propagate_impl(set, phi, opts, false);
}

}  // namespace unclab
