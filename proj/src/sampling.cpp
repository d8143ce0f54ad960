#include "unclab/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace unclab {

namespace {

Complex complex_normal(RngStream& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double re = gauss(rng);
    const double im = gauss(rng);
    return Complex(re, im);
}

}  // namespace

StateVector random_state(int dim, RngStream& rng) {
    while (true) {
        StateVector v(dim);
        for (int i = 0; i < dim; ++i) v[i] = complex_normal(rng);
        const double nrm = norm(v);
        if (nrm < 1e-6) continue;  // astronomically unlikely; redraw
        for (int i = 0; i < dim; ++i) v[i] /= nrm;
        return v;
    }
}

StateVector random_qubit_state(RngStream& rng) { return random_state(2, rng); }

std::array<double, 3> random_unit_bloch(RngStream& rng) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const double z = 2.0 * uni(rng) - 1.0;
    const double az = 2.0 * std::numbers::pi * uni(rng);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {r * std::cos(az), r * std::sin(az), z};
}

ComplexMatrix random_hermitian_unit_spectrum(int dim, RngStream& rng) {
    while (true) {
        ComplexMatrix g(dim);
        for (std::size_t i = 0; i < g.e.size(); ++i) g.e[i] = complex_normal(rng);
        ComplexMatrix h = Complex(0.5, 0.0) * (g + dagger(g));
        const double radius = spectral_radius(h);
        if (radius < 1e-9) continue;
        return Complex(1.0 / radius, 0.0) * h;
    }
}

ComplexMatrix random_unitary(int dim, RngStream& rng) {
    while (true) {
        // Columns of a complex Ginibre matrix.
        std::vector<StateVector> cols;
        cols.reserve(static_cast<std::size_t>(dim));
        for (int j = 0; j < dim; ++j) {
            StateVector c(dim);
            for (int i = 0; i < dim; ++i) c[i] = complex_normal(rng);
            cols.push_back(std::move(c));
        }
        // Modified Gram-Schmidt. Normalizing against a real positive pivot
        // fixes the column phases.
        bool degenerate = false;
        for (int j = 0; j < dim && !degenerate; ++j) {
            for (int k = 0; k < j; ++k) {
                const Complex proj = inner(cols[static_cast<std::size_t>(k)], cols[static_cast<std::size_t>(j)]);
                for (int i = 0; i < dim; ++i)
                    cols[static_cast<std::size_t>(j)][i] -= proj * cols[static_cast<std::size_t>(k)][i];
            }
            const double nrm = norm(cols[static_cast<std::size_t>(j)]);
            if (nrm < 1e-9) {
                degenerate = true;
                break;
            }
            for (int i = 0; i < dim; ++i) cols[static_cast<std::size_t>(j)][i] /= nrm;
        }
        if (degenerate) continue;
        ComplexMatrix u(dim);
        for (int j = 0; j < dim; ++j)
            for (int i = 0; i < dim; ++i) u(i, j) = cols[static_cast<std::size_t>(j)][i];
        return u;
    }
}

}  // namespace unclab
