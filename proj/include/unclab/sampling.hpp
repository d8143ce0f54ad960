#pragma once

#include <array>

#include "unclab/linalg.hpp"
#include "unclab/rng.hpp"

namespace unclab {

// Random draws used by the inequality audits. Hermitian draws are
// (G + G†)/2 with standard-normal complex entries, rescaled to unit
// spectral radius; unitaries come from Gram-Schmidt orthonormalization of a
// complex Gaussian matrix with the diagonal phases fixed.

StateVector random_state(int dim, RngStream& rng);
StateVector random_qubit_state(RngStream& rng);
std::array<double, 3> random_unit_bloch(RngStream& rng);  // uniform on the sphere
ComplexMatrix random_hermitian_unit_spectrum(int dim, RngStream& rng);
ComplexMatrix random_unitary(int dim, RngStream& rng);

}  // namespace unclab
