#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace unclab {

using Complex = std::complex<double>;

// Tolerances shared across the library.
inline constexpr double kNormTol = 1e-10;       // |Σ|a|² - 1| for normalized states
inline constexpr double kHermitianTol = 1e-12;  // entrywise |M - M†|
inline constexpr double kUnitaryTol = 1e-10;    // entrywise |U†U - I|
inline constexpr double kAuditTol = 1e-9;       // inequality slack treated as numerical noise

// Dense complex ket. May be unnormalized; operations that require a
// normalized state document it and leave any √2-type factors to the caller.
struct StateVector {
    std::vector<Complex> amps;

    StateVector() = default;
    explicit StateVector(int dim);
    StateVector(std::initializer_list<Complex> xs);
    explicit StateVector(std::vector<Complex> xs);

    int dim() const { return static_cast<int>(amps.size()); }
    Complex& operator[](int i) { return amps[static_cast<std::size_t>(i)]; }
    const Complex& operator[](int i) const { return amps[static_cast<std::size_t>(i)]; }
};

// Dense square complex matrix, row-major.
struct ComplexMatrix {
    int n = 0;
    std::vector<Complex> e;

    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim);

    int dim() const { return n; }
    Complex& operator()(int r, int c) { return e[static_cast<std::size_t>(r) * n + c]; }
    const Complex& operator()(int r, int c) const { return e[static_cast<std::size_t>(r) * n + c]; }
};

StateVector operator+(const StateVector& a, const StateVector& b);
StateVector operator-(const StateVector& a, const StateVector& b);
StateVector operator*(Complex s, const StateVector& v);

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& m);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
StateVector operator*(const ComplexMatrix& m, const StateVector& v);

ComplexMatrix identity(int dim);
ComplexMatrix dagger(const ComplexMatrix& m);

Complex inner(const StateVector& a, const StateVector& b);  // ⟨a|b⟩
double norm(const StateVector& v);
bool is_normalized(const StateVector& v, double tol = kNormTol);
bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol);
bool is_unitary(const ComplexMatrix& m, double tol = kUnitaryTol);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
void check_finite(const StateVector& v);
void check_finite(const ComplexMatrix& m);

// Kronecker product; the left factor is the slow index.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
StateVector tensor(const StateVector& a, const StateVector& b);

// Qubit constructors.
ComplexMatrix pauli(char axis);                            // 'x', 'y' or 'z'
ComplexMatrix pauli_vector(double nx, double ny, double nz);  // n·σ
ComplexMatrix sigma_phi(double phi);                       // cosφ σx + sinφ σy
StateVector bloch_state(double theta, double phi);         // cos(θ/2)|+z⟩ + e^{iφ} sin(θ/2)|−z⟩
StateVector plus_z();
StateVector minus_z();
StateVector plus_x();
StateVector plus_y();

// ⟨ψ|M|ψ⟩. Requires matching dims and a normalized ψ.
Complex expectation(const StateVector& psi, const ComplexMatrix& m);

// √(⟨M²⟩ − ⟨M⟩²) for Hermitian M in normalized ψ. Variances in
// [−1e-12, 0) are clamped to 0; anything lower throws.
double std_dev(const StateVector& psi, const ComplexMatrix& m);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

// Eigenvalues of a Hermitian matrix, ascending. Closed-form for 2×2,
// cyclic Jacobi otherwise (intended for dim ≤ 8).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);
double spectral_radius(const ComplexMatrix& m);

}  // namespace unclab
