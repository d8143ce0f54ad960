#include "unclab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace unclab {

namespace {

void require_same_dim(int a, int b, const char* what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch");
    }
}

}  // namespace

StateVector::StateVector(int dim) : amps(static_cast<std::size_t>(dim)) {
    if (dim < 1) throw std::invalid_argument("StateVector: dim must be >= 1");
}

StateVector::StateVector(std::initializer_list<Complex> xs) : amps(xs) {
    if (amps.empty()) throw std::invalid_argument("StateVector: dim must be >= 1");
    check_finite(*this);
}

StateVector::StateVector(std::vector<Complex> xs) : amps(std::move(xs)) {
    if (amps.empty()) throw std::invalid_argument("StateVector: dim must be >= 1");
    check_finite(*this);
}

ComplexMatrix::ComplexMatrix(int dim) : n(dim), e(static_cast<std::size_t>(dim) * dim) {
    if (dim < 1) throw std::invalid_argument("ComplexMatrix: dim must be >= 1");
}

StateVector operator+(const StateVector& a, const StateVector& b) {
    require_same_dim(a.dim(), b.dim(), "StateVector +");
    StateVector r(a.dim());
    for (int i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
    return r;
}

StateVector operator-(const StateVector& a, const StateVector& b) {
    require_same_dim(a.dim(), b.dim(), "StateVector -");
    StateVector r(a.dim());
    for (int i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
    return r;
}

StateVector operator*(Complex s, const StateVector& v) {
    StateVector r(v.dim());
    for (int i = 0; i < v.dim(); ++i) r[i] = s * v[i];
    return r;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a.n, b.n, "ComplexMatrix +");
    ComplexMatrix r(a.n);
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a.n, b.n, "ComplexMatrix -");
    ComplexMatrix r(a.n);
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& m) {
    ComplexMatrix r(m.n);
    for (std::size_t i = 0; i < m.e.size(); ++i) r.e[i] = s * m.e[i];
    return r;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a.n, b.n, "ComplexMatrix *");
    ComplexMatrix r(a.n);
    for (int i = 0; i < a.n; ++i) {
        for (int k = 0; k < a.n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (int j = 0; j < a.n; ++j) r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

StateVector operator*(const ComplexMatrix& m, const StateVector& v) {
    require_same_dim(m.n, v.dim(), "ComplexMatrix * StateVector");
    StateVector r(m.n);
    for (int i = 0; i < m.n; ++i) {
        Complex acc{};
        for (int j = 0; j < m.n; ++j) acc += m(i, j) * v[j];
        r[i] = acc;
    }
    return r;
}

ComplexMatrix identity(int dim) {
    ComplexMatrix r(dim);
    for (int i = 0; i < dim; ++i) r(i, i) = 1.0;
    return r;
}

ComplexMatrix dagger(const ComplexMatrix& m) {
    ComplexMatrix r(m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) r(j, i) = std::conj(m(i, j));
    return r;
}

Complex inner(const StateVector& a, const StateVector& b) {
    require_same_dim(a.dim(), b.dim(), "inner");
    Complex acc{};
    for (int i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

double norm(const StateVector& v) {
    double acc = 0.0;
    for (const Complex& x : v.amps) acc += std::norm(x);
    return std::sqrt(acc);
}

bool is_normalized(const StateVector& v, double tol) {
    double acc = 0.0;
    for (const Complex& x : v.amps) acc += std::norm(x);
    return std::abs(acc - 1.0) <= tol;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
    return true;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
    return max_abs_diff(dagger(m) * m, identity(m.n)) <= tol;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a.n, b.n, "max_abs_diff");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.e.size(); ++i) worst = std::max(worst, std::abs(a.e[i] - b.e[i]));
    return worst;
}

void check_finite(const StateVector& v) {
    for (const Complex& x : v.amps)
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
            throw std::invalid_argument("StateVector: non-finite amplitude");
}

void check_finite(const ComplexMatrix& m) {
    for (const Complex& x : m.e)
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
            throw std::invalid_argument("ComplexMatrix: non-finite entry");
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix r(a.n * b.n);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) continue;
            for (int k = 0; k < b.n; ++k)
                for (int l = 0; l < b.n; ++l) r(i * b.n + k, j * b.n + l) = aij * b(k, l);
        }
    return r;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    StateVector r(a.dim() * b.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int k = 0; k < b.dim(); ++k) r[i * b.dim() + k] = a[i] * b[k];
    return r;
}

ComplexMatrix pauli(char axis) {
    ComplexMatrix m(2);
    switch (axis) {
        case 'x':
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        case 'y':
            m(0, 1) = Complex(0.0, -1.0);
            m(1, 0) = Complex(0.0, 1.0);
            break;
        case 'z':
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
        default:
            throw std::invalid_argument("pauli: axis must be x, y or z");
    }
    return m;
}

ComplexMatrix pauli_vector(double nx, double ny, double nz) {
    if (!std::isfinite(nx) || !std::isfinite(ny) || !std::isfinite(nz))
        throw std::invalid_argument("pauli_vector: non-finite component");
    ComplexMatrix m(2);
    m(0, 0) = nz;
    m(1, 1) = -nz;
    m(0, 1) = Complex(nx, -ny);
    m(1, 0) = Complex(nx, ny);
    return m;
}

ComplexMatrix sigma_phi(double phi) {
    if (!std::isfinite(phi)) throw std::invalid_argument("sigma_phi: phi must be finite");
    return pauli_vector(std::cos(phi), std::sin(phi), 0.0);
}

StateVector bloch_state(double theta, double phi) {
    if (!std::isfinite(theta) || !std::isfinite(phi))
        throw std::invalid_argument("bloch_state: angles must be finite");
    StateVector v(2);
    v[0] = std::cos(theta / 2.0);
    v[1] = std::polar(std::sin(theta / 2.0), phi);
    return v;
}

StateVector plus_z() { return StateVector{1.0, 0.0}; }
StateVector minus_z() { return StateVector{0.0, 1.0}; }
StateVector plus_x() { return StateVector{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)}; }
StateVector plus_y() { return StateVector{1.0 / std::sqrt(2.0), Complex(0.0, 1.0 / std::sqrt(2.0))}; }

Complex expectation(const StateVector& psi, const ComplexMatrix& m) {
    require_same_dim(psi.dim(), m.n, "expectation");
    return inner(psi, m * psi);
}

double std_dev(const StateVector& psi, const ComplexMatrix& m) {
    require_same_dim(psi.dim(), m.n, "std_dev");
    const StateVector mp = m * psi;
    const double second = inner(mp, mp).real();  // ⟨ψ|M²|ψ⟩ for Hermitian M
    const double mean = inner(psi, mp).real();
    double var = second - mean * mean;
    if (var < 0.0) {
        if (var < -1e-12) throw std::domain_error("std_dev: negative variance beyond tolerance");
        var = 0.0;
    }
    return std::sqrt(var);
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a * b - b * a;
}

namespace {

// Cyclic Jacobi for complex Hermitian matrices. A ← J†AJ with the rotation
// chosen to zero the (p,q) entry.
std::vector<double> jacobi_eigenvalues(ComplexMatrix a) {
    const int n = a.n;
    double scale = 0.0;
    for (const Complex& x : a.e) scale = std::max(scale, std::abs(x));
    if (scale == 0.0) return std::vector<double>(static_cast<std::size_t>(n), 0.0);
    const double stop = 1e-15 * scale;

    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
        if (off <= stop) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag <= stop) continue;
                const Complex phase = apq / mag;  // e^{iβ}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0.0 ? -1.0 : 1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // Column update: columns p,q of A by J, then rows by J†.
                for (int k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp + s * std::conj(phase) * akq;
                    a(k, q) = -s * phase * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk + s * phase * aqk;
                    a(q, k) = -s * std::conj(phase) * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eig(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = a(i, i).real();
    std::sort(eig.begin(), eig.end());
    return eig;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    if (!is_hermitian(m, 1e-9)) throw std::invalid_argument("hermitian_eigenvalues: matrix not Hermitian");
    if (m.n == 1) return {m(0, 0).real()};
    if (m.n == 2) {
        const double a = m(0, 0).real();
        const double d = m(1, 1).real();
        const double h = std::hypot((a - d) / 2.0, std::abs(m(0, 1)));
        const double mid = (a + d) / 2.0;
        return {mid - h, mid + h};
    }
    return jacobi_eigenvalues(m);
}

double spectral_radius(const ComplexMatrix& m) {
    const std::vector<double> eig = hermitian_eigenvalues(m);
    return std::max(std::abs(eig.front()), std::abs(eig.back()));
}

}  // namespace unclab
