// Dense complex linear algebra for small Hilbert spaces (dim <= 9).
// This is the exact quantum-mechanics reference that every phase-space
// result is checked against: trace expectations, a cyclic-Jacobi
// Hermitian eigensolver, and projector construction from rays.
#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctx/tolerances.hpp"

namespace ctx {

using Complex = std::complex<double>;

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
  public:
    using Error::Error;
};

struct StateVector;

// Square complex matrix, row-major, value semantics throughout.
struct DenseOperator {
    int dim = 0;
    std::vector<Complex> a;  // dim*dim entries

    DenseOperator() = default;
    explicit DenseOperator(int d) : dim(d), a(static_cast<size_t>(d) * d) {}

    Complex& at(int r, int c) { return a[static_cast<size_t>(r) * dim + c]; }
    const Complex& at(int r, int c) const { return a[static_cast<size_t>(r) * dim + c]; }

    static DenseOperator identity(int d);
    static DenseOperator zero(int d) { return DenseOperator(d); }

    DenseOperator adjoint() const;
    Complex trace() const;
    double max_abs_diff(const DenseOperator& o) const;

    bool is_hermitian(double eps = tol().hermitian) const;
    bool is_projector(double eps = tol().projector) const;

    DenseOperator& operator+=(const DenseOperator& o);
    DenseOperator& operator-=(const DenseOperator& o);
    DenseOperator& operator*=(Complex s);
    friend DenseOperator operator+(DenseOperator l, const DenseOperator& r) { return l += r; }
    friend DenseOperator operator-(DenseOperator l, const DenseOperator& r) { return l -= r; }
    friend DenseOperator operator*(Complex s, DenseOperator m) { return m *= s; }
    friend DenseOperator operator*(DenseOperator m, Complex s) { return m *= s; }
    friend DenseOperator operator*(const DenseOperator& l, const DenseOperator& r);
};

struct StateVector {
    int dim = 0;
    std::vector<Complex> amp;

    StateVector() = default;
    explicit StateVector(int d) : dim(d), amp(static_cast<size_t>(d)) {}
    StateVector(std::initializer_list<Complex> xs) : dim(static_cast<int>(xs.size())), amp(xs) {}

    bool is_normalized(double eps = tol().normalized) const;
    StateVector normalized() const;
};

Complex inner(const StateVector& a, const StateVector& b);  // <a|b>
StateVector apply(const DenseOperator& A, const StateVector& v);
DenseOperator outer(const StateVector& a, const StateVector& b);  // |a><b|
DenseOperator kron(const DenseOperator& A, const DenseOperator& B);

// <psi|A|psi>. Dimension mismatch throws.
Complex expectation_trace(const DenseOperator& A, const StateVector& psi);

struct EigResult {
    std::vector<double> values;        // descending
    std::vector<StateVector> vectors;  // orthonormal, matching order
};

// Cyclic Jacobi for Hermitian input; off-diagonal norm threshold 1e-14,
// at most 100 sweeps. Degenerate blocks are ordered deterministically
// (lexicographic on rounded components after phase normalization).
EigResult eig_hermitian(const DenseOperator& A);

// |v><v| / <v|v>; zero vector throws.
DenseOperator projector_from_ray(const std::vector<Complex>& v);

// Single-qubit Pauli matrices and their tensor strings ("XI", "ZZ", ...).
DenseOperator pauli(char which);                    // I, X, Y, Z
DenseOperator pauli_string(const std::string& s);

}  // namespace ctx
