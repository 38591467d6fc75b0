// Discrete Wigner-Weyl transform for odd d: boost/shift generators, the
// translation and reflection operator families, forward and inverse Weyl
// transforms, the phase-space expectation pairing, and marginals.
//
// Normalization split: observable symbols are W_A(x) = tr(A R(x)), state
// symbols carry an extra d^{-n}. With that split the plain phase-space sum
// sum_x W_A(x) W_rho(x) equals the trace expectation exactly, basis-state
// projector symbols are {0,1} indicator grids, and state symbols put 1/d
// on their support.
#pragma once

#include <vector>

#include "ctx/dense.hpp"

namespace ctx {

// A point (x_p, x_q) of the Weyl grid (Z_d)^{2n}, d odd.
struct PhasePoint {
    std::vector<int> p, q;  // residues mod d, one per register
    int d = 3;

    int n() const { return static_cast<int>(p.size()); }
    static PhasePoint single(int d, int xp, int xq) { return {{xp}, {xq}, d}; }
};

// Symplectic pairing <a, b> = a_q . b_p - a_p . b_q  (mod d).
int symplectic_pairing(const PhasePoint& a, const PhasePoint& b);

enum class SymbolNorm { Observable, State };

struct WeylSymbolOdd {
    int d = 3;
    int n = 1;
    SymbolNorm norm = SymbolNorm::Observable;
    std::vector<Complex> v;  // size d^{2n}; index = flat(p)*d^n + flat(q)

    WeylSymbolOdd() = default;
    WeylSymbolOdd(int d_, int n_, SymbolNorm nm);

    int side() const;  // d^n
    Complex& at_flat(int pf, int qf) { return v[static_cast<size_t>(pf) * side() + qf]; }
    const Complex& at_flat(int pf, int qf) const { return v[static_cast<size_t>(pf) * side() + qf]; }
    Complex value(const PhasePoint& x) const;

    Complex sum() const;
    double max_abs_imag() const;
};

// Z^{ep} X^{eq} on a single register (no phase factor). Even d throws:
// two-generator phase space does not exist there, use the Grassmann path.
DenseOperator boost_shift(int d, int exponent_p, int exponent_q);

// T(lambda) = omega^{-lambda_p.lambda_q * inv2} Z^{lambda_p} X^{lambda_q},
// inv2 = (d+1)/2 the modular inverse of 2. Tensor product over registers.
DenseOperator translation_op(const PhasePoint& lambda);

// R(x) = d^{-n} sum_xi omega^{<xi, x>} T(xi). Hermitian, squares to the
// identity, unit trace.
DenseOperator reflection_op(const PhasePoint& x);

WeylSymbolOdd weyl_observable(const DenseOperator& A, int d, int n);
WeylSymbolOdd wigner_state(const DenseOperator& rho, int d, int n);

DenseOperator inverse_weyl(const WeylSymbolOdd& W);

// sum_x W_A(x) W_rho(x); requires one observable- and one state-normalized
// symbol on the same grid.
double phase_space_expectation(const WeylSymbolOdd& W_A, const WeylSymbolOdd& W_rho);

enum class Axis { P, Q };

// P[psi](x_p) = sum_{x_q} W, or Q[psi](x_q) = sum_{x_p} W.
std::vector<double> marginal(const WeylSymbolOdd& W_rho, Axis axis);

// Enumeration helpers over (Z_d)^n tuples (row-major flat index order).
std::vector<int> unflatten(int flat, int d, int n);
int flatten(const std::vector<int>& t, int d);

}  // namespace ctx
