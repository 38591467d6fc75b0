// Qubit Weyl symbols over the three-generator Grassmann algebra (xi_p,
// xi_q, xi_r per qubit): even operator symbols, odd dual state symbols for
// the expectation pairing, and the exact Groenewold product integral.
//
// The Pauli->bilinear sign table and the dual map are not hand-picked:
// the convention constructor searches the finite candidate space and keeps
// the unique assignment that satisfies the displayed one-qubit state-symbol
// identity, the +-(1/2)(1 +- alpha) marginal identity, and trace-oracle
// pairing on the whole Pauli basis.
//
// Symbols are stored in the hbar = 2 normalization (unit bilinears,
// xi_k = sigma_k); the hbar field only rescales the internal Groenewold
// kernel coefficients, never the stored symbols.
#pragma once

#include <array>

#include "ctx/grassmann.hpp"

namespace ctx {

// Generator index layout: qubit j owns generators 3j (p), 3j+1 (q), 3j+2 (r).
inline int gen_p(int qubit) { return 3 * qubit; }
inline int gen_q(int qubit) { return 3 * qubit + 1; }
inline int gen_r(int qubit) { return 3 * qubit + 2; }

struct QubitWeylConvention {
    double hbar = 2.0;

    // one-qubit images of X, Y, Z: bilinear mask over generators {0,1,2}
    // and coefficient (a signed multiple of i)
    struct Bilinear {
        uint32_t mask;
        Complex coeff;
    };
    std::array<Bilinear, 3> pauli_to_bilinear{};  // X, Y, Z

    Complex pairing_constant{0, 2};  // per qubit

    // Solves the sign table and dual map against the oracle constraints;
    // throws if no candidate (or more than one) survives.
    static QubitWeylConvention fit(double hbar = 2.0);
};

// Even Weyl symbol of an operator on n qubits (dim must be 2^n).
GrassmannPoly qubit_weyl(const DenseOperator& A, const QubitWeylConvention& conv);

// Odd dual symbol of a density matrix: pairing with any even operator
// symbol reproduces tr(A rho) exactly.
GrassmannPoly dual_state_symbol(const DenseOperator& rho, const QubitWeylConvention& conv);

// pairing_constant^n times the full Berezin integral of W_O * W~_rho.
// Grade mismatch (even/even or odd/odd) throws.
double grassmann_expectation(const GrassmannPoly& W_O, const GrassmannPoly& W_rho_dual,
                             const QubitWeylConvention& conv);

// Exact product rule: the double Grassmann integral against the
// exp((2/hbar)(xi1 xi2 + xi2 xi + xi xi1)) kernel, expanded as a finite
// nilpotent series, with the (hbar/2)^3 prefactor per qubit. Equals
// qubit_weyl(A*B) identically.
GrassmannPoly groenewold_product(const GrassmannPoly& W_A, const GrassmannPoly& W_B,
                                 const QubitWeylConvention& conv);

// Number of qubits of a symbol (generators/3), with validation.
int symbol_qubits(const GrassmannPoly& s);

}  // namespace ctx
