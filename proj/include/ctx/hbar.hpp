// Splitting product symbols into the order-hbar^0 part (the Groenewold
// leading term: pointwise product of the factor symbols) and the exact
// remainder, plus the Theorem-style contextuality verdict built from the
// two contributions.
//
// Odd d: in observable normalization every pointwise junction carries a
// d^{-n} cell factor — h0(A,B) = d^{-n} (W_A . W_B) — equivalently the
// plain pointwise product of state-normalized symbols. This is the scaling
// under which the published expectation tables decompose; the identity
// symbol is *not* neutral for it (the defect is part of the correction).
// Qubits: the pointwise product is the plain Grassmann product.
#pragma once

#include <optional>
#include <string>

#include "ctx/phase_space.hpp"
#include "ctx/qubit_weyl.hpp"

namespace ctx {

struct HbarSplitOdd {
    WeylSymbolOdd exact;       // observable-normalized symbol of the product
    WeylSymbolOdd h0;          // pointwise part, same normalization
    WeylSymbolOdd correction;  // exact - h0
};

struct HbarSplitQubit {
    GrassmannPoly exact;
    GrassmannPoly h0;
    GrassmannPoly correction;
};

// Iterated pointwise product of >= 2 symbols sharing grid and
// normalization. Observable-normalized: one d^{-n} per junction;
// state-normalized: plain pointwise (the two agree after conversion).
WeylSymbolOdd h0_product(const std::vector<WeylSymbolOdd>& symbols);

// Iterated Grassmann pointwise product of >= 2 qubit symbols.
GrassmannPoly h0_product(const std::vector<GrassmannPoly>& symbols);

HbarSplitOdd decompose_product(const DenseOperator& A, const DenseOperator& B, int d, int n);
HbarSplitQubit decompose_product(const DenseOperator& A, const DenseOperator& B,
                                 const QubitWeylConvention& conv);

// Sum of decompose_product over an ordered pair list (e.g. the ten
// non-adjacent ordered pairs of the pentagon witness).
HbarSplitOdd witness_split(const std::vector<DenseOperator>& operators,
                           const std::vector<std::pair<int, int>>& pairs, int d, int n);

struct ContextualityReport {
    std::string state_label;
    double exact_expectation = 0;
    double h0_contribution = 0;
    double correction_contribution = 0;
    double classical_bound = 0;
    bool contextual = false;            // exact > bound + margin
    bool h0_exceeds_bound = false;      // never true in the reproduced tables
    bool correction_exceeds_bound = false;
};

ContextualityReport contextuality_report(const StateVector& psi, const std::string& label,
                                         const HbarSplitOdd& split, double classical_bound);

}  // namespace ctx
