// The three witness constructions: the Peres-Mermin square of two-qubit
// Paulis, the KCSB pentagon of five cyclically orthogonal qutrit
// projectors (expressed in a basis convention fitted so the published
// expectation table and symbol grids reproduce), and the 13-ray qutrit
// family with its state-independent witnesses.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ctx/dense.hpp"

namespace ctx {

class BasisFitError : public Error {
  public:
    using Error::Error;
};

struct OrthogonalityGraph {
    std::vector<std::string> labels;
    std::vector<std::vector<bool>> adjacency;  // symmetric, zero diagonal
    std::vector<std::vector<int>> basis_cliques;  // maximal cliques that are complete bases

    bool edge(int i, int j) const { return adjacency[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    int size() const { return static_cast<int>(labels.size()); }
};

// Exhaustive maximal-clique enumeration (graphs here have <= 13 vertices).
std::vector<std::vector<int>> maximal_cliques(const std::vector<std::vector<bool>>& adjacency);

struct LabeledState {
    std::string label;
    StateVector state;
};

struct WitnessConstruction {
    std::string name;
    int dimension = 0;
    std::vector<std::string> operator_labels;
    std::vector<DenseOperator> operators;

    // ordered products defining the Theorem-style witness (pairs for the
    // pentagon and the squared h-sum, triples for Peres-Mermin contexts)
    std::vector<std::vector<int>> products;
    double classical_bound = 0;
    double quantum_bound = 0;

    OrthogonalityGraph graph;
    std::vector<LabeledState> state_family;

    // secondary linear witness (sum of the projectors), where defined
    std::optional<double> sum_classical_bound;
    std::optional<double> sum_quantum_bound;

    // KCSB only: metadata of the fitted basis convention
    bool appendix_grids_matched = false;
    std::vector<int> kcsb_relabeling;  // construction label k -> pentagram seed index

    std::vector<std::pair<int, int>> product_pairs() const;
};

// Pentagram seed rays: v_j = (cos t, sin t cos(4 pi j/5), sin t sin(4 pi j/5)),
// cos^2 t = cos(pi/5)/(1+cos(pi/5)); adjacent rays orthogonal.
std::vector<std::vector<double>> kcsb_seed_vectors();

// Five rank-1 qutrit projectors with the ten non-adjacent ordered pair
// products as witness, classical bound 2, quantum bound 5 - sqrt(5), and
// the twelve stabilizer states of the fitted basis as state family.
// Throws BasisFitError if no basis convention reproduces the published
// expectation table; a convention that additionally reproduces the
// published projector symbol grids sets appendix_grids_matched.
WitnessConstruction build_kcsb();

// The 3x3 square of two-qubit Pauli observables; products = the six
// contexts (three rows then three columns).
WitnessConstruction build_peres_mermin();

// The 13-ray family: operators = the 13 ray projectors; products = the 16
// ordered pairs of the four h projectors (the squared h-sum witness,
// classical bound 1, quantum value 16/9).
WitnessConstruction build_yu_oh();

// Table of twelve qutrit stabilizer states in the construction basis:
// phi_1..phi_3 and the nine phased uniform superpositions.
std::vector<LabeledState> stabilizer_states_qutrit();

// Indices of the h-projectors inside build_yu_oh()'s operator list.
std::vector<int> yu_oh_h_indices();

}  // namespace ctx
