// Exhaustive enumeration of noncontextual value assignments over an
// exclusivity graph: exact classical maxima for linear and quadratic
// objectives and exact counts of constraint-satisfying assignments.
//
// Only deterministic assignments are enumerated: the objectives are
// linear in the outcome distribution, so the maximum over probabilistic
// mixtures of assignments is attained at a deterministic one.
#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ctx/dense.hpp"

namespace ctx {

enum class AssignmentDomain { Binary01, PlusMinus1 };

struct ProductConstraint {
    std::vector<int> members;
    int required_sign = +1;  // product over members must equal this
};

struct AssignmentProblem {
    std::vector<std::string> variables;
    AssignmentDomain domain = AssignmentDomain::Binary01;

    std::vector<std::pair<int, int>> exclusivity_edges;  // not both 1
    std::vector<std::vector<int>> basis_cliques;         // exactly one 1 per clique
    std::vector<ProductConstraint> product_constraints;  // domain PlusMinus1

    // objective: sum_i linear[i] a_i + sum_{(i,j,c)} c a_i a_j
    std::vector<double> linear_weights;  // empty = no linear part
    struct QuadTerm {
        int i, j;
        double c;
    };
    std::vector<QuadTerm> quadratic_terms;

    int num_vars() const { return static_cast<int>(variables.size()); }
};

struct BoundResult {
    double max_value = -std::numeric_limits<double>::infinity();
    // lexicographically sorted optimal assignments (values per variable)
    std::vector<std::vector<int>> argmax;
    uint64_t feasible_count = 0;
};

// Exact maximum over all feasible assignments; infeasible problems give the
// -inf sentinel and an empty argmax list. Enumeration above 2^24 throws.
// Honors CTX_THREADS for a deterministic parallel sweep (results are
// bit-identical to the serial pass).
BoundResult max_objective(const AssignmentProblem& problem);

// Number of assignments satisfying all constraints (including the product
// constraints).
uint64_t count_satisfying(const AssignmentProblem& problem);

// Pentagon convenience: maximum of the ordered non-adjacent pair-product
// objective over exclusivity-feasible {0,1} assignments.
double pair_objective_max(const AssignmentProblem& pentagon,
                          const std::vector<std::pair<int, int>>& ordered_pairs);

}  // namespace ctx
