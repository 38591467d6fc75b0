#include <doctest.h>

#include <cstdlib>

#include "ctx/bounds.hpp"
#include "ctx/constructions.hpp"

using namespace ctx;

namespace {

AssignmentProblem pentagon() {
    AssignmentProblem p;
    for (int i = 1; i <= 5; ++i) p.variables.push_back("Pi" + std::to_string(i));
    p.domain = AssignmentDomain::Binary01;
    for (int i = 0; i < 5; ++i) p.exclusivity_edges.emplace_back(i, (i + 1) % 5);
    return p;
}

}  // namespace

TEST_CASE("pentagon bounds") {
    AssignmentProblem lin = pentagon();
    lin.linear_weights.assign(5, 1.0);
    BoundResult r = max_objective(lin);
    CHECK(r.max_value == 2.0);
    CHECK(r.feasible_count == 11);  // independent sets of the 5-cycle
    // argmax assignments are the five non-adjacent pairs, lexicographic
    CHECK(r.argmax.size() == 5);
    CHECK(r.argmax.front() == std::vector<int>{0, 0, 1, 0, 1});

    // ordered pair products: also 2
    std::vector<std::pair<int, int>> pairs = {{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4},
                                              {2, 0}, {3, 0}, {3, 1}, {4, 1}, {4, 2}};
    CHECK(pair_objective_max(pentagon(), pairs) == 2.0);

    // hand-evaluated example: a1 = a3 = 1 gives pairs (1,3) and (3,1)
    AssignmentProblem two = pentagon();
    two.quadratic_terms.push_back({0, 2, 1.0});
    two.quadratic_terms.push_back({2, 0, 1.0});
    BoundResult r2 = max_objective(two);
    CHECK(r2.max_value == 2.0);

    // exactly-three-ones side constraint is infeasible on the 5-cycle:
    // count the feasible assignments with sum 3 by brute force
    uint64_t count3 = 0;
    for (uint32_t m = 0; m < 32; ++m) {
        bool ok = true;
        int ones = 0;
        for (int i = 0; i < 5; ++i) {
            if ((m >> i) & 1u) ++ones;
            if (((m >> i) & 1u) && ((m >> ((i + 1) % 5)) & 1u)) ok = false;
        }
        if (ok && ones == 3) ++count3;
    }
    CHECK(count3 == 0);
}

TEST_CASE("infeasible problems give the sentinel") {
    AssignmentProblem p;
    p.variables = {"a", "b"};
    p.domain = AssignmentDomain::Binary01;
    p.exclusivity_edges.emplace_back(0, 1);
    p.basis_cliques.push_back({0, 1});
    p.basis_cliques.push_back({0});
    p.basis_cliques.push_back({1});  // a and b both forced 1, contradicts exclusivity
    p.linear_weights.assign(2, 1.0);
    BoundResult r = max_objective(p);
    CHECK(r.argmax.empty());
    CHECK(r.max_value == -std::numeric_limits<double>::infinity());
    CHECK(count_satisfying(p) == 0);
}

TEST_CASE("peres-mermin assignment counts") {
    WitnessConstruction pm = build_peres_mermin();
    AssignmentProblem p;
    p.variables = pm.operator_labels;
    p.domain = AssignmentDomain::PlusMinus1;
    for (size_t k = 0; k < pm.products.size(); ++k)
        p.product_constraints.push_back({pm.products[k], k == 5 ? -1 : +1});
    CHECK(count_satisfying(p) == 0);

    // flipping the third-column sign makes the system satisfiable
    p.product_constraints[5].required_sign = +1;
    CHECK(count_satisfying(p) == 16);
}

TEST_CASE("yu-oh bounds") {
    WitnessConstruction c = build_yu_oh();

    AssignmentProblem quad;
    quad.variables = c.operator_labels;
    quad.domain = AssignmentDomain::PlusMinus1;
    quad.linear_weights.assign(13, 1.0);
    for (int i = 0; i < 13; ++i)
        for (int j = 0; j < 13; ++j)
            if (c.graph.edge(i, j)) quad.quadratic_terms.push_back({i, j, -0.25});
    BoundResult rq = max_objective(quad);
    CHECK(rq.max_value == 8.0);
    CHECK(rq.feasible_count == 8192);

    AssignmentProblem hs;
    hs.variables = c.operator_labels;
    hs.domain = AssignmentDomain::Binary01;
    for (int i = 0; i < 13; ++i)
        for (int j = i + 1; j < 13; ++j)
            if (c.graph.edge(i, j)) hs.exclusivity_edges.emplace_back(i, j);
    hs.basis_cliques = c.graph.basis_cliques;
    hs.linear_weights.assign(13, 0.0);
    for (int h : yu_oh_h_indices()) hs.linear_weights[static_cast<size_t>(h)] = 1.0;
    BoundResult rh = max_objective(hs);
    CHECK(rh.max_value == 1.0);

    // monotonicity: dropping the completeness constraint cannot lower the max
    AssignmentProblem loose = hs;
    loose.basis_cliques.clear();
    CHECK(max_objective(loose).max_value >= rh.max_value);
}

TEST_CASE("parallel sweep is bit-identical to serial") {
    WitnessConstruction c = build_yu_oh();
    AssignmentProblem quad;
    quad.variables = c.operator_labels;
    quad.domain = AssignmentDomain::PlusMinus1;
    quad.linear_weights.assign(13, 1.0);
    for (int i = 0; i < 13; ++i)
        for (int j = 0; j < 13; ++j)
            if (c.graph.edge(i, j)) quad.quadratic_terms.push_back({i, j, -0.25});

    BoundResult serial = max_objective(quad);
    setenv("CTX_THREADS", "3", 1);
    BoundResult parallel = max_objective(quad);
    unsetenv("CTX_THREADS");
    CHECK(serial.max_value == parallel.max_value);
    CHECK(serial.feasible_count == parallel.feasible_count);
    CHECK(serial.argmax == parallel.argmax);
}

TEST_CASE("guards") {
    AssignmentProblem p;
    for (int i = 0; i < 25; ++i) p.variables.push_back("v" + std::to_string(i));
    CHECK_THROWS_AS(max_objective(p), Error);
}
