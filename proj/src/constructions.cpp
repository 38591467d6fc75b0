#include "ctx/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ctx/hbar.hpp"
#include "ctx/kcsb_reference.hpp"
#include "ctx/phase_space.hpp"

namespace ctx {

namespace {

Complex w3_pow(int e) {
    double ang = 2.0 * std::numbers::pi * (((e % 3) + 3) % 3) / 3.0;
    return {std::cos(ang), std::sin(ang)};
}

void clique_extend(const std::vector<std::vector<bool>>& adj, std::vector<int>& current,
                   std::vector<int>& candidates, std::vector<std::vector<int>>& out) {
    bool extended = false;
    for (size_t ci = 0; ci < candidates.size(); ++ci) {
        int v = candidates[ci];
        std::vector<int> next;
        for (size_t cj = ci + 1; cj < candidates.size(); ++cj)
            if (adj[static_cast<size_t>(v)][static_cast<size_t>(candidates[cj])]) next.push_back(candidates[cj]);
        // v extends the clique; recurse with candidates after v to avoid duplicates
        current.push_back(v);
        clique_extend(adj, current, next, out);
        current.pop_back();
        extended = true;
    }
    if (!extended && !current.empty()) {
        // maximal iff no vertex anywhere extends it
        for (size_t v = 0; v < adj.size(); ++v) {
            if (std::find(current.begin(), current.end(), static_cast<int>(v)) != current.end()) continue;
            bool all = true;
            for (int u : current)
                if (!adj[v][static_cast<size_t>(u)]) { all = false; break; }
            if (all) return;
        }
        out.push_back(current);
    }
}

void check_commutation_matches_graph(const WitnessConstruction& c) {
    for (int i = 0; i < static_cast<int>(c.operators.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(c.operators.size()); ++j) {
            DenseOperator comm = c.operators[static_cast<size_t>(i)] * c.operators[static_cast<size_t>(j)] -
                                 c.operators[static_cast<size_t>(j)] * c.operators[static_cast<size_t>(i)];
            double nrm = comm.max_abs_diff(DenseOperator::zero(c.dimension));
            if (c.graph.edge(i, j) && nrm > 1e-12)
                throw Error(c.name + ": adjacent operators " + c.operator_labels[static_cast<size_t>(i)] + "," +
                            c.operator_labels[static_cast<size_t>(j)] + " fail to commute");
            if (!c.graph.edge(i, j) && nrm < 1e-9)
                throw Error(c.name + ": non-adjacent operators " + c.operator_labels[static_cast<size_t>(i)] + "," +
                            c.operator_labels[static_cast<size_t>(j)] + " unexpectedly commute");
        }
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const std::vector<std::vector<bool>>& adjacency) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    std::vector<int> candidates;
    for (size_t v = 0; v < adjacency.size(); ++v) candidates.push_back(static_cast<int>(v));
    clique_extend(adjacency, current, candidates, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<int, int>> WitnessConstruction::product_pairs() const {
    std::vector<std::pair<int, int>> ps;
    for (const auto& p : products) {
        if (p.size() != 2) throw Error(name + ": products are not pairs");
        ps.emplace_back(p[0], p[1]);
    }
    return ps;
}

std::vector<std::vector<double>> kcsb_seed_vectors() {
    const double c2 = std::cos(std::numbers::pi / 5) / (1 + std::cos(std::numbers::pi / 5));
    const double ct = std::sqrt(c2), st = std::sqrt(1 - c2);
    std::vector<std::vector<double>> vs;
    for (int j = 1; j <= 5; ++j) {
        double psi = 4 * std::numbers::pi * j / 5;
        vs.push_back({ct, st * std::cos(psi), st * std::sin(psi)});
    }
    return vs;
}

std::vector<LabeledState> stabilizer_states_qutrit() {
    auto ket = [](Complex a, Complex b, Complex c) {
        StateVector v(3);
        double nrm = std::sqrt(std::norm(a) + std::norm(b) + std::norm(c));
        v.amp = {a / nrm, b / nrm, c / nrm};
        return v;
    };
    const Complex w = w3_pow(1), w2 = w3_pow(2), one = 1;
    std::vector<LabeledState> out;
    out.push_back({"phi1", ket(1, 0, 0)});
    out.push_back({"phi2", ket(0, 1, 0)});
    out.push_back({"phi3", ket(0, 0, 1)});
    out.push_back({"phi1+phi2+phi3", ket(one, one, one)});
    out.push_back({"phi1+w*phi2+w2*phi3", ket(one, w, w2)});
    out.push_back({"phi1+w2*phi2+w*phi3", ket(one, w2, w)});
    out.push_back({"phi1+w2*phi2+w2*phi3", ket(one, w2, w2)});
    out.push_back({"w2*phi1+w2*phi2+phi3", ket(w2, w2, one)});
    out.push_back({"w2*phi1+phi2+w2*phi3", ket(w2, one, w2)});
    out.push_back({"w*phi1+w*phi2+phi3", ket(w, w, one)});
    out.push_back({"phi1+w*phi2+w*phi3", ket(one, w, w)});
    out.push_back({"w*phi1+phi2+w*phi3", ket(w, one, w)});
    return out;
}

namespace {

const std::vector<std::vector<int>> kKcsbPairs = {{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4},
                                                  {2, 0}, {3, 0}, {3, 1}, {4, 1}, {4, 2}};

struct KcsbCandidate {
    std::vector<int> perm;  // construction label k -> seed index
    std::vector<DenseOperator> projectors;
};

// Convention frame: phi3 = the pentagon axis, phi1 = the normalized doublet
// component of the ray carrying label 2, phi2 = +-(90 degree doublet
// rotation of phi1). Every admissible convention is one of these twenty.
KcsbCandidate make_candidate(const std::vector<std::vector<double>>& seeds, int shift, bool reflect,
                             int s2) {
    KcsbCandidate cand;
    for (int k = 0; k < 5; ++k) cand.perm.push_back(((reflect ? 4 - k : k) + shift) % 5);
    const auto& u = seeds[static_cast<size_t>(cand.perm[1])];
    double dn = std::hypot(u[1], u[2]);
    // basis columns in the seed frame
    std::vector<std::vector<double>> cols = {
        {0, u[1] / dn, u[2] / dn}, {0, -s2 * u[2] / dn, s2 * u[1] / dn}, {1, 0, 0}};
    for (int k = 0; k < 5; ++k) {
        const auto& v = seeds[static_cast<size_t>(cand.perm[k])];
        std::vector<Complex> coords(3);
        for (int c = 0; c < 3; ++c)
            coords[static_cast<size_t>(c)] = cols[static_cast<size_t>(c)][0] * v[0] +
                                             cols[static_cast<size_t>(c)][1] * v[1] +
                                             cols[static_cast<size_t>(c)][2] * v[2];
        cand.projectors.push_back(projector_from_ray(coords));
    }
    return cand;
}

bool matches_expectation_table(const std::vector<DenseOperator>& P,
                               const std::vector<LabeledState>& states) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& pr : kKcsbPairs) pairs.emplace_back(pr[0], pr[1]);
    HbarSplitOdd split = witness_split(P, pairs, 3, 1);
    auto table = kcsb_ref::expectation_table();
    for (size_t s = 0; s < states.size(); ++s) {
        ContextualityReport r = contextuality_report(states[s].state, states[s].label, split, 2.0);
        if (std::abs(r.exact_expectation - table[s].exact) > tol().golden) return false;
        if (std::abs(r.h0_contribution - table[s].h0) > tol().golden) return false;
        if (std::abs(r.correction_contribution - table[s].correction()) > tol().golden) return false;
    }
    return true;
}

bool matches_projector_grids(const std::vector<DenseOperator>& P) {
    auto grids = kcsb_ref::projector_grids();
    for (int k = 0; k < 5; ++k) {
        WeylSymbolOdd W = wigner_state(P[static_cast<size_t>(k)], 3, 1);
        for (int xp = 0; xp < 3; ++xp)
            for (int xq = 0; xq < 3; ++xq) {
                Complex got = W.at_flat(xp, xq);
                if (std::abs(got.imag()) > tol().golden) return false;
                if (std::abs(got.real() - grids[static_cast<size_t>(k)][static_cast<size_t>(xp)][static_cast<size_t>(xq)]) >
                    tol().golden)
                    return false;
            }
    }
    return true;
}

}  // namespace

WitnessConstruction build_kcsb() {
    auto seeds = kcsb_seed_vectors();
    auto states = stabilizer_states_qutrit();

    std::optional<KcsbCandidate> chosen;
    bool grids_ok = false;
    for (int shift = 0; shift < 5 && !grids_ok; ++shift)
        for (bool reflect : {false, true}) {
            if (grids_ok) break;
            for (int s2 : {1, -1}) {
                KcsbCandidate cand = make_candidate(seeds, shift, reflect, s2);
                if (!matches_expectation_table(cand.projectors, states)) continue;
                if (!chosen) chosen = cand;
                if (matches_projector_grids(cand.projectors)) {
                    chosen = cand;
                    grids_ok = true;
                    break;
                }
            }
        }
    if (!chosen)
        throw BasisFitError(
            "kcsb: no basis convention reproduces the reference expectation table");

    WitnessConstruction c;
    c.name = "kcsb";
    c.dimension = 3;
    for (int k = 1; k <= 5; ++k) c.operator_labels.push_back("Pi" + std::to_string(k));
    c.operators = chosen->projectors;
    c.products = kKcsbPairs;
    c.classical_bound = 2.0;
    c.quantum_bound = 5.0 - std::sqrt(5.0);
    c.sum_classical_bound = 2.0;
    c.sum_quantum_bound = std::sqrt(5.0);
    c.appendix_grids_matched = grids_ok;
    c.kcsb_relabeling = chosen->perm;
    c.state_family = states;

    c.graph.labels = c.operator_labels;
    c.graph.adjacency.assign(5, std::vector<bool>(5, false));
    for (int i = 0; i < 5; ++i) {
        c.graph.adjacency[static_cast<size_t>(i)][static_cast<size_t>((i + 1) % 5)] = true;
        c.graph.adjacency[static_cast<size_t>((i + 1) % 5)][static_cast<size_t>(i)] = true;
    }
    // a pentagon has no triangle, hence no complete-basis clique in d=3
    c.graph.basis_cliques = {};

    // adjacency = orthogonality = vanishing products, checked
    for (int i = 0; i < 5; ++i) {
        int j = (i + 1) % 5;
        DenseOperator prod = c.operators[static_cast<size_t>(i)] * c.operators[static_cast<size_t>(j)];
        if (prod.max_abs_diff(DenseOperator::zero(3)) > 1e-12)
            throw BasisFitError("kcsb: adjacent projectors are not orthogonal");
    }
    check_commutation_matches_graph(c);
    return c;
}

WitnessConstruction build_peres_mermin() {
    WitnessConstruction c;
    c.name = "peres-mermin";
    c.dimension = 4;
    c.operator_labels = {"XI", "IX", "XX", "IZ", "ZI", "ZZ", "XZ", "ZX", "YY"};
    for (const auto& s : c.operator_labels) c.operators.push_back(pauli_string(s));
    c.products = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8},   // rows
                  {0, 3, 6}, {1, 4, 7}, {2, 5, 8}};  // columns
    c.classical_bound = 0;
    c.quantum_bound = 0;

    c.graph.labels = c.operator_labels;
    c.graph.adjacency.assign(9, std::vector<bool>(9, false));
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
            if (i != j && (i / 3 == j / 3 || i % 3 == j % 3))
                c.graph.adjacency[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
    c.graph.basis_cliques = c.products;  // the six completely-commuting contexts
    check_commutation_matches_graph(c);
    return c;
}

namespace {

const std::vector<std::pair<std::string, std::vector<int>>> kYuOhRays = {
    {"y1-", {0, 1, -1}}, {"y2-", {1, 0, -1}}, {"y3-", {1, -1, 0}},
    {"y1+", {0, 1, 1}},  {"y2+", {1, 0, 1}},  {"y3+", {1, 1, 0}},
    {"h0", {1, 1, 1}},   {"h1", {-1, 1, 1}},  {"h2", {1, -1, 1}},  {"h3", {1, 1, -1}},
    {"z1", {1, 0, 0}},   {"z2", {0, 1, 0}},   {"z3", {0, 0, 1}},
};

}  // namespace

std::vector<int> yu_oh_h_indices() { return {6, 7, 8, 9}; }

WitnessConstruction build_yu_oh() {
    WitnessConstruction c;
    c.name = "yu-oh";
    c.dimension = 3;
    for (const auto& [label, ray] : kYuOhRays) {
        c.operator_labels.push_back(label);
        std::vector<Complex> v(ray.begin(), ray.end());
        c.operators.push_back(projector_from_ray(v));
    }
    for (int a : yu_oh_h_indices())
        for (int b : yu_oh_h_indices()) c.products.push_back({a, b});
    c.classical_bound = 1.0;       // squared h-sum inherits the h-sum bound
    c.quantum_bound = 16.0 / 9.0;
    c.sum_classical_bound = 1.0;
    c.sum_quantum_bound = 4.0 / 3.0;
    c.state_family = stabilizer_states_qutrit();

    c.graph.labels = c.operator_labels;
    c.graph.adjacency.assign(13, std::vector<bool>(13, false));
    for (int i = 0; i < 13; ++i)
        for (int j = 0; j < 13; ++j) {
            if (i == j) continue;
            const auto& a = kYuOhRays[static_cast<size_t>(i)].second;
            const auto& b = kYuOhRays[static_cast<size_t>(j)].second;
            int dot = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
            c.graph.adjacency[static_cast<size_t>(i)][static_cast<size_t>(j)] = (dot == 0);
        }
    for (const auto& clique : maximal_cliques(c.graph.adjacency))
        if (clique.size() == 3) c.graph.basis_cliques.push_back(clique);
    check_commutation_matches_graph(c);
    return c;
}

}  // namespace ctx
