#include "ctx/hbar.hpp"

#include <cmath>

namespace ctx {

namespace {

double cell_volume(const WeylSymbolOdd& s) { return static_cast<double>(s.side()); }

}  // namespace

WeylSymbolOdd h0_product(const std::vector<WeylSymbolOdd>& symbols) {
    if (symbols.size() < 2) throw Error("h0_product: need at least two symbols");
    const auto& first = symbols.front();
    for (const auto& s : symbols) {
        if (s.d != first.d || s.n != first.n) throw DimensionError("h0_product: grid mismatch");
        if (s.norm != first.norm) throw Error("h0_product: mixed symbol normalizations");
    }
    WeylSymbolOdd out = first;
    double junction = (first.norm == SymbolNorm::Observable) ? 1.0 / cell_volume(first) : 1.0;
    for (size_t k = 1; k < symbols.size(); ++k)
        for (size_t i = 0; i < out.v.size(); ++i) out.v[i] *= junction * symbols[k].v[i];
    return out;
}

GrassmannPoly h0_product(const std::vector<GrassmannPoly>& symbols) {
    if (symbols.size() < 2) throw Error("h0_product: need at least two symbols");
    GrassmannPoly out = symbols.front();
    for (size_t k = 1; k < symbols.size(); ++k) out = g_mul(out, symbols[k]);
    return out;
}

HbarSplitOdd decompose_product(const DenseOperator& A, const DenseOperator& B, int d, int n) {
    if (A.dim != B.dim) throw DimensionError("decompose_product: dimension mismatch");
    HbarSplitOdd s;
    s.exact = weyl_observable(A * B, d, n);
    s.h0 = h0_product({weyl_observable(A, d, n), weyl_observable(B, d, n)});
    s.correction = s.exact;
    for (size_t i = 0; i < s.correction.v.size(); ++i) s.correction.v[i] -= s.h0.v[i];
    return s;
}

HbarSplitQubit decompose_product(const DenseOperator& A, const DenseOperator& B,
                                 const QubitWeylConvention& conv) {
    if (A.dim != B.dim) throw DimensionError("decompose_product: dimension mismatch");
    HbarSplitQubit s;
    GrassmannPoly wa = qubit_weyl(A, conv), wb = qubit_weyl(B, conv);
    s.exact = groenewold_product(wa, wb, conv);
    s.h0 = h0_product({wa, wb});
    s.correction = s.exact - s.h0;
    return s;
}

HbarSplitOdd witness_split(const std::vector<DenseOperator>& operators,
                           const std::vector<std::pair<int, int>>& pairs, int d, int n) {
    if (pairs.empty()) throw Error("witness_split: empty pair list");
    std::vector<WeylSymbolOdd> W;
    W.reserve(operators.size());
    for (const auto& op : operators) W.push_back(weyl_observable(op, d, n));

    HbarSplitOdd acc;
    acc.exact = WeylSymbolOdd(d, n, SymbolNorm::Observable);
    acc.h0 = WeylSymbolOdd(d, n, SymbolNorm::Observable);
    for (auto [i, j] : pairs) {
        if (i < 0 || j < 0 || i >= static_cast<int>(operators.size()) ||
            j >= static_cast<int>(operators.size()))
            throw Error("witness_split: pair index out of range");
        WeylSymbolOdd ex = weyl_observable(operators[static_cast<size_t>(i)] * operators[static_cast<size_t>(j)], d, n);
        WeylSymbolOdd h0 = h0_product({W[static_cast<size_t>(i)], W[static_cast<size_t>(j)]});
        for (size_t k = 0; k < ex.v.size(); ++k) {
            acc.exact.v[k] += ex.v[k];
            acc.h0.v[k] += h0.v[k];
        }
    }
    acc.correction = acc.exact;
    for (size_t k = 0; k < acc.correction.v.size(); ++k) acc.correction.v[k] -= acc.h0.v[k];
    return acc;
}

ContextualityReport contextuality_report(const StateVector& psi, const std::string& label,
                                         const HbarSplitOdd& split, double classical_bound) {
    if (psi.dim != split.exact.side()) throw DimensionError("contextuality_report: dimension mismatch");
    WeylSymbolOdd wrho = wigner_state(outer(psi, psi), split.exact.d, split.exact.n);
    ContextualityReport r;
    r.state_label = label;
    r.exact_expectation = phase_space_expectation(split.exact, wrho);
    r.h0_contribution = phase_space_expectation(split.h0, wrho);
    r.correction_contribution = phase_space_expectation(split.correction, wrho);
    r.classical_bound = classical_bound;
    r.contextual = r.exact_expectation > classical_bound + tol().verdict;
    r.h0_exceeds_bound = r.h0_contribution > classical_bound + tol().verdict;
    r.correction_exceeds_bound = r.correction_contribution > classical_bound + tol().verdict;
    return r;
}

}  // namespace ctx
