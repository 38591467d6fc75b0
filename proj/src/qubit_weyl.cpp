#include "ctx/qubit_weyl.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace ctx {

namespace {

constexpr uint32_t kMaskPQ = 0b011;
constexpr uint32_t kMaskPR = 0b101;
constexpr uint32_t kMaskQR = 0b110;

int qubits_for_dim(int dim) {
    int n = 0;
    while ((1 << n) < dim) ++n;
    if ((1 << n) != dim) throw DimensionError("qubit Weyl: dimension is not a power of 2");
    return n;
}

// all Pauli strings of length n in lexicographic I<X<Y<Z order
std::vector<std::string> pauli_labels(int n) {
    std::vector<std::string> out{""};
    for (int j = 0; j < n; ++j) {
        std::vector<std::string> next;
        for (const auto& s : out)
            for (char c : {'I', 'X', 'Y', 'Z'}) next.push_back(s + c);
        out = next;
    }
    return out;
}

GrassmannPoly one_qubit_symbol(char p, int qubit, int gens, const QubitWeylConvention& conv) {
    if (p == 'I') return GrassmannPoly::scalar(gens, 1.0);
    int idx = (p == 'X') ? 0 : (p == 'Y') ? 1 : 2;
    const auto& b = conv.pauli_to_bilinear[static_cast<size_t>(idx)];
    return GrassmannPoly::monomial(gens, b.mask << (3 * qubit), b.coeff);
}

GrassmannPoly string_symbol(const std::string& s, const QubitWeylConvention& conv) {
    int n = static_cast<int>(s.size());
    GrassmannPoly g = GrassmannPoly::scalar(3 * n, 1.0);
    for (int j = 0; j < n; ++j) g = g_mul(g, one_qubit_symbol(s[static_cast<size_t>(j)], j, 3 * n, conv));
    return g;
}

// Berezin order for the full pairing integral: d xi_r d xi_q d xi_p per
// qubit, last qubit innermost (descending generator index).
std::vector<int> full_order(int n) {
    std::vector<int> ord;
    for (int g = 3 * n - 1; g >= 0; --g) ord.push_back(g);
    return ord;
}

Complex pairing_integral(const GrassmannPoly& a, const GrassmannPoly& b, int n) {
    return berezin(g_mul(a, b), full_order(n)).coeff(0);
}

Complex pow_int(Complex z, int n) {
    Complex r = 1;
    while (n-- > 0) r *= z;
    return r;
}

// dual of one Pauli string: the complementary monomial, coefficient fixed
// by pc^n * int W(P) D(P) = tr(P P) = 2^n
GrassmannPoly dual_of_string(const std::string& s, const QubitWeylConvention& conv) {
    int n = static_cast<int>(s.size());
    GrassmannPoly w = string_symbol(s, conv);
    if (w.terms.size() != 1) throw Error("dual fit: Pauli symbol is not a single monomial");
    auto [mask, wc] = *w.terms.begin();
    uint32_t comp = ((1u << (3 * n)) - 1u) & ~mask;
    Complex val = pairing_integral(GrassmannPoly::monomial(3 * n, mask, wc),
                                   GrassmannPoly::monomial(3 * n, comp, 1.0), n);
    Complex x = std::pow(2.0, n) / (pow_int(conv.pairing_constant, n) * val);
    return GrassmannPoly::monomial(3 * n, comp, x);
}

bool convention_passes(const QubitWeylConvention& cand) {
    // (i) displayed state-symbol identity: the operator
    //     1/2 (1 + alpha i sig_r sig_q + beta i sig_p sig_q + gamma i sig_p sig_r)
    //     with (sig_p, sig_q, sig_r) = (X, Y, Z) must map to the polynomial
    //     1/2 (1 + alpha i xi_r xi_q + beta i xi_p xi_q + gamma i xi_p xi_r).
    const double alpha = 0.37, beta = -0.22, gamma = 0.58;
    const Complex i{0, 1};
    DenseOperator X = pauli('X'), Y = pauli('Y'), Z = pauli('Z');
    DenseOperator op = DenseOperator::identity(2) + (alpha * i) * (Z * Y) + (beta * i) * (X * Y) +
                       (gamma * i) * (X * Z);
    op *= 0.5;

    GrassmannPoly want(3);
    want += GrassmannPoly::scalar(3, 0.5);
    // i xi_r xi_q = -i xi_q xi_r, etc., written on canonical ascending masks
    want += GrassmannPoly::monomial(3, kMaskQR, -0.5 * i * alpha);
    want += GrassmannPoly::monomial(3, kMaskPQ, 0.5 * i * beta);
    want += GrassmannPoly::monomial(3, kMaskPR, 0.5 * i * gamma);

    GrassmannPoly got = qubit_weyl(op, cand);
    if (got.max_abs_diff(want) > 1e-12) return false;

    // (iii) trace-oracle pairing on the full one-qubit basis
    for (char a : {'I', 'X', 'Y', 'Z'})
        for (char b : {'I', 'X', 'Y', 'Z'}) {
            DenseOperator A = pauli(a), B = pauli(b);
            Complex tr = (A * B).trace();
            GrassmannPoly wa = string_symbol(std::string(1, a), cand);
            GrassmannPoly db = dual_of_string(std::string(1, b), cand);
            Complex got_tr = pow_int(cand.pairing_constant, 1) * pairing_integral(wa, db, 1);
            if (std::abs(got_tr - tr) > 1e-12) return false;
        }

    // (ii) marginal identity: pairing the Bloch state
    //      1/2 (I + alpha sig) with the sig-eigenstate duals gives
    //      (1 +- alpha)/2, and those duals have the (i xi xi xi +- xi)/2 shape
    DenseOperator plus = DenseOperator::identity(2) + alpha * Z;
    plus *= 0.5;
    DenseOperator proj0(2), proj1(2);
    proj0.at(0, 0) = 1;
    proj1.at(1, 1) = 1;
    for (auto [proj, wantv] : {std::pair{proj0, (1 + alpha) / 2}, std::pair{proj1, (1 - alpha) / 2}}) {
        GrassmannPoly d = dual_state_symbol(proj, cand);
        if (d.terms.size() != 2) return false;
        for (const auto& [m, c] : d.terms)
            if (std::abs(std::abs(c) - 0.5) > 1e-12) return false;
        double got_m = grassmann_expectation(qubit_weyl(plus, cand), d, cand);
        if (std::abs(got_m - wantv) > 1e-12) return false;
    }
    return true;
}

}  // namespace

int symbol_qubits(const GrassmannPoly& s) {
    if (s.num_generators % 3 != 0)
        throw DimensionError("qubit symbol must have 3 generators per qubit");
    return s.num_generators / 3;
}

QubitWeylConvention QubitWeylConvention::fit(double hbar) {
    if (hbar <= 0) throw Error("convention fit: hbar must be positive");
    const Complex i{0, 1};
    std::array<uint32_t, 3> masks{kMaskQR, kMaskPR, kMaskPQ};
    std::array<int, 3> perm{0, 1, 2};
    std::vector<QubitWeylConvention> survivors;
    std::sort(perm.begin(), perm.end());
    do {
        for (int signs = 0; signs < 8; ++signs) {
            QubitWeylConvention cand;
            cand.hbar = hbar;
            for (int k = 0; k < 3; ++k) {
                double s = ((signs >> k) & 1) ? -1.0 : 1.0;
                cand.pauli_to_bilinear[static_cast<size_t>(k)] = {masks[static_cast<size_t>(perm[static_cast<size_t>(k)])],
                                                                  s * i};
            }
            // a wrong sign table can fail through an exception (non-real
            // pairing); either way the candidate is rejected
            bool ok = false;
            try {
                ok = convention_passes(cand);
            } catch (const Error&) {
                ok = false;
            }
            if (ok) survivors.push_back(cand);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (survivors.empty())
        throw Error("qubit convention fit: no sign assignment satisfies the oracle constraints");
    if (survivors.size() > 1)
        throw Error("qubit convention fit: sign assignment is not unique");
    return survivors.front();
}

GrassmannPoly qubit_weyl(const DenseOperator& A, const QubitWeylConvention& conv) {
    int n = qubits_for_dim(A.dim);
    GrassmannPoly out(3 * n);
    for (const auto& label : pauli_labels(n)) {
        DenseOperator P = pauli_string(label);
        Complex coef = (P.adjoint() * A).trace() / std::pow(2.0, n);
        if (std::abs(coef) < 1e-300) continue;
        GrassmannPoly term = string_symbol(label, conv);
        term *= coef;
        out += term;
    }
    return out;
}

GrassmannPoly dual_state_symbol(const DenseOperator& rho, const QubitWeylConvention& conv) {
    int n = qubits_for_dim(rho.dim);
    if (!rho.is_hermitian(1e-10)) throw Error("dual_state_symbol: input not Hermitian");
    GrassmannPoly out(3 * n);
    for (const auto& label : pauli_labels(n)) {
        DenseOperator P = pauli_string(label);
        Complex coef = (P.adjoint() * rho).trace() / std::pow(2.0, n);
        if (std::abs(coef) < 1e-300) continue;
        GrassmannPoly term = dual_of_string(label, conv);
        term *= coef;
        out += term;
    }
    return out;
}

namespace {

// Operator symbols carry even degree inside every qubit's generator triple;
// dual symbols carry odd degree in every triple (so for n qubits the dual's
// total grade is the parity of n).
bool blocks_have_parity(const GrassmannPoly& s, int n, int parity) {
    for (const auto& [m, c] : s.terms) {
        if (c == Complex{}) continue;
        for (int j = 0; j < n; ++j)
            if (std::popcount((m >> (3 * j)) & 0b111u) % 2 != parity) return false;
    }
    return true;
}

}  // namespace

double grassmann_expectation(const GrassmannPoly& W_O, const GrassmannPoly& W_rho_dual,
                             const QubitWeylConvention& conv) {
    if (W_O.num_generators != W_rho_dual.num_generators)
        throw DimensionError("grassmann_expectation: algebra mismatch");
    int n = symbol_qubits(W_O);
    if (!blocks_have_parity(W_O, n, 0) || !blocks_have_parity(W_rho_dual, n, 1))
        throw Error("grassmann_expectation: needs an even observable symbol and an odd dual symbol");
    Complex val = pow_int(conv.pairing_constant, n) * pairing_integral(W_O, W_rho_dual, n);
    if (std::abs(val.imag()) > 1e-9)
        throw Error("grassmann_expectation: pairing produced a non-real value");
    return val.real();
}

GrassmannPoly groenewold_product(const GrassmannPoly& W_A, const GrassmannPoly& W_B,
                                 const QubitWeylConvention& conv) {
    if (W_A.num_generators != W_B.num_generators)
        throw DimensionError("groenewold_product: algebra mismatch");
    int n = symbol_qubits(W_A);
    int N = 3 * n;
    if (3 * N > 30) throw Error("groenewold_product: too many qubits for the mask width");

    // enlarged algebra: block 0 = external xi, block 1 = xi1, block 2 = xi2
    auto lift = [&](const GrassmannPoly& s, int block, double unit_to_hbar) {
        GrassmannPoly out(3 * N);
        for (const auto& [m, c] : s.terms) {
            uint32_t nm = m << (block * N);
            int halfdeg = std::popcount(m) / 2;
            out.terms[nm] = c * std::pow(unit_to_hbar, halfdeg);
        }
        return out;
    };
    double to_hbar = 2.0 / conv.hbar;  // unit-normalized -> hbar-scaled coefficients
    GrassmannPoly A1 = lift(W_A, 1, to_hbar);
    GrassmannPoly B2 = lift(W_B, 2, to_hbar);

    // kernel exp((2/hbar) sum_k (xi1_k xi2_k + xi2_k xi_k + xi_k xi1_k)):
    // every bilinear squares to zero and they commute, so the exponential
    // is the finite product of (1 + term)
    GrassmannPoly kernel = GrassmannPoly::scalar(3 * N, 1.0);
    auto bil = [&](int i, int j, double c) {
        // c * xi_i xi_j with i, j arbitrary order; canonical mask plus sign
        double sgn = (i < j) ? 1.0 : -1.0;
        int lo = std::min(i, j), hi = std::max(i, j);
        return GrassmannPoly::monomial(3 * N, (1u << lo) | (1u << hi), sgn * c);
    };
    for (int k = 0; k < N; ++k) {
        int x = k, x1 = N + k, x2 = 2 * N + k;
        for (auto [i, j] : {std::pair{x1, x2}, std::pair{x2, x}, std::pair{x, x1}}) {
            GrassmannPoly f = GrassmannPoly::scalar(3 * N, 1.0);
            f += bil(i, j, 2.0 / conv.hbar);
            kernel = g_mul(kernel, f);
        }
    }

    GrassmannPoly integrand = g_mul(g_mul(kernel, A1), B2);

    // measure grouped per qubit: d^3 xi1^(j) d^3 xi2^(j) together (each
    // 6-form is even, so the per-qubit groups commute); within a group
    // xi_r, xi_q, xi_p innermost-first
    std::vector<int> order;
    for (int j = n - 1; j >= 0; --j) {
        for (int blk : {1, 2})
            for (int comp : {2, 1, 0}) order.push_back(blk * N + 3 * j + comp);
    }
    GrassmannPoly reduced = berezin(integrand, order);

    GrassmannPoly out(N);
    double pref = std::pow(conv.hbar / 2.0, N);
    double from_hbar = conv.hbar / 2.0;  // hbar-scaled -> unit-normalized
    for (const auto& [m, c] : reduced.terms) {
        if (m >= (1u << N)) throw Error("groenewold_product: stray auxiliary generator");
        out.terms[m] = c * pref * std::pow(from_hbar, std::popcount(m) / 2);
    }
    return out.prune();
}

}  // namespace ctx
