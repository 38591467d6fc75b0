#include "ctx/phase_space.hpp"

#include <cmath>
#include <numbers>

namespace ctx {

namespace {

int mod(int x, int d) { return ((x % d) + d) % d; }

Complex omega_pow(int d, int e) {
    double ang = 2.0 * std::numbers::pi * mod(e, d) / d;
    return {std::cos(ang), std::sin(ang)};
}

void require_odd(int d) {
    if (d < 3 || d % 2 == 0)
        throw Error("odd-d Weyl grid requires odd d >= 3 (got d=" + std::to_string(d) + ")");
}

int ipow(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

int symplectic_pairing(const PhasePoint& a, const PhasePoint& b) {
    if (a.d != b.d || a.n() != b.n()) throw DimensionError("symplectic_pairing: grid mismatch");
    int s = 0;
    for (int j = 0; j < a.n(); ++j) s += a.q[j] * b.p[j] - a.p[j] * b.q[j];
    return mod(s, a.d);
}

WeylSymbolOdd::WeylSymbolOdd(int d_, int n_, SymbolNorm nm) : d(d_), n(n_), norm(nm) {
    require_odd(d_);
    v.assign(static_cast<size_t>(ipow(d, 2 * n)), Complex{});
}

int WeylSymbolOdd::side() const { return ipow(d, n); }

Complex WeylSymbolOdd::value(const PhasePoint& x) const {
    if (x.d != d || x.n() != n) throw DimensionError("symbol value: grid mismatch");
    return at_flat(flatten(x.p, d), flatten(x.q, d));
}

Complex WeylSymbolOdd::sum() const {
    Complex s = 0;
    for (const auto& x : v) s += x;
    return s;
}

double WeylSymbolOdd::max_abs_imag() const {
    double m = 0;
    for (const auto& x : v) m = std::max(m, std::abs(x.imag()));
    return m;
}

std::vector<int> unflatten(int flat, int d, int n) {
    std::vector<int> t(n);
    for (int j = n - 1; j >= 0; --j) {
        t[j] = flat % d;
        flat /= d;
    }
    return t;
}

int flatten(const std::vector<int>& t, int d) {
    int f = 0;
    for (int x : t) f = f * d + mod(x, d);
    return f;
}

DenseOperator boost_shift(int d, int exponent_p, int exponent_q) {
    require_odd(d);
    int ep = mod(exponent_p, d), eq = mod(exponent_q, d);
    DenseOperator m(d);
    // Z^{ep} X^{eq} |q'> = omega^{ep (q'+eq)} |q'+eq>
    for (int qp = 0; qp < d; ++qp) m.at(mod(qp + eq, d), qp) = omega_pow(d, ep * (qp + eq));
    return m;
}

DenseOperator translation_op(const PhasePoint& lambda) {
    require_odd(lambda.d);
    int d = lambda.d;
    int inv2 = (d + 1) / 2;
    DenseOperator m(1);
    m.at(0, 0) = 1;
    for (int j = 0; j < lambda.n(); ++j) {
        DenseOperator reg = boost_shift(d, lambda.p[j], lambda.q[j]);
        reg *= omega_pow(d, -lambda.p[j] * lambda.q[j] * inv2);
        m = kron(m, reg);
    }
    return m;
}

DenseOperator reflection_op(const PhasePoint& x) {
    require_odd(x.d);
    int d = x.d, n = x.n();
    // R factorizes over registers; build per register from the defining sum.
    DenseOperator m(1);
    m.at(0, 0) = 1;
    for (int j = 0; j < n; ++j) {
        DenseOperator reg(d);
        for (int sp = 0; sp < d; ++sp)
            for (int sq = 0; sq < d; ++sq) {
                PhasePoint xi = PhasePoint::single(d, sp, sq);
                PhasePoint xj = PhasePoint::single(d, x.p[j], x.q[j]);
                DenseOperator t = translation_op(xi);
                t *= omega_pow(d, symplectic_pairing(xi, xj));
                reg += t;
            }
        reg *= Complex(1.0 / d, 0);
        m = kron(m, reg);
    }
    return m;
}

namespace {

WeylSymbolOdd transform(const DenseOperator& A, int d, int n, SymbolNorm norm) {
    require_odd(d);
    int side = ipow(d, n);
    if (A.dim != side)
        throw DimensionError("Weyl transform: operator dim " + std::to_string(A.dim) +
                             " does not match d^n = " + std::to_string(side));
    WeylSymbolOdd W(d, n, norm);
    double scale = (norm == SymbolNorm::State) ? 1.0 / side : 1.0;
    for (int pf = 0; pf < side; ++pf)
        for (int qf = 0; qf < side; ++qf) {
            PhasePoint x{unflatten(pf, d, n), unflatten(qf, d, n), d};
            W.at_flat(pf, qf) = (A * reflection_op(x)).trace() * scale;
        }
    return W;
}

}  // namespace

WeylSymbolOdd weyl_observable(const DenseOperator& A, int d, int n) {
    return transform(A, d, n, SymbolNorm::Observable);
}

WeylSymbolOdd wigner_state(const DenseOperator& rho, int d, int n) {
    if (!rho.is_hermitian(1e-10) || std::abs(rho.trace() - Complex(1, 0)) > 1e-10)
        throw Error("wigner_state: input is not a unit-trace Hermitian density matrix");
    EigResult e = eig_hermitian(rho);
    for (double lam : e.values)
        if (lam < -1e-10) throw Error("wigner_state: density matrix has negative eigenvalue");
    return transform(rho, d, n, SymbolNorm::State);
}

DenseOperator inverse_weyl(const WeylSymbolOdd& W) {
    int side = W.side();
    DenseOperator A(side);
    for (int pf = 0; pf < side; ++pf)
        for (int qf = 0; qf < side; ++qf) {
            PhasePoint x{unflatten(pf, W.d, W.n), unflatten(qf, W.d, W.n), W.d};
            DenseOperator r = reflection_op(x);
            r *= W.at_flat(pf, qf);
            A += r;
        }
    if (W.norm == SymbolNorm::Observable) A *= Complex(1.0 / side, 0);
    return A;
}

double phase_space_expectation(const WeylSymbolOdd& W_A, const WeylSymbolOdd& W_rho) {
    if (W_A.d != W_rho.d || W_A.n != W_rho.n)
        throw DimensionError("phase_space_expectation: grid mismatch");
    if (W_A.norm != SymbolNorm::Observable || W_rho.norm != SymbolNorm::State)
        throw Error("phase_space_expectation: expects (observable, state) normalization pair");
    Complex s = 0;
    for (size_t i = 0; i < W_A.v.size(); ++i) s += W_A.v[i] * W_rho.v[i];
    return s.real();
}

std::vector<double> marginal(const WeylSymbolOdd& W_rho, Axis axis) {
    if (W_rho.norm != SymbolNorm::State) throw Error("marginal: expects a state-normalized symbol");
    int side = W_rho.side();
    std::vector<double> out(static_cast<size_t>(side), 0.0);
    for (int pf = 0; pf < side; ++pf)
        for (int qf = 0; qf < side; ++qf)
            out[static_cast<size_t>(axis == Axis::P ? pf : qf)] += W_rho.at_flat(pf, qf).real();
    return out;
}

}  // namespace ctx
