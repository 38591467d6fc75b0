#include "ctx/dense.hpp"

#include <algorithm>
#include <cmath>

namespace ctx {

DenseOperator DenseOperator::identity(int d) {
    DenseOperator m(d);
    for (int i = 0; i < d; ++i) m.at(i, i) = 1.0;
    return m;
}

DenseOperator DenseOperator::adjoint() const {
    DenseOperator m(dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) m.at(r, c) = std::conj(at(c, r));
    return m;
}

Complex DenseOperator::trace() const {
    Complex t = 0;
    for (int i = 0; i < dim; ++i) t += at(i, i);
    return t;
}

double DenseOperator::max_abs_diff(const DenseOperator& o) const {
    if (dim != o.dim) throw DimensionError("max_abs_diff: dimension mismatch");
    double m = 0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - o.a[i]));
    return m;
}

bool DenseOperator::is_hermitian(double eps) const {
    for (int r = 0; r < dim; ++r)
        for (int c = r; c < dim; ++c)
            if (std::abs(at(r, c) - std::conj(at(c, r))) > eps) return false;
    return true;
}

bool DenseOperator::is_projector(double eps) const {
    DenseOperator sq = (*this) * (*this);
    if (sq.max_abs_diff(*this) > eps) return false;
    Complex t = trace();
    return std::abs(t.imag()) <= eps && std::abs(t.real() - std::round(t.real())) <= eps;
}

DenseOperator& DenseOperator::operator+=(const DenseOperator& o) {
    if (dim != o.dim) throw DimensionError("operator+: dimension mismatch");
    for (size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
    return *this;
}

DenseOperator& DenseOperator::operator-=(const DenseOperator& o) {
    if (dim != o.dim) throw DimensionError("operator-: dimension mismatch");
    for (size_t i = 0; i < a.size(); ++i) a[i] -= o.a[i];
    return *this;
}

DenseOperator& DenseOperator::operator*=(Complex s) {
    for (auto& x : a) x *= s;
    return *this;
}

DenseOperator operator*(const DenseOperator& l, const DenseOperator& r) {
    if (l.dim != r.dim) throw DimensionError("operator*: dimension mismatch");
    DenseOperator m(l.dim);
    for (int i = 0; i < l.dim; ++i)
        for (int k = 0; k < l.dim; ++k) {
            Complex lik = l.at(i, k);
            if (lik == Complex{}) continue;
            for (int j = 0; j < l.dim; ++j) m.at(i, j) += lik * r.at(k, j);
        }
    return m;
}

bool StateVector::is_normalized(double eps) const {
    double s = 0;
    for (const auto& x : amp) s += std::norm(x);
    return std::abs(s - 1.0) <= eps;
}

StateVector StateVector::normalized() const {
    double s = 0;
    for (const auto& x : amp) s += std::norm(x);
    if (s == 0) throw Error("cannot normalize zero vector");
    StateVector v(dim);
    double inv = 1.0 / std::sqrt(s);
    for (int i = 0; i < dim; ++i) v.amp[i] = amp[i] * inv;
    return v;
}

Complex inner(const StateVector& a, const StateVector& b) {
    if (a.dim != b.dim) throw DimensionError("inner: dimension mismatch");
    Complex s = 0;
    for (int i = 0; i < a.dim; ++i) s += std::conj(a.amp[i]) * b.amp[i];
    return s;
}

StateVector apply(const DenseOperator& A, const StateVector& v) {
    if (A.dim != v.dim) throw DimensionError("apply: dimension mismatch");
    StateVector r(v.dim);
    for (int i = 0; i < A.dim; ++i) {
        Complex s = 0;
        for (int j = 0; j < A.dim; ++j) s += A.at(i, j) * v.amp[j];
        r.amp[i] = s;
    }
    return r;
}

DenseOperator outer(const StateVector& a, const StateVector& b) {
    if (a.dim != b.dim) throw DimensionError("outer: dimension mismatch");
    DenseOperator m(a.dim);
    for (int r = 0; r < a.dim; ++r)
        for (int c = 0; c < a.dim; ++c) m.at(r, c) = a.amp[r] * std::conj(b.amp[c]);
    return m;
}

DenseOperator kron(const DenseOperator& A, const DenseOperator& B) {
    DenseOperator m(A.dim * B.dim);
    for (int ar = 0; ar < A.dim; ++ar)
        for (int ac = 0; ac < A.dim; ++ac)
            for (int br = 0; br < B.dim; ++br)
                for (int bc = 0; bc < B.dim; ++bc)
                    m.at(ar * B.dim + br, ac * B.dim + bc) = A.at(ar, ac) * B.at(br, bc);
    return m;
}

Complex expectation_trace(const DenseOperator& A, const StateVector& psi) {
    if (A.dim != psi.dim) throw DimensionError("expectation_trace: dimension mismatch");
    return inner(psi, apply(A, psi));
}

namespace {

double offdiag_norm(const DenseOperator& A) {
    double s = 0;
    for (int r = 0; r < A.dim; ++r)
        for (int c = 0; c < A.dim; ++c)
            if (r != c) s += std::norm(A.at(r, c));
    return std::sqrt(s);
}

// Annihilate A(p,q) with the unitary U = D*G, D = diag(1, e^{-i phi}),
// G the real Jacobi rotation of the phase-stripped 2x2 block.
void jacobi_rotate(DenseOperator& A, DenseOperator& V, int p, int q) {
    Complex apq = A.at(p, q);
    double b = std::abs(apq);
    if (b == 0) return;
    Complex phase = apq / b;  // e^{i phi}
    double app = A.at(p, p).real();
    double aqq = A.at(q, q).real();
    double tau = (aqq - app) / (2 * b);
    // smaller-magnitude root of t^2 - 2 tau t - 1 = 0 for this rotation form
    double t = -(tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
    double c = 1.0 / std::sqrt(1 + t * t);
    double s = t * c;

    // column transform: columns p,q of A and V
    Complex up_p = c, up_q = -s;                       // U(p,p), U(p,q)
    Complex uq_p = std::conj(phase) * s, uq_q = std::conj(phase) * c;
    for (int r = 0; r < A.dim; ++r) {
        Complex arp = A.at(r, p), arq = A.at(r, q);
        A.at(r, p) = arp * up_p + arq * uq_p;
        A.at(r, q) = arp * up_q + arq * uq_q;
        Complex vrp = V.at(r, p), vrq = V.at(r, q);
        V.at(r, p) = vrp * up_p + vrq * uq_p;
        V.at(r, q) = vrp * up_q + vrq * uq_q;
    }
    // row transform: rows p,q of A by U^dagger
    for (int col = 0; col < A.dim; ++col) {
        Complex apc = A.at(p, col), aqc = A.at(q, col);
        A.at(p, col) = std::conj(up_p) * apc + std::conj(uq_p) * aqc;
        A.at(q, col) = std::conj(up_q) * apc + std::conj(uq_q) * aqc;
    }
    A.at(p, q) = 0;
    A.at(q, p) = 0;
}

// Phase-normalize so the largest-magnitude component is real positive.
void fix_phase(StateVector& v) {
    int best = 0;
    double mag = -1;
    for (int i = 0; i < v.dim; ++i)
        if (std::abs(v.amp[i]) > mag + 1e-15) {
            mag = std::abs(v.amp[i]);
            best = i;
        }
    if (mag <= 0) return;
    Complex ph = v.amp[best] / mag;
    for (auto& x : v.amp) x *= std::conj(ph);
}

}  // namespace

EigResult eig_hermitian(const DenseOperator& A0) {
    if (!A0.is_hermitian()) throw Error("eig_hermitian: input is not Hermitian");
    DenseOperator A = A0;
    DenseOperator V = DenseOperator::identity(A.dim);
    for (int sweep = 0; sweep < tol().jacobi_max_sweeps; ++sweep) {
        if (offdiag_norm(A) <= tol().eig_converge) break;
        for (int p = 0; p < A.dim; ++p)
            for (int q = p + 1; q < A.dim; ++q)
                if (std::abs(A.at(p, q)) > 0) jacobi_rotate(A, V, p, q);
    }

    EigResult res;
    std::vector<int> order(A.dim);
    for (int i = 0; i < A.dim; ++i) order[i] = i;
    std::vector<StateVector> cols(A.dim, StateVector(A.dim));
    for (int j = 0; j < A.dim; ++j) {
        for (int r = 0; r < A.dim; ++r) cols[j].amp[r] = V.at(r, j);
        fix_phase(cols[j]);
    }
    auto rounded = [](Complex z) {
        return std::pair<double, double>(std::round(z.real() * 1e9), std::round(z.imag() * 1e9));
    };
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        double li = A.at(i, i).real(), lj = A.at(j, j).real();
        if (std::abs(li - lj) > 1e-9) return li > lj;
        for (int r = 0; r < A.dim; ++r) {
            auto a = rounded(cols[i].amp[r]), b = rounded(cols[j].amp[r]);
            if (a != b) return a < b;
        }
        return false;
    });
    for (int k = 0; k < A.dim; ++k) {
        res.values.push_back(A.at(order[k], order[k]).real());
        res.vectors.push_back(cols[order[k]]);
    }
    return res;
}

DenseOperator projector_from_ray(const std::vector<Complex>& v) {
    double n2 = 0;
    for (const auto& x : v) n2 += std::norm(x);
    if (n2 == 0) throw Error("projector_from_ray: zero vector");
    DenseOperator m(static_cast<int>(v.size()));
    for (size_t r = 0; r < v.size(); ++r)
        for (size_t c = 0; c < v.size(); ++c)
            m.at(static_cast<int>(r), static_cast<int>(c)) = v[r] * std::conj(v[c]) / n2;
    return m;
}

DenseOperator pauli(char which) {
    DenseOperator m(2);
    switch (which) {
        case 'I': m.at(0, 0) = 1; m.at(1, 1) = 1; break;
        case 'X': m.at(0, 1) = 1; m.at(1, 0) = 1; break;
        case 'Y': m.at(0, 1) = Complex(0, -1); m.at(1, 0) = Complex(0, 1); break;
        case 'Z': m.at(0, 0) = 1; m.at(1, 1) = -1; break;
        default: throw Error(std::string("unknown Pauli label: ") + which);
    }
    return m;
}

DenseOperator pauli_string(const std::string& s) {
    if (s.empty()) throw Error("empty Pauli string");
    DenseOperator m = pauli(s[0]);
    for (size_t i = 1; i < s.size(); ++i) m = kron(m, pauli(s[i]));
    return m;
}

}  // namespace ctx
