// Central numeric tolerance configuration. All oracle comparisons are
// absolute (every quantity handled here is O(1)).
#pragma once

namespace ctx {

struct Tolerances {
    double hermitian    = 1e-12;  // entry(j,k) == conj(entry(k,j))
    double projector    = 1e-12;  // A*A == A, trace == rank
    double normalized   = 1e-12;  // sum |amp|^2 == 1
    double eig_residual = 1e-10;  // A v == lambda v
    double eig_converge = 1e-14;  // off-diagonal Frobenius norm target
    double pairing      = 1e-10;  // phase-space vs trace expectation
    double roundtrip    = 1e-12;  // forward/inverse Weyl identity
    double orthogonal   = 1e-12;  // ray dot products defining graph edges
    double golden       = 1e-9;   // reproduction of published table values
    double verdict      = 1e-9;   // margin above a classical bound
    int    jacobi_max_sweeps = 100;
};

inline const Tolerances& tol() {
    static const Tolerances t{};
    return t;
}

}  // namespace ctx
