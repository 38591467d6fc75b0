#include <doctest.h>

#include <cmath>

#include "ctx/constructions.hpp"
#include "ctx/dense.hpp"
#include "test_util.hpp"

using namespace ctx;

namespace {

DenseOperator sigma_gamma_from_seeds() {
    DenseOperator s(3);
    for (const auto& v : kcsb_seed_vectors())
        s += projector_from_ray({Complex(v[0]), Complex(v[1]), Complex(v[2])});
    return s;
}

}  // namespace

TEST_CASE("expectation_trace basics") {
    StateVector e0{1, 0, 0};
    CHECK(expectation_trace(DenseOperator::identity(3), e0).real() == doctest::Approx(1.0).epsilon(1e-14));

    testutil::Rng rng(11);
    StateVector psi = rng.state(3);
    CHECK(std::abs(expectation_trace(DenseOperator::identity(3), psi) - Complex(1, 0)) < 1e-12);

    StateVector wrong{1, 0};
    CHECK_THROWS_AS(expectation_trace(DenseOperator::identity(3), wrong), DimensionError);
}

TEST_CASE("expectation_trace on the pentagon witnesses") {
    DenseOperator sg = sigma_gamma_from_seeds();
    EigResult eig = eig_hermitian(sg);
    const double s5 = std::sqrt(5.0);
    // eigenvalues sqrt(5), (5-sqrt5)/2 (twice)
    CHECK(eig.values[0] == doctest::Approx(s5).epsilon(1e-12));
    CHECK(eig.values[1] == doctest::Approx((5 - s5) / 2).epsilon(1e-12));
    CHECK(eig.values[2] == doctest::Approx((5 - s5) / 2).epsilon(1e-12));

    // <phi3|SigmaGamma|phi3> = sqrt5 for the top eigenvector
    CHECK(expectation_trace(sg, eig.vectors[0]).real() == doctest::Approx(s5).epsilon(1e-10));

    // SigmaGamma2 on that state: 5 - sqrt5; on the doublet states: 5 - 2 sqrt5
    DenseOperator sg2 = sg * sg - sg;
    CHECK(expectation_trace(sg2, eig.vectors[0]).real() == doctest::Approx(5 - s5).epsilon(1e-10));
    CHECK(expectation_trace(sg2, eig.vectors[1]).real() == doctest::Approx(5 - 2 * s5).epsilon(1e-10));
    CHECK(expectation_trace(sg2, eig.vectors[2]).real() == doctest::Approx(5 - 2 * s5).epsilon(1e-10));
}

TEST_CASE("eig_hermitian identity and errors") {
    EigResult e = eig_hermitian(DenseOperator::identity(3));
    for (double v : e.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-13));

    DenseOperator bad(2);
    bad.at(0, 1) = 1;  // not Hermitian (no conjugate partner)
    CHECK_THROWS_AS(eig_hermitian(bad), Error);
}

TEST_CASE("eig_hermitian reconstruction property") {
    testutil::Rng rng(2024);
    for (int trial = 0; trial < 8; ++trial) {
        int dim = 2 + trial % 7;  // up to 8
        DenseOperator A = rng.hermitian(dim);
        EigResult e = eig_hermitian(A);
        DenseOperator rec(dim);
        for (int k = 0; k < dim; ++k) {
            DenseOperator pk = outer(e.vectors[k], e.vectors[k]);
            pk *= e.values[k];
            rec += pk;
        }
        CHECK(rec.max_abs_diff(A) < 1e-9);
        // residuals and orthonormality
        for (int k = 0; k < dim; ++k) {
            StateVector Av = apply(A, e.vectors[k]);
            for (int i = 0; i < dim; ++i)
                CHECK(std::abs(Av.amp[i] - e.values[k] * e.vectors[k].amp[i]) < 1e-10);
            for (int l = 0; l < dim; ++l) {
                Complex ip = inner(e.vectors[k], e.vectors[l]);
                CHECK(std::abs(ip - (k == l ? Complex(1, 0) : Complex(0, 0))) < 1e-10);
            }
        }
        // expectation_trace(A, psi) == tr(A |psi><psi|)
        StateVector psi = rng.state(dim);
        Complex via_trace = (A * outer(psi, psi)).trace();
        CHECK(std::abs(expectation_trace(A, psi) - via_trace) < 1e-12);
    }
}

TEST_CASE("projector_from_ray") {
    DenseOperator z1 = projector_from_ray({1, 0, 0});
    CHECK(z1.at(0, 0) == Complex(1, 0));
    CHECK(z1.trace() == Complex(1, 0));

    DenseOperator h0 = projector_from_ray({1, 1, 1});
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) CHECK(std::abs(h0.at(r, c) - Complex(1.0 / 3, 0)) < 1e-14);

    DenseOperator y1m = projector_from_ray({0, 1, -1});
    CHECK(std::abs(y1m.at(1, 1) - Complex(0.5, 0)) < 1e-14);
    CHECK(std::abs(y1m.at(1, 2) - Complex(-0.5, 0)) < 1e-14);
    CHECK(std::abs(y1m.at(0, 0)) < 1e-14);

    CHECK(h0.is_projector());
    CHECK((h0 * h0).max_abs_diff(h0) < 1e-12);
    CHECK_THROWS_AS(projector_from_ray({0, 0, 0}), Error);
}

TEST_CASE("pauli strings") {
    DenseOperator xx = pauli_string("XX");
    CHECK(xx.dim == 4);
    CHECK((xx * xx).max_abs_diff(DenseOperator::identity(4)) < 1e-14);
    // XZ = -iY
    DenseOperator xz = pauli('X') * pauli('Z');
    DenseOperator miY = Complex(0, -1) * pauli('Y');
    CHECK(xz.max_abs_diff(miY) < 1e-14);
}
