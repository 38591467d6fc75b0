#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ctx/phase_space.hpp"
#include "test_util.hpp"

using namespace ctx;

namespace {

Complex omega(int d, int e) {
    double ang = 2.0 * std::numbers::pi * (((e % d) + d) % d) / d;
    return {std::cos(ang), std::sin(ang)};
}

// independently derived closed form: R(x)|q'> = w^{2 xp (xq - q')} |2 xq - q'>
DenseOperator reflection_closed_form(int d, int xp, int xq) {
    DenseOperator m(d);
    for (int q = 0; q < d; ++q) m.at((((2 * xq - q) % d) + d) % d, q) = omega(d, 2 * xp * (xq - q));
    return m;
}

}  // namespace

TEST_CASE("boost and shift generators") {
    CHECK(boost_shift(3, 0, 0).max_abs_diff(DenseOperator::identity(3)) < 1e-14);

    DenseOperator z = boost_shift(3, 1, 0);
    CHECK(std::abs(z.at(0, 0) - Complex(1, 0)) < 1e-14);
    CHECK(std::abs(z.at(1, 1) - omega(3, 1)) < 1e-14);
    CHECK(std::abs(z.at(2, 2) - omega(3, 2)) < 1e-14);

    DenseOperator x = boost_shift(3, 0, 1);
    CHECK(std::abs(x.at(1, 0) - Complex(1, 0)) < 1e-14);  // |0> -> |1>
    CHECK(std::abs(x.at(2, 1) - Complex(1, 0)) < 1e-14);
    CHECK(std::abs(x.at(0, 2) - Complex(1, 0)) < 1e-14);

    CHECK_THROWS_AS(boost_shift(2, 0, 0), Error);
    CHECK_THROWS_AS(boost_shift(4, 1, 1), Error);
}

TEST_CASE("translation operators") {
    CHECK(translation_op(PhasePoint::single(3, 0, 0)).max_abs_diff(DenseOperator::identity(3)) < 1e-14);

    // T(1,1) = w^{-2} Z X at d = 3 (inv2 = 2)
    DenseOperator t11 = translation_op(PhasePoint::single(3, 1, 1));
    DenseOperator zx = boost_shift(3, 1, 0) * boost_shift(3, 0, 1);
    zx *= omega(3, -2);
    CHECK(t11.max_abs_diff(zx) < 1e-14);

    // Hilbert-Schmidt orthogonality: tr(T(a)^dag T(b)) = d delta_ab
    for (int ap = 0; ap < 3; ++ap)
        for (int aq = 0; aq < 3; ++aq)
            for (int bp = 0; bp < 3; ++bp)
                for (int bq = 0; bq < 3; ++bq) {
                    Complex ip = (translation_op(PhasePoint::single(3, ap, aq)).adjoint() *
                                  translation_op(PhasePoint::single(3, bp, bq)))
                                     .trace();
                    Complex want = (ap == bp && aq == bq) ? Complex(3, 0) : Complex(0, 0);
                    CHECK(std::abs(ip - want) < 1e-12);
                }

    // unitarity
    DenseOperator t = translation_op(PhasePoint::single(5, 2, 3));
    CHECK((t.adjoint() * t).max_abs_diff(DenseOperator::identity(5)) < 1e-13);
}

TEST_CASE("reflection operators against the closed form") {
    for (int d : {3, 5})
        for (int xp = 0; xp < d; ++xp)
            for (int xq = 0; xq < d; ++xq) {
                DenseOperator r = reflection_op(PhasePoint::single(d, xp, xq));
                CHECK(r.max_abs_diff(reflection_closed_form(d, xp, xq)) < 1e-12);
                CHECK(r.is_hermitian(1e-12));
                CHECK((r * r).max_abs_diff(DenseOperator::identity(d)) < 1e-12);
                CHECK(std::abs(r.trace() - Complex(1, 0)) < 1e-12);
            }

    // parity at the origin: |q> -> |-q mod 3>
    DenseOperator r0 = reflection_op(PhasePoint::single(3, 0, 0));
    StateVector e1{0, 1, 0};
    StateVector out = apply(r0, e1);
    CHECK(std::abs(out.amp[2] - Complex(1, 0)) < 1e-14);

    // R orthogonality: tr(R(x) R(x')) = d delta
    for (int xp = 0; xp < 3; ++xp)
        for (int xq = 0; xq < 3; ++xq)
            for (int yp = 0; yp < 3; ++yp)
                for (int yq = 0; yq < 3; ++yq) {
                    Complex ip = (reflection_op(PhasePoint::single(3, xp, xq)) *
                                  reflection_op(PhasePoint::single(3, yp, yq)))
                                     .trace();
                    Complex want = (xp == yp && xq == yq) ? Complex(3, 0) : Complex(0, 0);
                    CHECK(std::abs(ip - want) < 1e-12);
                }
}

TEST_CASE("two-register reflection matches the defining double sum") {
    // spot check: R((1,2),(0,1)) at d=3, n=2 equals kron of single-register ones
    PhasePoint x{{1, 2}, {0, 1}, 3};
    DenseOperator r = reflection_op(x);
    DenseOperator want = kron(reflection_closed_form(3, 1, 0), reflection_closed_form(3, 2, 1));
    CHECK(r.max_abs_diff(want) < 1e-12);
    CHECK(std::abs(r.trace() - Complex(1, 0)) < 1e-12);
}

TEST_CASE("observable symbols") {
    WeylSymbolOdd wid = weyl_observable(DenseOperator::identity(3), 3, 1);
    for (const auto& v : wid.v) CHECK(std::abs(v - Complex(1, 0)) < 1e-12);

    // |q=0><q=0| -> indicator of the x_q = 0 column
    DenseOperator p0 = projector_from_ray({1, 0, 0});
    WeylSymbolOdd w0 = weyl_observable(p0, 3, 1);
    for (int xp = 0; xp < 3; ++xp)
        for (int xq = 0; xq < 3; ++xq)
            CHECK(std::abs(w0.at_flat(xp, xq) - Complex(xq == 0 ? 1 : 0, 0)) < 1e-12);

    CHECK_THROWS_AS(weyl_observable(DenseOperator::identity(4), 3, 1), DimensionError);
}

TEST_CASE("state symbols and marginals") {
    DenseOperator p0 = projector_from_ray({1, 0, 0});
    WeylSymbolOdd w = wigner_state(p0, 3, 1);
    CHECK(std::abs(w.sum() - Complex(1, 0)) < 1e-12);
    for (int xp = 0; xp < 3; ++xp)
        for (int xq = 0; xq < 3; ++xq)
            CHECK(std::abs(w.at_flat(xp, xq) - Complex(xq == 0 ? 1.0 / 3 : 0, 0)) < 1e-12);

    DenseOperator mixed = DenseOperator::identity(3);
    mixed *= Complex(1.0 / 3, 0);
    WeylSymbolOdd wm = wigner_state(mixed, 3, 1);
    for (const auto& v : wm.v) CHECK(std::abs(v - Complex(1.0 / 9, 0)) < 1e-12);

    auto mq = marginal(w, Axis::Q);
    CHECK(mq[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(mq[1]) < 1e-12);
    auto mp = marginal(w, Axis::P);
    for (double x : mp) CHECK(x == doctest::Approx(1.0 / 3).epsilon(1e-12));

    // uniform superposition: delta marginal in p, uniform in q
    StateVector plus{1.0 / std::sqrt(3.0), 1.0 / std::sqrt(3.0), 1.0 / std::sqrt(3.0)};
    WeylSymbolOdd wp = wigner_state(outer(plus, plus), 3, 1);
    auto mpp = marginal(wp, Axis::P);
    int deltas = 0;
    for (double x : mpp) {
        if (std::abs(x - 1) < 1e-12) ++deltas;
        else CHECK(std::abs(x) < 1e-12);
    }
    CHECK(deltas == 1);

    // non-density inputs rejected
    DenseOperator notrho = DenseOperator::identity(3);
    CHECK_THROWS_AS(wigner_state(notrho, 3, 1), Error);
}

TEST_CASE("inverse transform roundtrips") {
    WeylSymbolOdd ones(3, 1, SymbolNorm::Observable);
    for (auto& v : ones.v) v = 1;
    CHECK(inverse_weyl(ones).max_abs_diff(DenseOperator::identity(3)) < 1e-12);

    // indicator of x_q = 0 -> |0><0|
    WeylSymbolOdd ind(3, 1, SymbolNorm::Observable);
    for (int xp = 0; xp < 3; ++xp) ind.at_flat(xp, 0) = 1;
    CHECK(inverse_weyl(ind).max_abs_diff(projector_from_ray({1, 0, 0})) < 1e-12);

    testutil::Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        DenseOperator A = rng.hermitian(3);
        CHECK(inverse_weyl(weyl_observable(A, 3, 1)).max_abs_diff(A) < 1e-12);
    }
    // state-normalized roundtrip
    testutil::Rng rng2(8);
    StateVector psi = rng2.state(3);
    DenseOperator rho = outer(psi, psi);
    CHECK(inverse_weyl(wigner_state(rho, 3, 1)).max_abs_diff(rho) < 1e-12);
}

TEST_CASE("completeness of the reflection basis") {
    for (int d : {3, 5}) {
        testutil::Rng rng(100 + d);
        for (int trial = 0; trial < 20; ++trial) {
            DenseOperator A = rng.hermitian(d);
            DenseOperator rec(d);
            for (int xp = 0; xp < d; ++xp)
                for (int xq = 0; xq < d; ++xq) {
                    DenseOperator r = reflection_op(PhasePoint::single(d, xp, xq));
                    Complex w = (A * r).trace();
                    r *= w / static_cast<double>(d);
                    rec += r;
                }
            CHECK(rec.max_abs_diff(A) < 1e-10);
        }
    }
}

TEST_CASE("pairing equals the trace oracle") {
    for (int d : {3, 5}) {
        testutil::Rng rng(40 + d);
        for (int trial = 0; trial < 50; ++trial) {
            DenseOperator A = rng.hermitian(d);
            StateVector psi = rng.state(d);
            double via_ps = phase_space_expectation(weyl_observable(A, d, 1),
                                                    wigner_state(outer(psi, psi), d, 1));
            CHECK(std::abs(via_ps - expectation_trace(A, psi).real()) < 1e-10);
        }
    }
    // normalization misuse flagged
    WeylSymbolOdd a = weyl_observable(DenseOperator::identity(3), 3, 1);
    CHECK_THROWS_AS(phase_space_expectation(a, a), Error);
}

TEST_CASE("covariance under the shift operator") {
    testutil::Rng rng(55);
    StateVector psi = rng.state(3);
    DenseOperator rho = outer(psi, psi);
    DenseOperator x = boost_shift(3, 0, 1);
    DenseOperator shifted = x * rho * x.adjoint();
    WeylSymbolOdd w = wigner_state(rho, 3, 1);
    WeylSymbolOdd ws = wigner_state(shifted, 3, 1);
    for (int xp = 0; xp < 3; ++xp)
        for (int xq = 0; xq < 3; ++xq)
            CHECK(std::abs(ws.at_flat(xp, (xq + 1) % 3) - w.at_flat(xp, xq)) < 1e-12);
}
