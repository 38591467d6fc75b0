// Shared helpers for the test suite: a fixed-seed generator with portable
// double mapping, and random Hermitian operators / pure states.
#pragma once

#include <random>

#include "ctx/dense.hpp"

namespace ctx::testutil {

class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    // uniform in [-1, 1), identical across platforms for a fixed seed
    double uniform() {
        uint64_t u = eng_() >> 11;
        return static_cast<double>(u) * (2.0 / 9007199254740992.0) - 1.0;
    }
    Complex complex_unit() { return {uniform(), uniform()}; }

    DenseOperator hermitian(int dim) {
        DenseOperator m(dim);
        for (int r = 0; r < dim; ++r) {
            m.at(r, r) = uniform();
            for (int c = r + 1; c < dim; ++c) {
                Complex z = complex_unit();
                m.at(r, c) = z;
                m.at(c, r) = std::conj(z);
            }
        }
        return m;
    }

    StateVector state(int dim) {
        StateVector v(dim);
        for (int i = 0; i < dim; ++i) v.amp[i] = complex_unit();
        return v.normalized();
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace ctx::testutil
