// Finite Grassmann algebra on a fixed set of anticommuting generators.
// Monomials are bitmasks over the generators in canonical ascending order;
// reordering signs are tracked with exact integer parity arithmetic.
#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "ctx/dense.hpp"

namespace ctx {

enum class Grade { Zero, Even, Odd, Mixed };

struct GrassmannPoly {
    int num_generators = 0;
    // monomial bitmask -> coefficient; near-zero coefficients are pruned
    std::map<uint32_t, Complex> terms;

    GrassmannPoly() = default;
    explicit GrassmannPoly(int gens) : num_generators(gens) {}

    static GrassmannPoly scalar(int gens, Complex c);
    static GrassmannPoly monomial(int gens, uint32_t mask, Complex c);

    bool is_zero(double eps = 1e-14) const;
    Grade grade() const;
    Complex coeff(uint32_t mask) const;
    GrassmannPoly& prune(double eps = 1e-300);

    GrassmannPoly& operator+=(const GrassmannPoly& o);
    GrassmannPoly& operator-=(const GrassmannPoly& o);
    GrassmannPoly& operator*=(Complex s);
    friend GrassmannPoly operator+(GrassmannPoly l, const GrassmannPoly& r) { return l += r; }
    friend GrassmannPoly operator-(GrassmannPoly l, const GrassmannPoly& r) { return l -= r; }
    friend GrassmannPoly operator*(Complex s, GrassmannPoly p) { return p *= s; }

    double max_abs_diff(const GrassmannPoly& o) const;
};

// Associative anticommuting product; xi*xi = 0 falls out of the mask overlap
// check, ordering signs from merge-inversion parity.
GrassmannPoly g_mul(const GrassmannPoly& a, const GrassmannPoly& b);

// Iterated Berezin integral, innermost first in the listed order, with
// int xi dxi = 1 and int 1 dxi = 0 (xi moved to the right end of the
// canonical monomial before extraction). Duplicate generators throw.
GrassmannPoly berezin(const GrassmannPoly& poly, const std::vector<int>& generators);

}  // namespace ctx
