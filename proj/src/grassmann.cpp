#include "ctx/grassmann.hpp"

#include <bit>
#include <cmath>

namespace ctx {

namespace {

void require_same_algebra(const GrassmannPoly& a, const GrassmannPoly& b, const char* what) {
    if (a.num_generators != b.num_generators)
        throw DimensionError(std::string(what) + ": generator count mismatch");
}

}  // namespace

GrassmannPoly GrassmannPoly::scalar(int gens, Complex c) {
    if (gens < 0 || gens > 30) throw Error("grassmann algebra limited to 30 generators");
    GrassmannPoly p(gens);
    if (c != Complex{}) p.terms[0] = c;
    return p;
}

GrassmannPoly GrassmannPoly::monomial(int gens, uint32_t mask, Complex c) {
    if (gens < 0 || gens > 30) throw Error("grassmann algebra limited to 30 generators");
    if (mask >= (1u << gens)) throw Error("monomial mask outside the algebra");
    GrassmannPoly p(gens);
    if (c != Complex{}) p.terms[mask] = c;
    return p;
}

bool GrassmannPoly::is_zero(double eps) const {
    for (const auto& [m, c] : terms)
        if (std::abs(c) > eps) return false;
    return true;
}

Grade GrassmannPoly::grade() const {
    bool even = false, odd = false;
    for (const auto& [m, c] : terms) {
        if (c == Complex{}) continue;
        (std::popcount(m) % 2 == 0 ? even : odd) = true;
    }
    if (even && odd) return Grade::Mixed;
    if (even) return Grade::Even;
    if (odd) return Grade::Odd;
    return Grade::Zero;
}

Complex GrassmannPoly::coeff(uint32_t mask) const {
    auto it = terms.find(mask);
    return it == terms.end() ? Complex{} : it->second;
}

GrassmannPoly& GrassmannPoly::prune(double eps) {
    for (auto it = terms.begin(); it != terms.end();)
        it = (std::abs(it->second) <= eps) ? terms.erase(it) : std::next(it);
    return *this;
}

GrassmannPoly& GrassmannPoly::operator+=(const GrassmannPoly& o) {
    require_same_algebra(*this, o, "grassmann add");
    for (const auto& [m, c] : o.terms) terms[m] += c;
    return prune();
}

GrassmannPoly& GrassmannPoly::operator-=(const GrassmannPoly& o) {
    require_same_algebra(*this, o, "grassmann sub");
    for (const auto& [m, c] : o.terms) terms[m] -= c;
    return prune();
}

GrassmannPoly& GrassmannPoly::operator*=(Complex s) {
    for (auto& [m, c] : terms) c *= s;
    return prune();
}

double GrassmannPoly::max_abs_diff(const GrassmannPoly& o) const {
    require_same_algebra(*this, o, "grassmann diff");
    double worst = 0;
    for (const auto& [m, c] : terms) worst = std::max(worst, std::abs(c - o.coeff(m)));
    for (const auto& [m, c] : o.terms) worst = std::max(worst, std::abs(c - coeff(m)));
    return worst;
}

GrassmannPoly g_mul(const GrassmannPoly& a, const GrassmannPoly& b) {
    require_same_algebra(a, b, "g_mul");
    GrassmannPoly out(a.num_generators);
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            if (ma & mb) continue;  // repeated generator: nilpotent
            // merge-inversion parity: each generator of mb hops over the
            // generators of ma with larger index
            int inversions = 0;
            for (uint32_t mm = mb; mm != 0; mm &= mm - 1) {
                int k = std::countr_zero(mm);
                inversions += std::popcount(ma >> (k + 1));
            }
            Complex c = ca * cb;
            if (inversions & 1) c = -c;
            out.terms[ma | mb] += c;
        }
    return out.prune();
}

GrassmannPoly berezin(const GrassmannPoly& poly, const std::vector<int>& generators) {
    uint32_t seen = 0;
    for (int g : generators) {
        if (g < 0 || g >= poly.num_generators) throw Error("berezin: generator outside algebra");
        if (seen & (1u << g)) throw Error("berezin: duplicate generator in integration list");
        seen |= 1u << g;
    }
    GrassmannPoly cur = poly;
    for (int g : generators) {
        GrassmannPoly next(poly.num_generators);
        for (const auto& [m, c] : cur.terms) {
            if (!((m >> g) & 1u)) continue;  // int 1 dxi = 0
            int hops = std::popcount(m >> (g + 1));
            next.terms[m & ~(1u << g)] += (hops & 1) ? -c : c;
        }
        cur = next.prune();
    }
    return cur;
}

}  // namespace ctx
