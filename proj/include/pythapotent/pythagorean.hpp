#pragma once

// Pythagorean pairs, the (m,n) parametrization, and primitive decomposition.
//
// A pythagorean pair is an ordered pair of positive integers (a,b) with
// a^2 + b^2 a perfect square; (3,4) and (4,3) are distinct values since
// downstream witnesses attach to positions.

#include <stdexcept>

#include "pythapotent/exact.hpp"

namespace pythapotent {

struct PythagoreanPair {
    Int a;
    Int b;
    Int c;  // hypotenuse: a^2 + b^2 = c^2 exactly
};

// (m,n) with m > n >= 1; primitive pairs additionally need gcd(m,n) = 1 and
// opposite parity, which callers that require it check via is_primitive().
struct MnParams {
    Int m;
    Int n;

    bool is_primitive() const {
        return gcd(m, n) == 1 && (m + n) % 2 == 1;
    }
};

inline PythagoreanPair make_pair(const Int& a, const Int& b) {
    if (a < 1 || b < 1) throw std::invalid_argument("nonpositive");
    Int cc = a * a + b * b;
    if (!is_perfect_square(cc)) throw std::domain_error("not pythagorean");
    return {a, b, isqrt(cc)};
}

inline PythagoreanPair pair_from_mn(const MnParams& p) {
    if (p.m == p.n) throw std::invalid_argument("degenerate");
    if (p.n < 1 || p.m < p.n) throw std::invalid_argument("nonpositive");
    return {p.m * p.m - p.n * p.n, 2 * p.m * p.n, p.m * p.m + p.n * p.n};
}

struct PrimitiveDecomposition {
    Int r;
    Int s;
    bool swapped;  // true when k held the even member
};

// Writes a primitive pythagorean pair (k,l) as {odd member} = r^2 - s^2,
// {even member} = 2rs with coprime r > s >= 1 of opposite parity.
inline PrimitiveDecomposition decompose_primitive(const Int& k, const Int& l) {
    if (k < 1 || l < 1) throw std::invalid_argument("nonpositive");
    if (gcd(k, l) != 1) throw std::invalid_argument("not primitive");
    Int cc = k * k + l * l;
    if (!is_perfect_square(cc)) throw std::domain_error("not pythagorean");

    bool k_even = (k % 2 == 0);
    if (k_even == (l % 2 == 0)) throw std::domain_error("no decomposition");
    const Int& odd = k_even ? l : k;
    const Int& even = k_even ? k : l;

    // odd = r^2 - s^2, even = 2rs, hyp = r^2 + s^2, so r^2 = (hyp+odd)/2.
    Int hyp = isqrt(cc);
    Int r2 = (hyp + odd) / 2;
    Int s2 = (hyp - odd) / 2;
    if (!is_perfect_square(r2) || !is_perfect_square(s2))
        throw std::domain_error("no decomposition");
    Int r = isqrt(r2), s = isqrt(s2);
    if (s < 1 || 2 * r * s != even) throw std::domain_error("no decomposition");
    return {r, s, k_even};
}

}  // namespace pythapotent
