#pragma once

// Witness derivation: curve point -> pythagorean witness pair (k,l), the
// reverse map witness -> x-coordinate, closed-form constructions for the
// cubic (h = 3) case, and the degree-1/degree-2 square-condition checkers.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pythapotent/curve.hpp"
#include "pythapotent/exact.hpp"
#include "pythapotent/pythagorean.hpp"

namespace pythapotent {

struct PairWitness {
    Int k;          // gcd(k,l) = 1
    Int l;
    Int inner_hyp;  // k^2 + l^2 = inner_hyp^2
    Int outer_hyp;  // (a^h k)^2 + (b^h l)^2 = outer_hyp^2
    std::string source;
};

inline bool proportional(const PairWitness& u, const PairWitness& v) {
    return u.k * v.l == u.l * v.k;
}

// Full trace of the derivation, exposed for reporting; derive_pair returns
// just the witness.
struct Derivation {
    Point doubled;   // [2]P
    Rat x2;          // x([2]P), a rational square
    Rat gf;          // g/f = sqrt(x2), reduced
    Int radical;     // g^2 + b^{2h} f^2, a perfect square
    Int radical_root;
    char branch;     // '+' normally; '-' only if the primary branch degenerates
    Int r, s;        // t = (b^h f + root)/g reduced to r/s, r > s >= 1
    Int k0, l0;      // |r^2 - s^2| and 2rs before gcd normalization
    PairWitness witness;
};

namespace detail {

// Validates the witness sums and fills the hypotenuses; `multiple_error` lets
// derive_pair and verify_witness keep their distinct diagnostics.
inline PairWitness finish_witness(const Curve& c, const Int& k, const Int& l,
                                  const char* multiple_error, std::string source) {
    Int inner2 = k * k + l * l;
    if (!is_perfect_square(inner2)) throw std::domain_error("inner not pythagorean");
    if (k * c.base.b == l * c.base.a) throw std::domain_error(multiple_error);
    Int xo = c.ah * k, yo = c.bh * l;
    Int outer2 = xo * xo + yo * yo;
    if (!is_perfect_square(outer2)) throw std::domain_error("outer not square");
    return {k, l, isqrt(inner2), isqrt(outer2), std::move(source)};
}

}  // namespace detail

// The derivation algorithm. P must be affine, on the curve, with [2]P affine
// of nonzero x (excludes the 2- and 4-torsion).
inline Derivation derive_trace(const Curve& c, const Point& p) {
    require_on_curve(c, p);
    if (p.is_infinity()) throw std::domain_error("degenerate point");
    Point d = double_point(c, p);
    if (d.is_infinity() || d.x() == Rat(0)) throw std::domain_error("degenerate point");

    Derivation out;
    out.doubled = d;
    out.x2 = d.x();
    // x([2]P) = ((x^2 - B)/(2y))^2 is a square of a rational for every valid P.
    auto gf = rational_sqrt(out.x2);
    if (!gf) throw std::domain_error("radical not integral");
    out.gf = *gf;
    Int g = out.gf.num(), f = out.gf.den();

    out.radical = g * g + c.bh * c.bh * f * f;
    if (!is_perfect_square(out.radical)) throw std::domain_error("radical not integral");
    out.radical_root = isqrt(out.radical);

    // t = (b^h f + root)/g > 1 strictly since root > max(g, b^h f), so the
    // '+' branch always produces r > s >= 1; '-' is a recorded fallback.
    out.branch = '+';
    Rat t(c.bh * f + out.radical_root, g);
    if (t <= Rat(1)) {
        out.branch = '-';
        t = Rat(abs(c.bh * f - out.radical_root), g);
        if (t <= Rat(1)) t = Rat(g, abs(c.bh * f - out.radical_root));
    }
    out.r = t.num();
    out.s = t.den();

    out.k0 = abs(out.r * out.r - out.s * out.s);
    out.l0 = 2 * out.r * out.s;
    Int d0 = gcd(out.k0, out.l0);
    std::string source = "[2]P for P=" + p.str();
    if (out.branch == '-') source += " (branch -)";
    out.witness =
        detail::finish_witness(c, out.k0 / d0, out.l0 / d0, "multiple of (a,b)", source);
    return out;
}

inline PairWitness derive_pair(const Curve& c, const Point& p) {
    return derive_trace(c, p).witness;
}

// Checks that (k,l) certifies (a,b) at degree h; returns both hypotenuses.
inline std::pair<Int, Int> verify_witness(const Int& a, const Int& b, unsigned long h,
                                          const Int& k, const Int& l) {
    if (k < 1 || l < 1) throw std::invalid_argument("nonpositive");
    Curve c = make_curve(a, b, h);
    PairWitness w = detail::finish_witness(c, k, l, "is multiple", "verify");
    return {w.inner_hyp, w.outer_hyp};
}

// Reverse map: a witness (k,l) gives the x-coordinate b^{2h} l^2 / k^2 of a
// rational point (x^3 + A x^2 + B x must be a rational square).
inline Rat witness_to_x(const Curve& c, const Int& k, const Int& l) {
    if (k < 1 || l < 1) throw std::invalid_argument("nonpositive");
    Rat x(c.bh * c.bh * l * l, k * k);
    Rat val = x * x * x + Rat(c.A) * x * x + Rat(c.B) * x;
    if (!rational_sqrt(val)) throw std::domain_error("not a witness");
    return x;
}

// Closed-form rational point on the degree-3 curve of the pair (m^2-n^2, 2mn):
// x = -16 (m^2-n^2)^2 m^4 n^4, y = x * -(m^2+n^2)(m^4-6 m^2 n^2+n^4).
inline Point cubic_point(const MnParams& mn) {
    PythagoreanPair pr = pair_from_mn(mn);
    Curve c = make_curve(pr.a, pr.b, 3);
    Int m = mn.m, n = mn.n;
    Int m2 = m * m, n2 = n * n;
    Int base = 16 * (m2 - n2) * (m2 - n2) * m2 * m2 * n2 * n2;
    Int x = -base;
    Int y = base * (m2 + n2) * (m2 * m2 - 6 * m2 * n2 + n2 * n2);
    Point p = Point::affine(Rat(x), Rat(y));
    require_on_curve(c, p);
    return p;
}

// Closed-form witness for the same pair: k0 = 4mn(m^2+n^2), l0 = (m-n)^2(m+n)^2,
// outer hypotenuse 4mn(m^4+n^4)(m-n)^2(m+n)^2, reduced by gcd(k0,l0) (which is
// 1 whenever (m,n) is primitive).
inline PairWitness cubic_pair(const MnParams& mn) {
    PythagoreanPair pr = pair_from_mn(mn);
    Curve c = make_curve(pr.a, pr.b, 3);
    Int m = mn.m, n = mn.n;
    Int m2 = m * m, n2 = n * n;
    Int k0 = 4 * m * n * (m2 + n2);
    Int l0 = (m - n) * (m - n) * (m + n) * (m + n);
    Int outer0 = 4 * m * n * (m2 * m2 + n2 * n2) * (m - n) * (m - n) * (m + n) * (m + n);

    Int xo = c.ah * k0, yo = c.bh * l0;
    if (xo * xo + yo * yo != outer0 * outer0)
        throw std::domain_error("outer not square");
    Int d = gcd(k0, l0);
    PairWitness w = detail::finish_witness(c, k0 / d, l0 / d, "multiple of (a,b)",
                                           "cubic form (m,n)=(" + m.get_str() + "," +
                                               n.get_str() + ")");
    if (w.outer_hyp * d != outer0) throw std::domain_error("outer not square");
    return w;
}

struct ConditionCandidate {
    int condition;             // 1-based index into the condition list
    Point point;               // on the report's curve
    std::optional<int> order;  // nullopt = non-torsion (usable as a generator)
};

struct ConditionReport {
    Curve curve;
    std::vector<bool> conditions;
    std::vector<ConditionCandidate> points;
};

namespace detail {

inline void emit_candidate(ConditionReport& rep, int index, const Int& x) {
    Rat xr(x);
    Rat val = xr * xr * xr + Rat(rep.curve.A) * xr * xr + Rat(rep.curve.B) * xr;
    auto y = rational_sqrt(val);
    if (!y) throw std::domain_error("point not on curve");
    Point p = Point::affine(xr, *y);
    rep.points.push_back({index, p, classify_order(rep.curve, p)});
}

}  // namespace detail

// Degree-1 square conditions: 5m^2 - n^2 and m^2 + 3mn + n^2; each true
// condition yields a point on the degree-1 curve with x-coordinate
// n^2(m^2-n^2) resp. mn(m-n)^2.
inline ConditionReport degree1_conditions(const MnParams& mn) {
    PythagoreanPair pr = pair_from_mn(mn);
    Int m = mn.m, n = mn.n;
    ConditionReport rep{make_curve(pr.a, pr.b, 1), {}, {}};
    rep.conditions = {is_perfect_square(5 * m * m - n * n),
                      is_perfect_square(m * m + 3 * m * n + n * n)};
    if (rep.conditions[0]) detail::emit_candidate(rep, 1, n * n * (m * m - n * n));
    if (rep.conditions[1]) detail::emit_candidate(rep, 2, m * n * (m - n) * (m - n));
    return rep;
}

// Degree-2 quartic conditions (i)-(iv); each true condition yields a point on
// the degree-2 curve with the matching x-coordinate.
inline ConditionReport degree2_conditions(const MnParams& mn) {
    PythagoreanPair pr = pair_from_mn(mn);
    Int m = mn.m, n = mn.n;
    Int m2 = m * m, n2 = n * n, m4 = m2 * m2, n4 = n2 * n2;
    ConditionReport rep{make_curve(pr.a, pr.b, 2), {}, {}};
    rep.conditions = {is_perfect_square(-m4 - 4 * m * n * n2 + n4),
                      is_perfect_square(m4 + 4 * m2 * n2 - n4),
                      is_perfect_square(m4 - 2 * m2 * m * n + 2 * m2 * n2 + 2 * m * n * n2 + n4),
                      is_perfect_square(m4 - 2 * m2 * m * n - 2 * m2 * n2 - 2 * m * n * n2 + n4)};
    std::array<Int, 4> xs = {-8 * m2 * n4 * (m + n) * (m + n),
                             8 * m4 * n2 * (m2 - n2),
                             8 * m2 * m * n2 * n * (m2 - n2),
                             -8 * m2 * m * n2 * n * (m + n) * (m + n)};
    for (int i = 0; i < 4; ++i)
        if (rep.conditions[i]) detail::emit_candidate(rep, i + 1, xs[i]);
    return rep;
}

}  // namespace pythapotent
