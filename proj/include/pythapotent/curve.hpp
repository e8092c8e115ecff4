#pragma once

// The elliptic curve y^2 = x^3 + A x^2 + B x attached to a pythagorean pair
// (a,b) and a degree h, with A = a^{2h} + b^{2h} and B = a^{2h} b^{2h}.
//
// Exact chord-tangent group law over Rat coordinates, the eight-point torsion
// catalogue (orders {1,2,2,2,4,4,4,4}; for h = 2 this is a proper subgroup of
// the full torsion), order classification under the uniform 16-multiple cap,
// the reciprocal-form transform, and the two square-condition tests.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pythapotent/exact.hpp"
#include "pythapotent/pythagorean.hpp"

namespace pythapotent {

struct Curve {
    PythagoreanPair base;
    unsigned long h;
    Int ah;  // a^h
    Int bh;  // b^h
    Int A;   // a^{2h} + b^{2h}
    Int B;   // a^{2h} b^{2h}
};

inline Curve make_curve(const Int& a, const Int& b, unsigned long h) {
    if (h < 1) throw std::invalid_argument("nonpositive");
    PythagoreanPair base = make_pair(a, b);
    Curve c{base, h, pow(a, h), pow(b, h), 0, 0};
    Int a2h = c.ah * c.ah, b2h = c.bh * c.bh;
    c.A = a2h + b2h;
    c.B = a2h * b2h;
    if (c.B == 0 || c.A * c.A == 4 * c.B) throw std::domain_error("singular curve");
    return c;
}

class Point {
public:
    Point() : inf_(true) {}  // default: the point at infinity
    static Point infinity() { return Point(); }
    static Point affine(Rat x, Rat y) { return Point(std::move(x), std::move(y)); }

    bool is_infinity() const { return inf_; }
    const Rat& x() const {
        if (inf_) throw std::logic_error("point at infinity has no coordinates");
        return x_;
    }
    const Rat& y() const {
        if (inf_) throw std::logic_error("point at infinity has no coordinates");
        return y_;
    }

    friend bool operator==(const Point& p, const Point& q) {
        if (p.inf_ || q.inf_) return p.inf_ && q.inf_;
        return p.x_ == q.x_ && p.y_ == q.y_;
    }

    std::string str() const {
        if (inf_) return "infinity";
        return "(" + x_.str() + ", " + y_.str() + ")";
    }

private:
    Point(Rat x, Rat y) : inf_(false), x_(std::move(x)), y_(std::move(y)) {}
    bool inf_;
    Rat x_, y_;
};

inline bool contains(const Curve& c, const Point& p) {
    if (p.is_infinity()) return true;
    const Rat& x = p.x();
    const Rat& y = p.y();
    return y * y == x * x * x + Rat(c.A) * x * x + Rat(c.B) * x;
}

inline void require_on_curve(const Curve& c, const Point& p) {
    if (!contains(c, p)) throw std::domain_error("point not on curve");
}

inline Point negate(const Point& p) {
    if (p.is_infinity()) return p;
    return Point::affine(p.x(), -p.y());
}

// Chord-tangent addition. Infinity is neutral; P + (-P) = infinity.
inline Point add(const Curve& c, const Point& p, const Point& q) {
    require_on_curve(c, p);
    require_on_curve(c, q);
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;

    const Rat &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
    Rat lambda;
    if (x1 == x2) {
        if (y1 + y2 == Rat(0)) return Point::infinity();
        // Tangent: on the curve x1 = x2 forces y2 = +-y1, so here y2 = y1 != 0.
        lambda = (Rat(3) * x1 * x1 + Rat(2 * c.A) * x1 + Rat(c.B)) / (Rat(2) * y1);
    } else {
        lambda = (y2 - y1) / (x2 - x1);
    }
    Rat x3 = lambda * lambda - Rat(c.A) - x1 - x2;
    Rat y3 = lambda * (x1 - x3) - y1;
    return Point::affine(std::move(x3), std::move(y3));
}

inline Point double_point(const Curve& c, const Point& p) { return add(c, p, p); }

// k-fold sum by double-and-add; [0]P = infinity, [-k]P = -[k]P.
inline Point scalar_mul(const Curve& c, long k, const Point& p) {
    require_on_curve(c, p);
    bool neg = k < 0;
    unsigned long n = neg ? -static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
    Point acc = Point::infinity();
    Point base = p;
    while (n > 0) {
        if (n & 1) acc = add(c, acc, base);
        n >>= 1;
        if (n > 0) base = double_point(c, base);
    }
    return neg ? negate(acc) : acc;
}

struct TorsionPoint {
    Point point;
    int order;
};

// Least n <= 16 with [n]P = infinity, or nullopt (non-torsion). The cap is
// the uniform bound on rational torsion orders.
inline std::optional<int> classify_order(const Curve& c, const Point& p) {
    require_on_curve(c, p);
    Point q = Point::infinity();
    for (int n = 1; n <= 16; ++n) {
        q = add(c, q, p);
        if (q.is_infinity()) return n;
    }
    return std::nullopt;
}

// The eight catalogue points: infinity, the three 2-torsion points, and four
// points of order 4 at x = +-a^h b^h. Every entry is revalidated on-curve and
// its order rechecked before return.
inline std::vector<TorsionPoint> torsion_points(const Curve& c) {
    Int a2h = c.ah * c.ah, b2h = c.bh * c.bh, ab = c.ah * c.bh;
    std::vector<TorsionPoint> out;
    out.push_back({Point::infinity(), 1});
    out.push_back({Point::affine(Rat(0), Rat(0)), 2});
    out.push_back({Point::affine(Rat(-b2h), Rat(0)), 2});
    out.push_back({Point::affine(Rat(-a2h), Rat(0)), 2});
    Int yp = ab * (c.ah + c.bh);
    Int ym = ab * (c.ah - c.bh);
    out.push_back({Point::affine(Rat(ab), Rat(yp)), 4});
    out.push_back({Point::affine(Rat(ab), Rat(-yp)), 4});
    out.push_back({Point::affine(Rat(-ab), Rat(ym)), 4});
    out.push_back({Point::affine(Rat(-ab), Rat(-ym)), 4});
    for (const auto& t : out) {
        if (!contains(c, t.point) || classify_order(c, t.point) != t.order)
            throw std::domain_error("torsion catalogue inconsistent");
    }
    return out;
}

// Lemma-style reciprocal transform: an affine point (x,y) with x != 0 maps to
// (a^h b^h / x, y / x) on y'^2 x' = a^h b^h + A x' + a^h b^h x'^2.
inline std::pair<Rat, Rat> to_reciprocal(const Curve& c, const Point& p) {
    if (p.is_infinity()) throw std::invalid_argument("point at infinity");
    require_on_curve(c, p);
    if (p.x() == Rat(0)) throw std::domain_error("zero x-coordinate");
    Rat ab(c.ah * c.bh);
    return {ab / p.x(), p.y() / p.x()};
}

inline bool on_reciprocal(const Curve& c, const Rat& xp, const Rat& yp) {
    Rat ab(c.ah * c.bh);
    return yp * yp * xp == ab + Rat(c.A) * xp + ab * xp * xp;
}

// Square tests a^h (a^h q + b^h p) = [] and b^h (a^h p + b^h q) = [].
inline std::pair<bool, bool> check_square_conditions(const Curve& c, const Int& p,
                                                     const Int& q) {
    Int s1 = c.ah * (c.ah * q + c.bh * p);
    Int s2 = c.bh * (c.ah * p + c.bh * q);
    return {is_perfect_square(s1), is_perfect_square(s2)};
}

}  // namespace pythapotent
