#pragma once

// Exact integer and rational arithmetic on top of GMP.
//
// Int is an unbounded signed integer; Rat is an always-reduced fraction with
// positive denominator. Every operation in this library is exact: no floating
// point is used anywhere, and all square-root work is integral.

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace pythapotent {

using Int = mpz_class;

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int abs(const Int& a) {
    Int r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

// pow_ui with an Int base; exponents in this library are small (h, 2h, ...).
inline Int pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// floor(sqrt(n)); the result r satisfies r^2 <= n < (r+1)^2.
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("negative radicand");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// Reduced rational: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
// Construction canonicalizes; arithmetic stays canonical via mpq.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(const Int& n) : v_(n) {}
    Rat(long n) : v_(n) {}
    Rat(const Int& num, const Int& den) {
        if (den == 0) throw std::domain_error("zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rat operator-() const {
        Rat r;
        r.v_ = -v_;
        return r;
    }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.v_ == 0) throw std::domain_error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.v_, b.v_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Decimal text, "num" when integral, "num/den" otherwise.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    mpq_class v_;
};

// Positive square root of a nonnegative rational square, if one exists.
// For reduced p/q this is exactly: p and q are both perfect squares.
inline std::optional<Rat> rational_sqrt(const Rat& x) {
    if (x.sign() < 0) return std::nullopt;
    Int p = x.num(), q = x.den();
    if (!is_perfect_square(p) || !is_perfect_square(q)) return std::nullopt;
    return Rat(isqrt(p), isqrt(q));
}

// Parse a signed decimal integer; rejects junk.
inline Int parse_int(const std::string& s) {
    Int v;
    if (s.empty() || mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("malformed integer: " + s);
    return v;
}

// Parse "num" or "num/den" into a reduced rational.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rat(num, den);
}

}  // namespace pythapotent
