#pragma once

// Tiny exact polynomial-expansion oracle used by the tests to prove the
// doubling square-condition identities symbolically: polynomials in the
// three variables x, alpha (= a^h), beta (= b^h) with Int coefficients.

#include <array>
#include <map>

#include <pythapotent/exact.hpp>

namespace poly {

using pythapotent::Int;

class Poly {
public:
    static Poly variable(int index) {
        Poly p;
        std::array<int, 3> e{0, 0, 0};
        e[index] = 1;
        p.terms_[e] = 1;
        return p;
    }
    static Poly constant(long c) {
        Poly p;
        if (c != 0) p.terms_[{0, 0, 0}] = c;
        return p;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [e, c] : b.terms_) r.bump(e, c);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [e, c] : b.terms_) r.bump(e, -c);
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.bump({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

private:
    void bump(const std::array<int, 3>& e, const Int& c) {
        Int& slot = terms_[e];
        slot += c;
        if (slot == 0) terms_.erase(e);
    }
    std::map<std::array<int, 3>, Int> terms_;
};

inline Poly square(const Poly& p) { return p * p; }

struct IdentityParts {
    Poly lhs_a, rhs_a, lhs_b, rhs_b, rhs_a_misprinted;
};

// Builds both sides of the doubling square-condition identities with
// q = (x^2 - B)^2 and p = 4 alpha beta (x^3 + A x^2 + B x), where
// A = alpha^2 + beta^2 and B = alpha^2 beta^2.
inline IdentityParts doubling_identities() {
    Poly x = Poly::variable(0), al = Poly::variable(1), be = Poly::variable(2);
    Poly A = al * al + be * be;
    Poly B = al * al * be * be;
    Poly q = square(x * x - B);
    Poly p = Poly::constant(4) * al * be * (x * x * x + A * x * x + B * x);

    IdentityParts out;
    out.lhs_a = al * (al * q + be * p);
    out.rhs_a = al * al * square(x * x + Poly::constant(2) * be * be * x + B);
    out.lhs_b = be * (al * p + be * q);
    out.rhs_b = be * be * square(x * x + Poly::constant(2) * al * al * x + B);
    // The misprinted form drops the x factor from the middle term.
    out.rhs_a_misprinted = al * al * square(x * x + Poly::constant(2) * be * be + B);
    return out;
}

}  // namespace poly
