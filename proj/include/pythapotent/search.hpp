#pragma once

// Bounded rational-point search, pythapotency verdicts, multi-witness
// generation, and the grid scan with its tab-separated record format.
//
// Candidates have the integral-model shape x = u/w^2 with gcd(u,w) = 1; the
// canonical order is increasing w, then increasing |u|, then u > 0 before
// u < 0. find_point returns the first non-torsion point in that order, no
// matter how the grid is partitioned across workers.

#include <algorithm>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "pythapotent/curve.hpp"
#include "pythapotent/derivation.hpp"
#include "pythapotent/exact.hpp"
#include "pythapotent/pythagorean.hpp"

namespace pythapotent {

struct SearchBound {
    unsigned long max_w = 4;
    Int max_u = 1000000;
};

namespace detail {

// Scans one denominator class w over m in [lo, hi]: candidates u = +m, -m
// (just u = 0 when m = 0) with gcd(u, w) = 1, accepted when
// M = u^3 + A u^2 w^2 + B u w^4 is a nonnegative perfect square, i.e. when
// x = u/w^2 gives a rational square for x^3 + A x^2 + B x. The visitor gets
// (m, sign, point) with sign 0 for u > 0 and 1 for u < 0 and returns true to
// stop. Raw mpz temporaries keep the per-candidate cost down.
template <typename F>
bool scan_denominator_class(const Curve& c, unsigned long w, const Int& lo,
                            const Int& hi, F&& on_hit) {
    Int w2 = Int(w) * Int(w);
    Int w3 = w2 * Int(w);
    Int aw2 = c.A * w2;
    Int bw4 = c.B * w2 * w2;
    mpz_t m, u, t, val;
    mpz_inits(m, u, t, val, nullptr);
    mpz_set(m, lo.get_mpz_t());
    bool stopped = false;
    while (!stopped && mpz_cmp(m, hi.get_mpz_t()) <= 0) {
        if (w == 1 || mpz_gcd_ui(nullptr, m, w) == 1) {
            int signs = mpz_sgn(m) == 0 ? 1 : 2;
            for (int sign = 0; sign < signs && !stopped; ++sign) {
                if (sign)
                    mpz_neg(u, m);
                else
                    mpz_set(u, m);
                mpz_mul(t, u, u);
                mpz_addmul(t, aw2.get_mpz_t(), u);
                mpz_add(t, t, bw4.get_mpz_t());
                mpz_mul(val, t, u);
                if (mpz_sgn(val) >= 0 && mpz_perfect_square_p(val)) {
                    Point p = Point::affine(Rat(Int(u), w2), Rat(isqrt(Int(val)), w3));
                    if (on_hit(Int(m), sign, p)) stopped = true;
                }
            }
        }
        mpz_add_ui(m, m, 1);
    }
    mpz_clears(m, u, t, val, nullptr);
    return stopped;
}

}  // namespace detail

struct AcceptedCandidate {
    unsigned long w;
    Int u;
    Point point;
    std::optional<int> order;
};

// Every accepted candidate in canonical order, torsion included. This is the
// exhaustive view of the same grid find_point searches; used for completeness
// cross-checks and diagnostics.
inline std::vector<AcceptedCandidate> accepted_points(const Curve& c,
                                                      const SearchBound& bound) {
    if (bound.max_w < 1 || bound.max_u < 1) throw std::invalid_argument("nonpositive");
    std::vector<AcceptedCandidate> out;
    for (unsigned long w = 1; w <= bound.max_w; ++w) {
        detail::scan_denominator_class(
            c, w, Int(w == 1 ? 0 : 1), bound.max_u,
            [&](const Int& m, int sign, const Point& p) {
                out.push_back({w, sign ? Int(-m) : m, p, classify_order(c, p)});
                return false;
            });
    }
    return out;
}

// First non-torsion point in canonical order, or empty. The grid may be
// partitioned across `workers` threads (0 = hardware concurrency); a
// block-wise minimum selection keeps the result schedule-independent.
inline std::optional<Point> find_point(const Curve& c, const SearchBound& bound,
                                       unsigned workers = 0) {
    if (bound.max_w < 1 || bound.max_u < 1) throw std::invalid_argument("nonpositive");
    if (workers == 0) {
        unsigned hc = std::thread::hardware_concurrency();
        workers = hc ? hc : 1;
    }
    const long block = 1 << 16;
    for (unsigned long w = 1; w <= bound.max_w; ++w) {
        Int start = (w == 1) ? 0 : 1;
        while (start <= bound.max_u) {
            Int end = start + (block - 1);
            if (end > bound.max_u) end = bound.max_u;

            if (workers == 1) {
                std::optional<Point> found;
                detail::scan_denominator_class(
                    c, w, start, end, [&](const Int&, int, const Point& p) {
                        if (!classify_order(c, p)) {
                            found = p;
                            return true;
                        }
                        return false;
                    });
                if (found) return found;
            } else {
                struct Hit {
                    Int m;
                    int sign;
                    Point point;
                };
                std::vector<std::vector<Hit>> hits(workers);
                std::vector<std::thread> pool;
                Int total = end - start + 1;
                for (unsigned i = 0; i < workers; ++i) {
                    Int lo = start + total * i / workers;
                    Int hi = start + total * (i + 1) / workers - 1;
                    if (lo > hi) continue;
                    pool.emplace_back([&c, w, lo, hi, &hits, i] {
                        detail::scan_denominator_class(
                            c, w, lo, hi, [&](const Int& m, int sign, const Point& p) {
                                if (!classify_order(c, p)) hits[i].push_back({m, sign, p});
                                return false;
                            });
                    });
                }
                for (auto& th : pool) th.join();
                const Hit* best = nullptr;
                for (const auto& v : hits)
                    for (const auto& h : v)
                        if (!best || h.m < best->m || (h.m == best->m && h.sign < best->sign))
                            best = &h;
                if (best) return best->point;
            }
            start = end + 1;
        }
    }
    return std::nullopt;
}

struct Verdict {
    std::optional<PairWitness> witness;  // engaged exactly when pythapotent
    std::optional<Point> generator;      // non-torsion point backing the witness
    SearchBound bound;

    bool is_potent() const { return witness.has_value(); }
};

// Decides pythapotency of (a,b) at degree h. Degree 3 is unconditional via
// the closed cubic forms (transferred through scaling d = gcd(a,b) and the
// odd-member orientation); every other degree searches within the bound.
// Either way the returned witness is re-verified from scratch.
inline Verdict pythapotent_verdict(const Int& a, const Int& b, unsigned long h,
                                   const SearchBound& bound) {
    Curve c = make_curve(a, b, h);
    if (h == 3) {
        Int d = gcd(a, b);
        Int a0 = a / d, b0 = b / d;
        PrimitiveDecomposition dec = decompose_primitive(a0, b0);
        MnParams mn{dec.r, dec.s};
        PairWitness w0 = cubic_pair(mn);
        Int k = dec.swapped ? w0.l : w0.k;
        Int l = dec.swapped ? w0.k : w0.l;
        std::string source = w0.source;
        if (dec.swapped) source += ", members swapped";
        if (d != 1) source += ", scaled from (" + a0.get_str() + "," + b0.get_str() + ")";
        PairWitness w = detail::finish_witness(c, k, l, "multiple of (a,b)", source);

        Point p0 = cubic_point(mn);
        Point gen = p0;
        if (d != 1)
            gen = Point::affine(p0.x() * Rat(pow(d, 6)), p0.y() * Rat(pow(d, 9)));
        require_on_curve(c, gen);
        if (classify_order(c, gen)) throw std::domain_error("torsion point");
        return {std::move(w), std::move(gen), bound};
    }
    std::optional<Point> gen = find_point(c, bound);
    if (!gen) return {std::nullopt, std::nullopt, bound};
    PairWitness w = derive_pair(c, *gen);
    verify_witness(a, b, h, w.k, w.l);
    return {std::move(w), std::move(gen), bound};
}

// Witnesses from [2]P, [4]P, ..., [2*count]P, deduplicated by proportionality.
inline std::vector<PairWitness> multi_witness(const Curve& c, const Point& p,
                                              unsigned count) {
    if (classify_order(c, p)) throw std::domain_error("torsion point");
    std::vector<PairWitness> out;
    Point q = Point::infinity();
    for (unsigned i = 1; i <= count; ++i) {
        q = add(c, q, p);  // q = [i]P, so the witness comes from [2i]P
        PairWitness w = derive_pair(c, q);
        w.source = "[" + std::to_string(2 * i) + "]P for P=" + p.str();
        bool dup = false;
        for (const auto& seen : out) dup = dup || proportional(seen, w);
        if (!dup) out.push_back(std::move(w));
    }
    return out;
}

// One scan record: tab-separated, decimal ASCII, "-" placeholders on UNKNOWN.
inline std::string format_record(const Int& a, const Int& b, unsigned long h,
                                 const Verdict& v) {
    std::string line = a.get_str() + "\t" + b.get_str() + "\t" + std::to_string(h) + "\t";
    if (v.is_potent()) {
        const PairWitness& w = *v.witness;
        const Point& g = *v.generator;
        line += "POTENT\t" + w.k.get_str() + "\t" + w.l.get_str() + "\t" +
                w.inner_hyp.get_str() + "\t" + w.outer_hyp.get_str() + "\t" +
                g.x().num().get_str() + "\t" + g.x().den().get_str() + "\t" +
                g.y().num().get_str() + "\t" + g.y().den().get_str();
    } else {
        line += "UNKNOWN\t-\t-\t-\t-\t-\t-\t-\t-";
    }
    line += "\t" + std::to_string(v.bound.max_w) + "\t" + v.bound.max_u.get_str();
    return line;
}

// Scans all primitive (m,n) with n < m <= m_max against each degree in
// h_list (sorted, deduplicated); one record per (a,b,h), lexicographic in
// (m,n,h). Sink write failures abort the scan.
inline unsigned long scan(unsigned long m_max, std::vector<unsigned long> h_list,
                          const SearchBound& bound, std::ostream& sink) {
    if (m_max < 2) throw std::invalid_argument("m_max must be at least 2");
    std::sort(h_list.begin(), h_list.end());
    h_list.erase(std::unique(h_list.begin(), h_list.end()), h_list.end());
    unsigned long records = 0;
    for (Int m = 2; m <= Int(m_max); ++m) {
        for (Int n = 1; n < m; ++n) {
            MnParams mn{m, n};
            if (!mn.is_primitive()) continue;
            PythagoreanPair pr = pair_from_mn(mn);
            for (unsigned long h : h_list) {
                Verdict v = pythapotent_verdict(pr.a, pr.b, h, bound);
                sink << format_record(pr.a, pr.b, h, v) << '\n';
                if (!sink) throw std::runtime_error("record sink write failed");
                ++records;
            }
        }
    }
    sink.flush();
    if (!sink) throw std::runtime_error("record sink write failed");
    return records;
}

}  // namespace pythapotent
