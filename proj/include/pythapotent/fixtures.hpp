#pragma once

// Certified reference data for the built-in verification suite: known
// rational points of infinite order on the (3,4) curves at degrees
// 3, 4, 6, 8, 9, together with the witness values they must derive to.
// Everything else in the suite is recomputed from scratch at run time.

#include <optional>
#include <string>
#include <vector>

#include "pythapotent/curve.hpp"
#include "pythapotent/exact.hpp"

namespace pythapotent {

struct CertifiedCase {
    std::string key;      // reproduction item this case belongs to
    unsigned long h;
    Point point;          // known non-torsion point on the degree-h curve
    Rat sqrt_x2;          // expected positive square root of x([2]P)
    Int k;                // expected witness pair
    Int l;
    std::optional<Int> inner;  // expected inner hypotenuse where pinned
    Int outer;                 // expected outer hypotenuse
};

struct Fixtures {
    Int a = 3;
    Int b = 4;
    std::vector<CertifiedCase> cases;
    std::vector<unsigned long> rank0_degrees = {1, 2, 5};  // bounded search must come up empty

    const CertifiedCase& by_key(const std::string& key) const {
        for (const auto& c : cases)
            if (c.key == key) return c;
        throw std::invalid_argument("unknown fixture key: " + key);
    }

    // Negative-control hook: damages one certified constant so the
    // verification suite must report a failure.
    void corrupt() { cases.front().outer += 1; }
};

inline Fixtures certified_fixtures() {
    Fixtures fx;
    auto pt = [](const char* x, const char* y) {
        return Point::affine(parse_rat(x), parse_rat(y));
    };

    fx.cases.push_back({"h3", 3, pt("-3888", "50544"), parse_rat("120"), Int(8), Int(15),
                        Int(17), Int(984)});

    fx.cases.push_back({"h4", 4, pt("-11616", "1779360"), parse_rat("912/11"), Int(176),
                        Int(57), Int(185), Int(20400)});

    fx.cases.push_back({"h6", 6, pt("46022656/9", "-678725632000/27"),
                        parse_rat("3542528/10335"), Int(82680), Int(6919), Int(82969),
                        Int(66603976)});

    fx.cases.push_back(
        {"h8", 8,
         pt("7708125201644979550524801024/4449714580590446281",
            "1277921705702061766209671471345189388288000/9386382158955136069419053179"),
         parse_rat("53440130127350994946668083276381874419712/"
                   "5167588869543442260000066303720001735"),
         parse_int("165362843825390152320002121719040055520"),
         parse_int("26093813538745603001302775037295837119"), std::nullopt,
         parse_int("2025214764653997025456624774452736238320416")});

    fx.cases.push_back(
        {"h9", 9,
         pt("25081364886334831007139600/1571551568609929201",
            "41443059164404768152156856423653413183280/1970121246732012270673366199"),
         parse_rat("893146963381147972449638465746558838722398648/"
                   "1411411003643292904433293132813004363405"),
         parse_int("46249115767383421892470149376016526980055040"),
         parse_int("111643370422643496556204808218319854840299831"), std::nullopt,
         parse_int("29280793774283640248199258896077312831993114558464")});

    fx.cases.push_back({"h9", 9, pt("37016224137216/3481", "-626321243401613475840/205379"),
                        parse_rat("33879841085325312/2390157690995"),
                        parse_int("2390157690995"), parse_int("129241337148"), std::nullopt,
                        parse_int("57975169167761913")});

    // The third degree-9 case starts from the sum of the two points above;
    // its coordinates are recomputed by the group law during verification.
    {
        Curve c9 = make_curve(fx.a, fx.b, 9);
        Point q = add(c9, fx.cases[4].point, fx.cases[5].point);
        fx.cases.push_back({"h9", 9, q,
                            parse_rat("535606775034572770422692764010359062528/"
                                      "101246892970078905163938616171330325"),
                            parse_int("809975143760631241311508929370642600"),
                            parse_int("16345421601396874097372215698558321"), std::nullopt,
                            parse_int("16508511692072764149750761383248338944776")});
    }
    return fx;
}

}  // namespace pythapotent
