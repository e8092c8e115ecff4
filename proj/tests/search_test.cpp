#include <gtest/gtest.h>

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <pythapotent/search.hpp>

using namespace pythapotent;

namespace {
Curve c3() { return make_curve(Int(3), Int(4), 3); }
}  // namespace

TEST(AcceptedPoints, ExhaustiveListDegree3) {
    // Every integral x with |x| <= 5000 whose cubic value is a square,
    // in canonical order (increasing |u|, u > 0 before u < 0).
    auto out = accepted_points(c3(), {1, Int(5000)});
    struct Expect {
        long u;
        long y;
        std::optional<int> order;
    };
    std::vector<Expect> want = {
        {0, 0, 2},          {48, 12432, std::nullopt},   {363, 42042, std::nullopt},
        {-729, 0, 2},       {-768, 9984, std::nullopt},  {-1296, 45360, std::nullopt},
        {1728, 157248, 4},  {-1728, 63936, 4},           {-2304, 80640, std::nullopt},
        {3600, 346320, std::nullopt},                    {-3888, 50544, std::nullopt},
        {-4096, 0, 2},
    };
    ASSERT_EQ(out.size(), want.size());
    for (size_t i = 0; i < want.size(); ++i) {
        EXPECT_EQ(out[i].w, 1u) << i;
        EXPECT_EQ(out[i].u, want[i].u) << i;
        EXPECT_EQ(out[i].point.x(), Rat(Int(want[i].u))) << i;
        EXPECT_EQ(out[i].point.y(), Rat(Int(want[i].y))) << i;
        EXPECT_EQ(out[i].order, want[i].order) << i;
    }
}

TEST(AcceptedPoints, MatchesNaiveRationalScan) {
    // Independent oracle: straight Rat evaluation of the cubic over the same
    // grid, accepting exactly when the value has a rational square root.
    Curve c = c3();
    SearchBound bound{2, Int(10000)};
    std::set<std::string> naive;
    for (unsigned long w = 1; w <= bound.max_w; ++w) {
        for (Int m = 0; m <= bound.max_u; ++m) {
            if (gcd(m, Int(w)) != 1 && !(w == 1)) continue;
            for (int sign = 0; sign < (m == 0 ? 1 : 2); ++sign) {
                Int u = sign ? Int(-m) : m;
                Rat x(u, Int(w) * Int(w));
                Rat val = x * x * x + Rat(c.A) * x * x + Rat(c.B) * x;
                if (val.sign() >= 0 && rational_sqrt(val)) naive.insert(x.str());
            }
        }
    }
    std::set<std::string> fast;
    for (const auto& cand : accepted_points(c, bound)) fast.insert(cand.point.x().str());
    EXPECT_EQ(fast, naive);
}

TEST(FindPoint, FirstNonTorsionInCanonicalOrder) {
    auto p = find_point(c3(), {1, Int(5000)}, 1);
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(p->x(), Rat(Int(48)));
    EXPECT_EQ(p->y(), Rat(Int(12432)));

    Curve c4 = make_curve(Int(3), Int(4), 4);
    auto q = find_point(c4, {1, Int(12000)}, 1);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(q->x(), Rat(Int(6144)));
    EXPECT_EQ(q->y(), Rat(Int(2365440)));
    EXPECT_EQ(classify_order(c4, *q), std::nullopt);

    // The found point derives to the same witness as the certified one: they
    // differ by 2-torsion, so they share x([2]P).
    PairWitness w = derive_pair(c4, *q);
    EXPECT_EQ(w.k, 176);
    EXPECT_EQ(w.l, 57);
    EXPECT_EQ(w.inner_hyp, 185);
    EXPECT_EQ(w.outer_hyp, 20400);
}

TEST(FindPoint, EmptyWhenOnlyTorsionInRange) {
    Curve c5 = make_curve(Int(3), Int(4), 5);
    EXPECT_FALSE(find_point(c5, {1, Int(100)}, 1).has_value());
    EXPECT_FALSE(find_point(c5, {1, Int(100)}, 3).has_value());
}

TEST(FindPoint, DeterministicAcrossWorkerCounts) {
    Curve c = c3();
    SearchBound bound{2, Int(5000)};
    auto p1 = find_point(c, bound, 1);
    auto p3 = find_point(c, bound, 3);
    auto p7 = find_point(c, bound, 7);
    ASSERT_TRUE(p1.has_value());
    EXPECT_EQ(*p1, *p3);
    EXPECT_EQ(*p1, *p7);
    EXPECT_EQ(p1->x(), Rat(Int(48)));
}

TEST(FindPoint, RejectsBadBounds) {
    EXPECT_THROW(find_point(c3(), {0, Int(100)}), std::invalid_argument);
    EXPECT_THROW(find_point(c3(), {1, Int(0)}), std::invalid_argument);
}

TEST(Verdict, CubicUnconditional) {
    Verdict v = pythapotent_verdict(Int(3), Int(4), 3, {});
    ASSERT_TRUE(v.is_potent());
    EXPECT_EQ(v.witness->k, 40);
    EXPECT_EQ(v.witness->l, 9);
    EXPECT_EQ(v.witness->inner_hyp, 41);
    EXPECT_EQ(v.witness->outer_hyp, 1224);
    ASSERT_TRUE(v.generator.has_value());
    EXPECT_EQ(v.generator->x(), Rat(Int(-2304)));
    EXPECT_EQ(v.generator->y(), Rat(Int(-80640)));
}

TEST(Verdict, CubicScaledPair) {
    // (6,8) = 2*(3,4): witness carries over, outer scales by 2^3, the
    // generator maps through (x,y) -> (2^6 x, 2^9 y).
    Verdict v = pythapotent_verdict(Int(6), Int(8), 3, {});
    ASSERT_TRUE(v.is_potent());
    EXPECT_EQ(v.witness->k, 40);
    EXPECT_EQ(v.witness->l, 9);
    EXPECT_EQ(v.witness->inner_hyp, 41);
    EXPECT_EQ(v.witness->outer_hyp, 9792);
    EXPECT_EQ(v.generator->x(), Rat(Int(-147456)));
    EXPECT_EQ(v.generator->y(), Rat(Int(-41287680)));
    Curve c = make_curve(Int(6), Int(8), 3);
    EXPECT_TRUE(contains(c, *v.generator));
    EXPECT_EQ(classify_order(c, *v.generator), std::nullopt);
}

TEST(Verdict, CubicSwappedOrientation) {
    // (4,3): the odd member comes second, so the closed-form witness swaps.
    Verdict v = pythapotent_verdict(Int(4), Int(3), 3, {});
    ASSERT_TRUE(v.is_potent());
    EXPECT_EQ(v.witness->k, 9);
    EXPECT_EQ(v.witness->l, 40);
    EXPECT_EQ(v.witness->inner_hyp, 41);
    EXPECT_EQ(v.witness->outer_hyp, 1224);
    Curve c = make_curve(Int(4), Int(3), 3);
    EXPECT_TRUE(contains(c, *v.generator));
}

TEST(Verdict, SearchBackedDegree4) {
    Verdict v = pythapotent_verdict(Int(3), Int(4), 4, {1, Int(12000)});
    ASSERT_TRUE(v.is_potent());
    EXPECT_EQ(v.witness->k, 176);
    EXPECT_EQ(v.witness->l, 57);
    EXPECT_EQ(v.generator->x(), Rat(Int(6144)));
}

TEST(Verdict, UnknownWhenSearchExhausted) {
    Verdict v = pythapotent_verdict(Int(3), Int(4), 5, {1, Int(100)});
    EXPECT_FALSE(v.is_potent());
    EXPECT_FALSE(v.generator.has_value());
    EXPECT_EQ(v.bound.max_w, 1u);
    EXPECT_EQ(v.bound.max_u, 100);
}

TEST(Verdict, RejectsNonPythagoreanPair) {
    EXPECT_THROW(pythapotent_verdict(Int(1), Int(2), 3, {}), std::domain_error);
}

TEST(MultiWitness, KnownSequence) {
    Curve c = c3();
    Point p = Point::affine(Rat(Int(-3888)), Rat(Int(50544)));

    auto one = multi_witness(c, p, 1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].k, 8);
    EXPECT_EQ(one[0].l, 15);

    auto three = multi_witness(c, p, 3);
    ASSERT_EQ(three.size(), 3u);
    EXPECT_EQ(three[0].k, 8);
    EXPECT_EQ(three[0].l, 15);
    EXPECT_EQ(three[1].k, 3485);
    EXPECT_EQ(three[1].l, 2772);
    EXPECT_EQ(three[2].k, parse_int("1991911688"));
    EXPECT_EQ(three[2].l, parse_int("754040745"));
    EXPECT_FALSE(proportional(three[0], three[1]));
    EXPECT_FALSE(proportional(three[0], three[2]));
    EXPECT_FALSE(proportional(three[1], three[2]));
    EXPECT_NE(three[1].source.find("[4]P"), std::string::npos);

    EXPECT_TRUE(multi_witness(c, p, 0).empty());

    try {
        multi_witness(c, Point::affine(Rat(Int(1728)), Rat(Int(157248))), 2);
        FAIL() << "expected domain_error";
    } catch (const std::domain_error& e) {
        EXPECT_STREQ(e.what(), "torsion point");
    }
}

TEST(FormatRecord, Goldens) {
    Verdict v3 = pythapotent_verdict(Int(3), Int(4), 3, {});
    EXPECT_EQ(format_record(Int(3), Int(4), 3, v3),
              "3\t4\t3\tPOTENT\t40\t9\t41\t1224\t-2304\t1\t-80640\t1\t4\t1000000");

    Verdict v5 = pythapotent_verdict(Int(3), Int(4), 5, {1, Int(100)});
    EXPECT_EQ(format_record(Int(3), Int(4), 5, v5),
              "3\t4\t5\tUNKNOWN\t-\t-\t-\t-\t-\t-\t-\t-\t1\t100");
}

TEST(Scan, SmallGrids) {
    std::ostringstream out;
    unsigned long n = scan(2, {3}, {}, out);
    EXPECT_EQ(n, 1u);
    EXPECT_EQ(out.str(),
              "3\t4\t3\tPOTENT\t40\t9\t41\t1224\t-2304\t1\t-80640\t1\t4\t1000000\n");

    std::ostringstream out2;
    unsigned long n2 = scan(3, {3}, {}, out2);
    EXPECT_EQ(n2, 2u);
    EXPECT_EQ(out2.str(),
              "3\t4\t3\tPOTENT\t40\t9\t41\t1224\t-2304\t1\t-80640\t1\t4\t1000000\n"
              "5\t12\t3\tPOTENT\t312\t25\t313\t58200\t-518400\t1\t-801964800\t1\t4\t1000000\n");
}

TEST(Scan, DegenerateAndFailingSink) {
    std::ostringstream out;
    EXPECT_THROW(scan(1, {3}, {}, out), std::invalid_argument);

    std::ostringstream bad;
    bad.setstate(std::ios::badbit);
    EXPECT_THROW(scan(2, {3}, {}, bad), std::runtime_error);
}

TEST(Scan, DeduplicatesAndSortsDegrees) {
    std::ostringstream out;
    unsigned long n = scan(2, {3, 3, 3}, {}, out);
    EXPECT_EQ(n, 1u);
}
