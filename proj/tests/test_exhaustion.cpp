#include <gtest/gtest.h>

#include <cstdint>
#include <random>

#include "oracles.hpp"
#include "tower/exhaustion.hpp"
#include "tower/interval.hpp"

using namespace tower;
using oracle::to_cpp;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

}  // namespace

TEST(MachinOracle, EnclosureIsTight) {
    auto [lo, hi] = oracle::pi_machin(30);
    EXPECT_LT(hi - lo, oracle::cpp_rational(1, 1000000) * oracle::cpp_rational(1, 1000000000000LL));
    EXPECT_LT(lo, oracle::cpp_rational(314159266, 100000000));
    EXPECT_GT(lo, oracle::cpp_rational(314159265, 100000000));
}

TEST(Interval, ArithmeticContainsPointResults) {
    std::mt19937_64 rng(4);
    auto r = [&] { return Rational(Integer(static_cast<std::int64_t>(rng() % 201) - 100), Natural(rng() % 9 + 1)); };
    for (int i = 0; i < 1000; ++i) {
        Rational a = r();
        Rational b = r();
        Rational c = r();
        Rational d = r();
        RationalInterval x(min(a, b), max(a, b));
        RationalInterval y(min(c, d), max(c, d));
        ASSERT_TRUE((x + y).contains(a + c));
        ASSERT_TRUE((x - y).contains(b - d));
        ASSERT_TRUE((x * y).contains(a * d));
        ASSERT_TRUE((x * y).contains(b * c));
        if (!y.contains_zero()) {
            ASSERT_TRUE((x / y).contains(a / c));
        }
    }
}

TEST(Interval, SqrtWidthAndContainment) {
    for (unsigned x = 0; x < 300; ++x) {
        for (std::size_t bits : {1U, 8U, 64U, 200U}) {
            RationalInterval iv = sqrt_interval(Rational(x), bits);
            ASSERT_LE(iv.width(), Rational::dyadic(Integer(1), bits));
            ASSERT_LE(iv.lo() * iv.lo(), Rational(x));
            ASSERT_GE(iv.hi() * iv.hi(), Rational(x));
        }
    }
    EXPECT_THROW((void)sqrt_interval(Rational(-1), 8), domain_error);
}

TEST(Interval, ReciprocalOfZeroStraddlingThrows) {
    EXPECT_THROW((void)RationalInterval(Rational(-1), Rational(1)).reciprocal(), domain_error);
    EXPECT_THROW(RationalInterval(Rational(2), Rational(1)), domain_error);
}

TEST(PolygonArea, HalfAltitudeTimesPerimeter) {
    EXPECT_EQ(polygon_area(Rational(1), Rational(6)), Rational(3));
    EXPECT_THROW((void)polygon_area(Rational(0), Rational(6)), domain_error);
}

TEST(PiBounds, HexagonStart) {
    auto rows = pi_bounds(0);
    ASSERT_EQ(rows.size(), 1U);
    EXPECT_EQ(rows[0].sides, Natural(6U));
    EXPECT_EQ(rows[0].inscribed.lo(), Rational(3));
    // a_6 = 2 sqrt(3)
    EXPECT_LE(rows[0].circumscribed.lo() * rows[0].circumscribed.lo(), Rational(12));
    EXPECT_GE(rows[0].circumscribed.hi() * rows[0].circumscribed.hi(), Rational(12));
}

TEST(PiBounds, NinetySixGonAgainstMachin) {
    auto rows = pi_bounds(4);
    const auto& last = rows.back();
    EXPECT_EQ(last.sides, Natural(96U));
    auto [lo, hi] = oracle::pi_machin();
    EXPECT_LT(to_cpp(last.inscribed.lo()), lo);
    EXPECT_GT(to_cpp(last.circumscribed.hi()), hi);
    EXPECT_GE(last.inscribed.lo(), q("31410/10000"));
    EXPECT_LE(last.circumscribed.hi(), q("31428/10000"));
    // the classical 3 10/71 < pi < 3 1/7
    EXPECT_GT(last.inscribed.lo(), q("223/71"));
    EXPECT_LT(last.circumscribed.hi(), q("22/7"));
}

TEST(PiBounds, EveryRowBracketsMachin) {
    auto [lo, hi] = oracle::pi_machin();
    for (const auto& row : pi_bounds(30, 128)) {
        ASSERT_LT(to_cpp(row.inscribed.lo()), lo) << row.sides;
        ASSERT_GT(to_cpp(row.circumscribed.hi()), hi) << row.sides;
    }
}

TEST(PiBounds, TwentyDoublingsAt128Bits) {
    auto rows = pi_bounds(20, 128);
    EXPECT_LT(rows.back().gap, q("1/10000000000"));
}

TEST(PiBounds, SquareStartAlsoBrackets) {
    auto [lo, hi] = oracle::pi_machin();
    auto rows = pi_bounds(10, 64, StartPolygon::square);
    EXPECT_EQ(rows.front().sides, Natural(4U));
    EXPECT_LT(to_cpp(rows.back().inscribed.lo()), lo);
    EXPECT_GT(to_cpp(rows.back().circumscribed.hi()), hi);
}

TEST(PiBounds, TooManyDoublings) { EXPECT_THROW((void)pi_bounds(65), domain_error); }

TEST(Halving, TenDoublingsAt128Bits) {
    HalvingVerdict v = exhaustion_halving_check(pi_bounds(10, 128));
    EXPECT_EQ(v.pairs_checked, 10U);
    EXPECT_TRUE(v.holds());
}

TEST(Halving, DetectsAViolation) {
    auto rows = pi_bounds(2, 64);
    rows[2].gap = rows[1].gap;
    HalvingVerdict v = exhaustion_halving_check(rows);
    ASSERT_EQ(v.failures.size(), 1U);
    EXPECT_EQ(v.failures[0].index, 1U);
}

TEST(AreaRatio, SquaresOnDiameters) {
    for (auto [a, b] : {std::pair{"1", "2"}, std::pair{"3", "5"}, std::pair{"2", "3"}}) {
        AreaRatioVerdict v = area_ratio_check(q(a), q(b), 4);
        EXPECT_TRUE(v.contains) << a << " " << b;
    }
    EXPECT_EQ(area_ratio_check(q("3"), q("5"), 4).diameter_square_ratio, q("9/25"));
}

TEST(CircleArea, ScalesWithRadiusSquared) {
    RationalInterval one = circle_area_bounds(Rational(1), 6);
    RationalInterval three = circle_area_bounds(Rational(3), 6);
    EXPECT_EQ(three.lo(), one.lo() * Rational(9));
    EXPECT_EQ(three.hi(), one.hi() * Rational(9));
}

TEST(Zeno, ExactPartialSums) {
    auto rows = zeno_table(64);
    EXPECT_EQ(rows[19].partial, q("1048575/1048576"));
    for (const auto& r : rows) {
        ASSERT_EQ(Rational(1) - r.partial, Rational::dyadic(Integer(1), r.n));
    }
}

TEST(RulerCompass, GoldenCase) {
    RulerCompassProduct p = ruler_compass_product(q("3/2"), q("4/3"));
    EXPECT_EQ(p.length, Rational(2));
    EXPECT_TRUE(p.similar_ratio_holds);
    ASSERT_EQ(p.points.size(), 5U);
    const char* want[5][3] = {{"A", "0", "0"}, {"B", "3/2", "0"}, {"C", "3/5", "4/5"},
                              {"E", "4/5", "16/15"}, {"D", "2", "0"}};
    for (std::size_t i = 0; i < 5; ++i) {
        EXPECT_EQ(p.points[i].label, want[i][0]);
        EXPECT_EQ(p.points[i].x, q(want[i][1]));
        EXPECT_EQ(p.points[i].y, q(want[i][2]));
    }
}

TEST(RulerCompass, RandomPairs) {
    std::mt19937_64 rng(10);
    for (int i = 0; i < 1000; ++i) {
        Rational a(Integer(Natural(rng() % 1000 + 1)), Natural(rng() % 1000 + 1));
        Rational b(Integer(Natural(rng() % 1000 + 1)), Natural(rng() % 1000 + 1));
        RulerCompassProduct p = ruler_compass_product(a, b);
        ASSERT_EQ(p.length, a * b);
        ASSERT_TRUE(p.similar_ratio_holds);
    }
}

TEST(Theodorus, HypotenuseContainsRoot) {
    auto verts = theodorus_vertices(30, 96);
    for (const auto& v : verts) {
        Rational target(static_cast<std::int64_t>(v.k + 1));
        ASSERT_LE(v.hypotenuse.lo() * v.hypotenuse.lo(), target) << v.k;
        ASSERT_GE(v.hypotenuse.hi() * v.hypotenuse.hi(), target) << v.k;
    }
}

TEST(Theodorus, PrecisionExhaustion) {
    EXPECT_THROW((void)theodorus_vertices(200, 8), domain_error);
}
