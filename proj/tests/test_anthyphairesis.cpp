#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "tower/anthyphairesis/continued_fraction.hpp"
#include "tower/anthyphairesis/euclid.hpp"
#include "tower/interval.hpp"

using boost::multiprecision::cpp_int;
using namespace tower;

namespace {

std::vector<Natural> nats(std::initializer_list<unsigned> xs) {
    std::vector<Natural> out;
    for (unsigned x : xs) {
        out.emplace_back(x);
    }
    return out;
}

// Greatest common divisor by trying every candidate.
std::uint64_t brute_gcd(std::uint64_t a, std::uint64_t b) {
    for (std::uint64_t d = std::min(a, b); d > 1; --d) {
        if (a % d == 0 && b % d == 0) {
            return d;
        }
    }
    return 1;
}

// Euclid over cpp_int, independent of Natural.
std::vector<cpp_int> oracle_cf(cpp_int p, cpp_int q) {
    std::vector<cpp_int> out;
    while (q != 0) {
        out.push_back(p / q);
        cpp_int r = p % q;
        p = q;
        q = r;
    }
    return out;
}

// Quotients of sqrt(d) that are certain: the common prefix of the expansions
// of floor(sqrt(d) 10^40) / 10^40 and the next grid point above it.
std::vector<cpp_int> oracle_sqrt_prefix(unsigned d) {
    const cpp_int scale = boost::multiprecision::pow(cpp_int(10), 40);
    const cpp_int root = boost::multiprecision::sqrt(cpp_int(d) * scale * scale);
    auto lo = oracle_cf(root, scale);
    auto hi = oracle_cf(root + 1, scale);
    std::vector<cpp_int> common;
    for (std::size_t i = 0; i + 1 < std::min(lo.size(), hi.size()) && lo[i] == hi[i]; ++i) {
        common.push_back(lo[i]);
    }
    return common;
}

}  // namespace

TEST(Gcd, BoxedTable136And6) {
    GcdResult r = gcd(Natural(136U), Natural(6U));
    EXPECT_EQ(r.gcd, Natural(2U));
    ASSERT_EQ(r.trace.steps.size(), 3U);
    EXPECT_EQ(r.trace.steps[0], (AnthyphairesisStep{Natural(136U), Natural(22U), Natural(6U), Natural(4U)}));
    EXPECT_EQ(r.trace.steps[1], (AnthyphairesisStep{Natural(6U), Natural(1U), Natural(4U), Natural(2U)}));
    EXPECT_EQ(r.trace.steps[2], (AnthyphairesisStep{Natural(4U), Natural(2U), Natural(2U), Natural(0U)}));
    EXPECT_EQ(format_trace_table(r.trace),
              "136 = 22 × 6 + 4\n"
              "  6 =  1 × 4 + (2)\n"
              "  4 =  2 × 2 + 0\n");
}

TEST(Gcd, Table17And3IsCoprime) {
    GcdResult r = gcd(Natural(17U), Natural(3U));
    EXPECT_EQ(r.gcd, Natural(1U));
    EXPECT_TRUE(coprime(Natural(17U), Natural(3U)));
    EXPECT_FALSE(coprime(Natural(136U), Natural(6U)));
}

TEST(Gcd, SmallerFirstStartsWithZeroQuotient) {
    GcdResult r = gcd(Natural(3U), Natural(17U));
    EXPECT_EQ(r.trace.steps[0].quotient, Natural(0U));
    EXPECT_EQ(r.gcd, Natural(1U));
}

TEST(Gcd, RejectsZero) {
    EXPECT_THROW((void)gcd(Natural(0U), Natural(5U)), domain_error);
    EXPECT_THROW((void)coprime(Natural(5U), Natural(0U)), domain_error);
}

TEST(GcdLiteral, SameTraceAsDivision) {
    GcdResult fast = gcd(Natural(136U), Natural(6U));
    GcdResult slow = gcd_literal(Natural(136U), Natural(6U));
    EXPECT_EQ(fast.trace.steps, slow.trace.steps);
    EXPECT_EQ(slow.trace.subtractions, 22U + 1U + 2U);
}

TEST(GcdLiteral, BudgetExceeded) {
    EXPECT_THROW((void)gcd_literal(Natural(1000001U), Natural(1U)), domain_error);
    EXPECT_NO_THROW((void)gcd_literal(Natural(1000000U), Natural(1U)));
}

TEST(GcdProperty, AgreesWithBruteForceAndStd) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        std::uint64_t a = rng() % 5000 + 1;
        std::uint64_t b = rng() % 5000 + 1;
        GcdResult r = gcd(Natural(a), Natural(b));
        ASSERT_EQ(r.gcd, Natural(brute_gcd(a, b))) << a << " " << b;
        std::uint64_t x = rng() | 1;
        std::uint64_t y = rng() | 1;
        ASSERT_EQ(gcd_value(Natural(x), Natural(y)), Natural(std::gcd(x, y)));
    }
}

TEST(GcdProperty, TraceRowsAreDivisions) {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 500; ++i) {
        Natural a(rng() % 100000 + 1);
        Natural b(rng() % 100000 + 1);
        for (const auto& s : gcd(a, b).trace.steps) {
            ASSERT_EQ(s.quotient * s.divisor + s.remainder, s.dividend);
            ASSERT_LT(s.remainder, s.divisor);
        }
    }
}

TEST(ContinuedFraction, ClassicExamples) {
    EXPECT_EQ(cf_expand(Rational::parse("17/3")).to_string(), "[5; 1, 2]");
    EXPECT_EQ(cf_expand(Rational::parse("136/6")).to_string(), "[22; 1, 2]");
    EXPECT_EQ(cf_expand(Rational::parse("12/5")).to_string(), "[2; 2, 2]");
    EXPECT_EQ(cf_expand(Rational::parse("22/6")).to_string(), "[3; 1, 2]");
    EXPECT_EQ(cf_expand(Rational(7)).to_string(), "[7]");
}

TEST(ContinuedFraction, TrailingOneMerged) {
    EXPECT_EQ(make_finite_cf(nats({5, 1, 1, 1})), make_finite_cf(nats({5, 1, 2})));
    EXPECT_THROW((void)make_finite_cf(nats({1, 0, 2})), domain_error);
}

TEST(ContinuedFraction, NegativeRejected) {
    EXPECT_THROW((void)cf_expand(Rational::parse("-3/4")), domain_error);
}

TEST(ContinuedFractionProperty, RoundTripAgainstCppIntEuclid) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 1000; ++i) {
        std::uint64_t p = rng() % 1000000;
        std::uint64_t q = rng() % 1000000 + 1;
        Rational x{Integer(Natural(p)), Natural(q)};
        CFExpansion e = cf_expand(x);
        ASSERT_EQ(cf_reconstruct(e), x);
        // the oracle's expansion may end in 1; canonical form merges it
        auto raw = oracle_cf(cpp_int(p), cpp_int(q));
        std::vector<Natural> terms;
        for (const auto& t : raw) {
            terms.push_back(Natural::parse(t.str()));
        }
        ASSERT_EQ(e, make_finite_cf(terms));
    }
}

TEST(Convergents, SqrtTwo) {
    CFExpansion e = surd_cf(Natural(2U));
    auto cs = convergents(e, 5);
    std::vector<std::string> text;
    for (const auto& c : cs) {
        text.push_back(c.to_string());
    }
    EXPECT_EQ(text, (std::vector<std::string>{"1/1", "3/2", "7/5", "17/12", "41/29"}));
}

TEST(Convergents, GapBoundVerifiedByIntervalSqrt) {
    CFExpansion e = surd_cf(Natural(2U));
    RationalInterval root = sqrt_interval(Rational(2), 64);
    auto pairs = convergent_pairs(e, 6);
    for (std::size_t k = 0; k + 1 < pairs.size(); ++k) {
        Rational c = pairs[k].value();
        Rational bound = approximation_gap(e, k);
        EXPECT_EQ(bound, Rational(Integer(1), pairs[k].q * pairs[k + 1].q));
        RationalInterval err = root - RationalInterval(c);
        EXPECT_LT(max(abs(err.lo()), abs(err.hi())), bound) << k;
    }
}

TEST(Convergents, Alternate) {
    CFExpansion e = surd_cf(Natural(2U));
    RationalInterval root = sqrt_interval(Rational(2), 64);
    auto cs = convergents(e, 10);
    for (std::size_t k = 0; k < cs.size(); ++k) {
        if (k % 2 == 0) {
            EXPECT_LT(cs[k], root.lo());
        } else {
            EXPECT_GT(cs[k], root.hi());
        }
    }
}

TEST(Surd, Examples) {
    EXPECT_EQ(surd_cf(Natural(2U)).to_string(), "[1; (2)]");
    EXPECT_EQ(surd_cf(Natural(3U)).to_string(), "[1; (1, 2)]");
    EXPECT_EQ(surd_cf(Natural(7U)).to_string(), "[2; (1, 1, 1, 4)]");
    EXPECT_EQ(surd_cf(Natural(13U)).to_string(), "[3; (1, 1, 1, 1, 6)]");
}

TEST(Surd, PerfectSquareRejected) {
    EXPECT_THROW((void)surd_cf(Natural(4U)), domain_error);
    EXPECT_THROW((void)surd_cf(Natural(1U)), domain_error);
}

TEST(SurdProperty, PrefixAgreesWithCppIntSqrt) {
    for (unsigned d = 2; d <= 300; ++d) {
        if (is_perfect_square(Natural(d))) {
            continue;
        }
        CFExpansion e = surd_cf(Natural(d));
        auto prefix = oracle_sqrt_prefix(d);
        ASSERT_GE(prefix.size(), 10U) << d;
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            ASSERT_EQ(e.term(i).to_string(), prefix[i].str()) << "D=" << d << " i=" << i;
        }
    }
}

TEST(SurdProperty, PeriodEndsWithTwiceHeadAndIsPalindromic) {
    for (unsigned d = 2; d <= 1000; ++d) {
        if (is_perfect_square(Natural(d))) {
            continue;
        }
        CFExpansion e = surd_cf(Natural(d));
        ASSERT_EQ(e.quotients.size(), 1U);
        const auto& period = *e.periodic_tail;
        ASSERT_EQ(period.back(), e.quotients[0] * Natural(2U)) << d;
        for (std::size_t i = 0; i + 1 < period.size(); ++i) {
            ASSERT_EQ(period[i], period[period.size() - 2 - i]) << d;
        }
    }
}

TEST(SurdState, GeneralQuadraticIrrational) {
    // (1 + sqrt(5)) / 2 = [1; (1)]
    SurdExpansion s = surd_expand(SurdState{Natural(5U), Integer(1), Integer(2)});
    EXPECT_EQ(s.expansion.to_string(), "[1; (1)]");
}
