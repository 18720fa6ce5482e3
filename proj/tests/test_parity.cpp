#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <tuple>

#include "tower/parity.hpp"

using namespace tower;

TEST(Triples, KnownSmallTriples) {
    auto ts = enumerate_triples(13);
    std::set<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> got;
    for (const auto& t : ts) {
        EXPECT_TRUE(is_pythagorean(t));
        got.insert({t.a.to_u64(), t.b.to_u64(), t.c.to_u64()});
    }
    decltype(got) want{{3, 4, 5}, {4, 3, 5}, {6, 8, 10}, {8, 6, 10}, {5, 12, 13}, {12, 5, 13}};
    EXPECT_EQ(got, want);
}

TEST(Triples, CountMatchesIndependentDoubleLoop) {
    std::size_t count = 0;
    for (std::uint64_t c = 1; c <= 200; ++c) {
        for (std::uint64_t a = 1; a < c; ++a) {
            for (std::uint64_t b = 1; b < c; ++b) {
                count += a * a + b * b == c * c ? 1 : 0;
            }
        }
    }
    EXPECT_EQ(enumerate_triples(200).size(), count);
}

TEST(ParityLemmas, NoViolationsUpTo500) {
    ParityReport rep = check_parity_lemmas(500);
    EXPECT_EQ(rep.violation_count(), 0U);
    for (const auto& l : rep.lemmas) {
        EXPECT_GT(l.triples_checked, 0U) << "lemma " << l.lemma_id << " never applied";
    }
}

TEST(ParityLemmas, LemmaFiveAppliesExactlyToEvenC) {
    // in a triple an even c forces all even; an odd c gives exactly one even leg
    ParityReport rep = check_parity_lemmas(100);
    EXPECT_EQ(rep.lemmas[4].triples_checked, rep.lemmas[0].triples_checked);
}

TEST(HalveTriple, Examples) {
    EXPECT_EQ(halve_triple(Triple(Natural(6U), Natural(8U), Natural(10U))),
              Triple(Natural(3U), Natural(4U), Natural(5U)));
    EXPECT_THROW((void)halve_triple(Triple(Natural(3U), Natural(4U), Natural(5U))), domain_error);
}

TEST(Descent, NoSideDiagonalPairUpTo2000) { EXPECT_TRUE(descent_search(2000).empty()); }

TEST(Descent, NearMissesAreNotPythagorean) {
    // 5, 7 and 12, 17 come from the convergents 7/5 and 17/12 of sqrt(2)
    DescentVerdict v = incommensurability_descent(Natural(5U), Natural(7U));
    EXPECT_EQ(v.outcome, DescentOutcome::not_pythagorean);
    EXPECT_EQ(v.legs_square_sum, Natural(50U));
    EXPECT_EQ(v.diagonal_square, Natural(49U));
    DescentVerdict w = incommensurability_descent(Natural(12U), Natural(17U));
    EXPECT_EQ(w.legs_square_sum, Natural(288U));
    EXPECT_EQ(w.diagonal_square, Natural(289U));
}

TEST(Descent, ChainHasOneEntryWhenNotPythagorean) {
    DescentVerdict v = incommensurability_descent(Natural(8U), Natural(12U));
    EXPECT_EQ(v.chain.size(), 1U);
}

TEST(IrrationalityWitness, NeverEqual) {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 2000; ++i) {
        Natural p(rng() % 1000000 + 1);
        Natural q(rng() % 1000000 + 1);
        IrrationalityWitness w = sqrt2_irrationality_witness(p, q);
        ASSERT_NE(w.twice_q_squared, w.p_squared);
        ASSERT_EQ(w.p_squared_larger, w.twice_q_squared < w.p_squared);
    }
}

TEST(SquaresModFour, OnlyZeroAndOne) {
    for (std::uint64_t n = 1; n <= 500; ++n) {
        const std::uint64_t r = n * n % 4;
        ASSERT_EQ(r, n % 2 == 0 ? 0U : 1U) << n;
    }
}

TEST(Pebble, OddSquarePinwheel) {
    PebbleDiagram d = pebble_render(PebbleKind::odd_square, 5);
    EXPECT_EQ(d.identity, "25 = 4·6 + 1");
    EXPECT_TRUE(d.verified);
    EXPECT_EQ(d.text,
              "∘ ∘|∘ ∘ ∘\n"
              "\n"
              "∘ ∘|∘ ∘ ∘\n"
              "    - - -\n"
              "∘ ∘|∘|∘ ∘\n"
              "- - -\n"
              "∘ ∘ ∘|∘ ∘\n"
              "\n"
              "∘ ∘ ∘|∘ ∘\n");
}

TEST(Pebble, EvenSquareQuadrants) {
    PebbleDiagram d = pebble_render(PebbleKind::even_square, 6);
    EXPECT_EQ(d.identity, "36 = 4·9");
    EXPECT_TRUE(d.verified);
}

TEST(Pebble, PebbleCountEqualsSquare) {
    for (std::uint64_t n = 1; n <= 21; ++n) {
        PebbleDiagram d = pebble_render(n % 2 == 0 ? PebbleKind::even_square : PebbleKind::odd_square, n);
        std::size_t pebbles = 0;
        for (std::size_t at = d.text.find("∘"); at != std::string::npos; at = d.text.find("∘", at + 1)) {
            ++pebbles;
        }
        EXPECT_EQ(pebbles, n * n);
        EXPECT_TRUE(d.verified);
    }
}

TEST(Pebble, SumOfOddsRequiresEvenMultitude) {
    PebbleDiagram d = pebble_render(PebbleKind::sum_of_odds, 4, 5);
    EXPECT_EQ(d.identity, "4·5 = 20 = 2·10");
    EXPECT_THROW((void)pebble_render(PebbleKind::sum_of_odds, 3, 5), domain_error);
    EXPECT_THROW((void)pebble_render(PebbleKind::sum_of_odds, 4, 6), domain_error);
}

TEST(Pebble, BudgetAndParityChecks) {
    EXPECT_THROW((void)pebble_render(PebbleKind::odd_square, 101), domain_error);
    EXPECT_THROW((void)pebble_render(PebbleKind::odd_square, 4), domain_error);
    EXPECT_THROW((void)pebble_render(PebbleKind::even_square, 5), domain_error);
}
