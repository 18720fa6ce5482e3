#include <gtest/gtest.h>

#include <string>

#include "tower/laws.hpp"

using namespace tower;

namespace {

void expect_all_pass(const laws::SuiteReport& rep) {
    for (const auto& r : rep.results) {
        EXPECT_TRUE(r.passed()) << rep.suite << ": " << r.carrier << " " << r.law << " violations=" << r.violations
                                << " first=" << r.counterexample;
    }
}

const laws::LawResult& find(const std::vector<laws::LawResult>& rs, const std::string& carrier,
                            const std::string& law) {
    for (const auto& r : rs) {
        if (r.carrier == carrier && r.law == law) {
            return r;
        }
    }
    throw std::out_of_range(carrier + " " + law);
}

}  // namespace

TEST(Laws, CcsSuiteSeedZero) { expect_all_pass(laws::run_suite("ccs")); }
TEST(Laws, GroupSuiteSeedZero) { expect_all_pass(laws::run_suite("group")); }
TEST(Laws, FieldSuiteSeedZero) { expect_all_pass(laws::run_suite("field")); }
TEST(Laws, OrderedFieldSuiteSeedZero) { expect_all_pass(laws::run_suite("ordered-field")); }

TEST(Laws, OtherSeedsAlsoPass) {
    for (std::uint64_t seed : {1U, 2U, 99U}) {
        for (const auto& s : laws::suite_names()) {
            EXPECT_TRUE(laws::run_suite(s, seed, 200).passed()) << s << " seed " << seed;
        }
    }
}

TEST(Laws, FieldSuiteHasNineLaws) { EXPECT_EQ(laws::run_suite("field", 0, 10).results.size(), 9U); }

TEST(Laws, OrderedFieldSuiteHasFourLaws) {
    EXPECT_EQ(laws::run_suite("ordered-field", 0, 10).results.size(), 4U);
}

TEST(Laws, Reproducible) {
    auto a = laws::run_suite("ccs", 5, 100);
    auto b = laws::run_suite("ccs", 5, 100);
    ASSERT_EQ(a.results.size(), b.results.size());
    for (std::size_t i = 0; i < a.results.size(); ++i) {
        EXPECT_EQ(a.results[i].violations, b.results[i].violations);
    }
}

TEST(StructureTable, PresenceAndAbsence) {
    auto t = laws::structure_table();
    EXPECT_FALSE(find(t, "(N+, +)", "identity exists").holds());
    EXPECT_FALSE(find(t, "(N+, +)", "inverses exist").holds());
    EXPECT_TRUE(find(t, "(N+, *)", "identity exists").holds());
    EXPECT_FALSE(find(t, "(N+, *)", "inverses exist").holds());
    EXPECT_TRUE(find(t, "(Z, +)", "identity exists").holds());
    EXPECT_TRUE(find(t, "(Z, +)", "inverses exist").holds());
    EXPECT_TRUE(find(t, "(Q+, *)", "identity exists").holds());
    EXPECT_TRUE(find(t, "(Q+, *)", "inverses exist").holds());
    for (const auto& r : t) {
        EXPECT_TRUE(r.passed()) << r.carrier << " " << r.law;
    }
}

TEST(Laws, BrokenCarrierIsCaught) {
    // subtraction-like operation: not commutative, not associative
    struct Broken {
        using value_type = Natural;
        static Natural op(const Natural& a, const Natural& b) { return a * Natural(2U) + b; }
        static bool equal(const Natural& a, const Natural& b) { return a == b; }
        static bool valid(const Natural& a) { return !a.is_zero(); }
        static std::string name() { return "broken"; }
    };
    laws::Sampler s(0);
    std::vector<laws::LawResult> out;
    laws::detail::carrier_laws<Broken>(out, 100, [&] { return s.positive(); });
    EXPECT_FALSE(out[0].holds());
    EXPECT_FALSE(out[1].holds());
}

TEST(Laws, UnknownSuite) { EXPECT_THROW((void)laws::run_suite("ring"), std::invalid_argument); }
