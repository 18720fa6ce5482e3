#pragma once

/**
 * @file laws.hpp
 * @brief Seeded, sampled checks of the algebraic laws the number tower relies
 * on: congruence and well-definedness for the completions, group laws on the
 * classes, field and ordered-field laws on Q, and which of (N+,+), (N+,*),
 * (Z,+), (Q+,*) have identities and inverses.
 *
 * Sampling is reproducible: one std::mt19937_64 per suite, seeded by the
 * caller. A law "holds" when no sample violates it. Laws marked as expected to
 * fail (the absent identities and inverses) pass when a search finds nothing.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tower/completion.hpp"
#include "tower/integer.hpp"
#include "tower/naturals.hpp"
#include "tower/rational.hpp"

namespace tower::laws {

constexpr std::size_t default_samples = 1000;
constexpr std::uint64_t default_seed = 0;

struct LawResult {
    std::string law;
    std::string carrier;
    std::size_t samples = 0;
    std::size_t violations = 0;
    bool expected_to_hold = true;
    /// First violating sample, rendered; empty when there was none.
    std::string counterexample;

    [[nodiscard]] bool holds() const noexcept { return violations == 0; }
    [[nodiscard]] bool passed() const noexcept { return holds() == expected_to_hold; }
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = default_seed;
    std::size_t samples = default_samples;
    std::vector<LawResult> results;

    [[nodiscard]] bool passed() const {
        for (const auto& r : results) {
            if (!r.passed()) {
                return false;
            }
        }
        return true;
    }
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"ccs", "group", "field", "ordered-field"};
    return names;
}

/// Hand-rolled generators over the exact types. Most draws are small so that
/// coincidences (equal elements, congruent pairs) actually occur; one in eight
/// is wide to exercise multi-limb arithmetic.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
    }

    bool coin(unsigned one_in) { return uniform(0, one_in - 1) == 0; }

    Natural positive() {
        if (coin(8)) {
            Natural n(uniform(1, UINT64_MAX));
            return (n << static_cast<std::size_t>(uniform(0, 96))) + Natural(uniform(0, 1000));
        }
        return Natural(uniform(1, 60));
    }

    Integer integer() {
        Natural m = coin(10) ? Natural(0U) : positive();
        return coin(2) ? -Integer(m) : Integer(m);
    }

    Rational rational() { return {integer(), positive()}; }

    Rational positive_rational() { return {Integer(positive()), positive()}; }

    Rational nonzero_rational() {
        Rational q = rational();
        while (q.is_zero()) {
            q = rational();
        }
        return q;
    }

    Account account() { return {positive(), positive()}; }
    Fraction fraction() { return {positive(), positive()}; }
    RationalDifference difference() { return {positive_rational(), positive_rational()}; }

    /// A pair congruent to p, built by composing both sides with a fresh element.
    template <CcsCarrier C, class Gen>
    CcsPair<C> congruent_to(const CcsPair<C>& p, Gen&& element) {
        auto z = element();
        return {C::op(p.first, z), C::op(p.second, z)};
    }

private:
    std::mt19937_64 rng_;
};

namespace detail {

inline std::string show(const Natural& n) { return n.to_string(); }
inline std::string show(const Integer& n) { return n.to_string(); }
inline std::string show(const Rational& q) { return q.to_string(); }

template <CcsCarrier C>
std::string show(const CcsPair<C>& p) {
    return "(" + show(p.first) + ", " + show(p.second) + ")";
}

template <class... Ts>
std::string show_all(const Ts&... xs) {
    std::string out;
    ((out += (out.empty() ? "" : " ") + show(xs)), ...);
    return out;
}

/// Runs `trial` `n` times; trial returns a counterexample string on violation.
inline LawResult run_law(std::string law, std::string carrier, std::size_t n,
                         const std::function<std::optional<std::string>()>& trial,
                         bool expected_to_hold = true) {
    LawResult r{std::move(law), std::move(carrier), n, 0, expected_to_hold, {}};
    for (std::size_t i = 0; i < n; ++i) {
        if (auto bad = trial()) {
            if (r.violations++ == 0) {
                r.counterexample = std::move(*bad);
            }
        }
    }
    return r;
}

template <CcsCarrier C, class Gen>
void congruence_laws(std::vector<LawResult>& out, Sampler& s, std::size_t n, Gen element) {
    using P = CcsPair<C>;
    auto pair = [&] { return P(element(), element()); };
    const std::string name = C::name();
    out.push_back(run_law("congruence reflexive", name, n, [&]() -> std::optional<std::string> {
        P p = pair();
        if (pair_congruent<C>(p, p)) {
            return std::nullopt;
        }
        return show(p);
    }));
    out.push_back(run_law("congruence symmetric", name, n, [&]() -> std::optional<std::string> {
        P p = pair();
        P q = s.coin(2) ? s.congruent_to<C>(p, element) : pair();
        if (pair_congruent<C>(p, q) == pair_congruent<C>(q, p)) {
            return std::nullopt;
        }
        return show_all(p, q);
    }));
    out.push_back(run_law("congruence transitive", name, n, [&]() -> std::optional<std::string> {
        P p = pair();
        P q = s.congruent_to<C>(p, element);
        P r = s.coin(2) ? s.congruent_to<C>(q, element) : P(q.second, q.first);
        // the reverse of q is congruent to p only when p is an identity pair
        bool expected = pair_congruent<C>(p, r);
        bool chained = pair_congruent<C>(p, q) && pair_congruent<C>(q, r);
        if (!chained || expected) {
            return std::nullopt;
        }
        return show_all(p, q, r);
    }));
    out.push_back(run_law("combine respects congruence", name, n, [&]() -> std::optional<std::string> {
        P p = pair();
        P q = pair();
        P p2 = s.congruent_to<C>(p, element);
        P q2 = s.congruent_to<C>(q, element);
        if (pair_congruent<C>(pair_combine<C>(p, q), pair_combine<C>(p2, q2))) {
            return std::nullopt;
        }
        return show_all(p, q, p2, q2);
    }));
}

template <CcsCarrier C, class Gen>
void carrier_laws(std::vector<LawResult>& out, std::size_t n, Gen element) {
    const std::string name = C::name();
    out.push_back(run_law("operation commutative", name, n, [&]() -> std::optional<std::string> {
        auto a = element();
        auto b = element();
        if (C::equal(C::op(a, b), C::op(b, a))) {
            return std::nullopt;
        }
        return show_all(a, b);
    }));
    out.push_back(run_law("operation associative", name, n, [&]() -> std::optional<std::string> {
        auto a = element();
        auto b = element();
        auto c = element();
        if (C::equal(C::op(C::op(a, b), c), C::op(a, C::op(b, c)))) {
            return std::nullopt;
        }
        return show_all(a, b, c);
    }));
    out.push_back(run_law("operation cancellative", name, n, [&]() -> std::optional<std::string> {
        auto a = element();
        auto b = element();
        auto c = element();
        // a o c = b o c must force a = b; compare both directions
        if (C::equal(C::op(a, c), C::op(b, c)) == C::equal(a, b)) {
            return std::nullopt;
        }
        return show_all(a, b, c);
    }));
    out.push_back(run_law("operation closed", name, n, [&]() -> std::optional<std::string> {
        auto a = element();
        auto b = element();
        if (C::valid(C::op(a, b))) {
            return std::nullopt;
        }
        return show_all(a, b);
    }));
}

}  // namespace detail

inline SuiteReport ccs_suite(std::uint64_t seed = default_seed, std::size_t n = default_samples) {
    SuiteReport rep{"ccs", seed, n, {}};
    Sampler s(seed);
    auto& out = rep.results;
    auto nat = [&] { return s.positive(); };
    auto rat = [&] { return s.positive_rational(); };
    using detail::run_law;
    using detail::show;
    using detail::show_all;

    detail::carrier_laws<PositiveAddition>(out, n, nat);
    detail::carrier_laws<PositiveMultiplication>(out, n, nat);
    detail::carrier_laws<PositiveRationalAddition>(out, n, rat);
    detail::congruence_laws<PositiveAddition>(out, s, n, nat);
    detail::congruence_laws<PositiveMultiplication>(out, s, n, nat);
    detail::congruence_laws<PositiveRationalAddition>(out, s, n, rat);

    out.push_back(run_law("account_mul respects congruence", "accounts", n, [&]() -> std::optional<std::string> {
        Account p = s.account();
        Account q = s.account();
        Account p2 = s.congruent_to<PositiveAddition>(p, nat);
        Account q2 = s.congruent_to<PositiveAddition>(q, nat);
        if (pair_congruent<PositiveAddition>(account_mul(p, q), account_mul(p2, q2))) {
            return std::nullopt;
        }
        return show_all(p, q, p2, q2);
    }));
    out.push_back(run_law("account_mul matches signed product", "accounts", n, [&]() -> std::optional<std::string> {
        Account p = s.account();
        Account q = s.account();
        if (canonicalize_int(account_mul(p, q)) == canonicalize_int(p) * canonicalize_int(q)) {
            return std::nullopt;
        }
        return show_all(p, q);
    }));
    out.push_back(run_law("fraction_add respects congruence", "fractions", n, [&]() -> std::optional<std::string> {
        Fraction p = s.fraction();
        Fraction q = s.fraction();
        Fraction p2 = s.congruent_to<PositiveMultiplication>(p, nat);
        Fraction q2 = s.congruent_to<PositiveMultiplication>(q, nat);
        if (pair_congruent<PositiveMultiplication>(fraction_add(p, q), fraction_add(p2, q2))) {
            return std::nullopt;
        }
        return show_all(p, q, p2, q2);
    }));
    out.push_back(run_law("canonical form idempotent", "accounts", n, [&]() -> std::optional<std::string> {
        Account p = s.account();
        Account c = account_of(canonicalize_int(p));
        if (account_of(canonicalize_int(c)) == c && pair_congruent<PositiveAddition>(p, c)) {
            return std::nullopt;
        }
        return show(p);
    }));
    out.push_back(run_law("canonical form idempotent", "fractions", n, [&]() -> std::optional<std::string> {
        Fraction p = s.fraction();
        Fraction c = fraction_of(canonicalize_rat(p));
        if (fraction_of(canonicalize_rat(c)) == c && pair_congruent<PositiveMultiplication>(p, c)) {
            return std::nullopt;
        }
        return show(p);
    }));
    out.push_back(run_law("canonical equal iff congruent", "accounts", n, [&]() -> std::optional<std::string> {
        Account p = s.account();
        Account q = s.coin(2) ? s.congruent_to<PositiveAddition>(p, nat) : s.account();
        if ((canonicalize_int(p) == canonicalize_int(q)) == pair_congruent<PositiveAddition>(p, q)) {
            return std::nullopt;
        }
        return show_all(p, q);
    }));
    out.push_back(run_law("canonical equal iff congruent", "fractions", n, [&]() -> std::optional<std::string> {
        Fraction p = s.fraction();
        Fraction q = s.coin(2) ? s.congruent_to<PositiveMultiplication>(p, nat) : s.fraction();
        if ((canonicalize_rat(p) == canonicalize_rat(q)) == pair_congruent<PositiveMultiplication>(p, q)) {
            return std::nullopt;
        }
        return show_all(p, q);
    }));
    out.push_back(run_law("canonical equal iff congruent", "differences", n, [&]() -> std::optional<std::string> {
        RationalDifference p = s.difference();
        RationalDifference q = s.coin(2) ? s.congruent_to<PositiveRationalAddition>(p, rat) : s.difference();
        if ((canonicalize_difference(p) == canonicalize_difference(q)) ==
            pair_congruent<PositiveRationalAddition>(p, q)) {
            return std::nullopt;
        }
        return show_all(p, q);
    }));
    return rep;
}

namespace detail {

template <CcsCarrier C, class Gen>
void group_laws(std::vector<LawResult>& out, std::size_t n, Gen element, const std::string& carrier) {
    using K = CcsClass<C>;
    auto cls = [&] { return K(element(), element()); };
    auto rep = [](const K& k) { return show(k.representative()); };
    out.push_back(run_law("identity", carrier, n, [&]() -> std::optional<std::string> {
        K a = cls();
        K e = K::identity(element());
        if (a.combine(e) == a && e.combine(a) == a) {
            return std::nullopt;
        }
        return rep(a);
    }));
    out.push_back(run_law("identity independent of witness", carrier, n, [&]() -> std::optional<std::string> {
        K e1 = K::identity(element());
        K e2 = K::identity(element());
        if (e1 == e2) {
            return std::nullopt;
        }
        return rep(e1) + " " + rep(e2);
    }));
    out.push_back(run_law("inverse", carrier, n, [&]() -> std::optional<std::string> {
        K a = cls();
        K e = K::identity(element());
        if (a.combine(a.inverse()) == e) {
            return std::nullopt;
        }
        return rep(a);
    }));
    out.push_back(run_law("associativity", carrier, n, [&]() -> std::optional<std::string> {
        K a = cls();
        K b = cls();
        K c = cls();
        if (a.combine(b).combine(c) == a.combine(b.combine(c))) {
            return std::nullopt;
        }
        return rep(a) + " " + rep(b) + " " + rep(c);
    }));
    out.push_back(run_law("commutativity", carrier, n, [&]() -> std::optional<std::string> {
        K a = cls();
        K b = cls();
        if (a.combine(b) == b.combine(a)) {
            return std::nullopt;
        }
        return rep(a) + " " + rep(b);
    }));
    out.push_back(run_law("embedding homomorphism", carrier, n, [&]() -> std::optional<std::string> {
        auto x = element();
        auto y = element();
        K lhs = K::embed(C::op(x, y), element());
        K rhs = K::embed(x, element()).combine(K::embed(y, element()));
        if (lhs == rhs) {
            return std::nullopt;
        }
        return show_all(x, y);
    }));
    out.push_back(run_law("embedding injective", carrier, n, [&]() -> std::optional<std::string> {
        auto x = element();
        auto y = element();
        if ((K::embed(x, element()) == K::embed(y, element())) == C::equal(x, y)) {
            return std::nullopt;
        }
        return show_all(x, y);
    }));
}

struct StructureRow {
    std::string carrier;
    bool identity_expected;
    bool inverses_expected;
};

}  // namespace detail

/// The presence/absence table: (N+,+) has neither identity nor inverses,
/// (N+,*) has 1 but no inverses, (Z,+) and (Q+,*) have both. Each entry is a
/// bounded search over a finite candidate range that contains every answer
/// a nearby element could have.
inline std::vector<LawResult> structure_table() {
    std::vector<LawResult> out;
    constexpr std::uint64_t bound = 40;
    auto search_result = [](std::string law, std::string carrier, bool found, bool expected, std::size_t tried,
                            std::string witness) {
        LawResult r{std::move(law), std::move(carrier), tried, found ? 0U : 1U, expected, {}};
        r.counterexample = found ? std::string{} : std::move(witness);
        return r;
    };

    // (N+, +): e + x = x never holds, and so x + y = e cannot be asked.
    {
        bool found = false;
        for (std::uint64_t e = 1; e <= bound && !found; ++e) {
            bool all = true;
            for (std::uint64_t x = 1; x <= bound && all; ++x) {
                all = Natural(e) + Natural(x) == Natural(x);
            }
            found = all;
        }
        out.push_back(search_result("identity exists", "(N+, +)", found, false, bound, "no e in 1..40"));
        // inverses are relative to an identity; without one none can exist
        out.push_back(search_result("inverses exist", "(N+, +)", found, false, bound, "no identity to invert to"));
    }
    // (N+, *): 1 is the identity; 2 * y = 1 has no solution.
    {
        std::optional<std::uint64_t> identity;
        for (std::uint64_t e = 1; e <= bound && !identity; ++e) {
            bool all = true;
            for (std::uint64_t x = 1; x <= bound && all; ++x) {
                all = Natural(e) * Natural(x) == Natural(x);
            }
            if (all) {
                identity = e;
            }
        }
        out.push_back(search_result("identity exists", "(N+, *)", identity.has_value(), true, bound, "no e in 1..40"));
        bool every = identity.has_value();
        for (std::uint64_t x = 1; x <= bound && every; ++x) {
            bool has = false;
            for (std::uint64_t y = 1; y <= bound && !has; ++y) {
                has = Natural(x) * Natural(y) == Natural(*identity);
            }
            every = has;
        }
        out.push_back(search_result("inverses exist", "(N+, *)", every, false, bound, "2 has no inverse"));
    }
    // (Z, +) as account classes: identity [(1,1)], inverse of [(m,n)] is [(n,m)].
    {
        std::vector<AccountClass> elems;
        for (std::uint64_t m = 1; m <= bound / 4; ++m) {
            for (std::uint64_t k = 1; k <= bound / 4; ++k) {
                elems.emplace_back(Natural(m), Natural(k));
            }
        }
        std::optional<AccountClass> identity;
        for (const auto& e : elems) {
            bool all = true;
            for (const auto& x : elems) {
                all = all && e.combine(x) == x;
            }
            if (all) {
                identity = e;
                break;
            }
        }
        out.push_back(search_result("identity exists", "(Z, +)", identity.has_value(), true, elems.size(), "none"));
        bool every = identity.has_value();
        for (const auto& x : elems) {
            bool has = false;
            for (const auto& y : elems) {
                has = has || x.combine(y) == *identity;
            }
            every = every && has;
        }
        out.push_back(search_result("inverses exist", "(Z, +)", every, true, elems.size(), "missing inverse"));
    }
    // (Q+, *) as fraction classes.
    {
        std::vector<FractionClass> elems;
        for (std::uint64_t m = 1; m <= bound / 4; ++m) {
            for (std::uint64_t k = 1; k <= bound / 4; ++k) {
                elems.emplace_back(Natural(m), Natural(k));
            }
        }
        std::optional<FractionClass> identity;
        for (const auto& e : elems) {
            bool all = true;
            for (const auto& x : elems) {
                all = all && e.combine(x) == x;
            }
            if (all) {
                identity = e;
                break;
            }
        }
        out.push_back(search_result("identity exists", "(Q+, *)", identity.has_value(), true, elems.size(), "none"));
        bool every = identity.has_value();
        for (const auto& x : elems) {
            bool has = false;
            for (const auto& y : elems) {
                has = has || x.combine(y) == *identity;
            }
            every = every && has;
        }
        out.push_back(search_result("inverses exist", "(Q+, *)", every, true, elems.size(), "missing inverse"));
    }
    return out;
}

inline SuiteReport group_suite(std::uint64_t seed = default_seed, std::size_t n = default_samples) {
    SuiteReport rep{"group", seed, n, {}};
    Sampler s(seed);
    detail::group_laws<PositiveAddition>(rep.results, n, [&] { return s.positive(); }, "Z from accounts");
    detail::group_laws<PositiveMultiplication>(rep.results, n, [&] { return s.positive(); }, "Q+ from fractions");
    detail::group_laws<PositiveRationalAddition>(rep.results, n, [&] { return s.positive_rational(); },
                                                 "Q from differences");
    for (auto& r : structure_table()) {
        rep.results.push_back(std::move(r));
    }
    return rep;
}

inline SuiteReport field_suite(std::uint64_t seed = default_seed, std::size_t n = default_samples) {
    SuiteReport rep{"field", seed, n, {}};
    Sampler s(seed);
    auto& out = rep.results;
    const std::string q = "Q";
    using detail::run_law;
    using detail::show;
    using detail::show_all;
    using Trial = std::function<bool(const Rational&, const Rational&, const Rational&)>;
    const std::vector<std::pair<std::string, Trial>> laws{
        {"addition commutative", [](const Rational& a, const Rational& b, const Rational&) { return a + b == b + a; }},
        {"addition associative",
         [](const Rational& a, const Rational& b, const Rational& c) { return (a + b) + c == a + (b + c); }},
        {"multiplication commutative",
         [](const Rational& a, const Rational& b, const Rational&) { return a * b == b * a; }},
        {"multiplication associative",
         [](const Rational& a, const Rational& b, const Rational& c) { return (a * b) * c == a * (b * c); }},
        {"distributivity",
         [](const Rational& a, const Rational& b, const Rational& c) { return a * (b + c) == a * b + a * c; }},
        {"additive identity", [](const Rational& a, const Rational&, const Rational&) { return a + Rational(0) == a; }},
        {"multiplicative identity",
         [](const Rational& a, const Rational&, const Rational&) { return a * Rational(1) == a; }},
        {"additive inverse", [](const Rational& a, const Rational&, const Rational&) { return (a + (-a)).is_zero(); }},
    };
    for (const auto& [name, law] : laws) {
        out.push_back(run_law(name, q, n, [&, &law = law]() -> std::optional<std::string> {
            Rational a = s.rational();
            Rational b = s.rational();
            Rational c = s.rational();
            if (law(a, b, c)) {
                return std::nullopt;
            }
            return show_all(a, b, c);
        }));
    }
    out.push_back(run_law("multiplicative inverse", q, n, [&]() -> std::optional<std::string> {
        Rational a = s.nonzero_rational();
        if (a * a.reciprocal() == Rational(1)) {
            return std::nullopt;
        }
        return show(a);
    }));
    return rep;
}

inline SuiteReport ordered_field_suite(std::uint64_t seed = default_seed, std::size_t n = default_samples) {
    SuiteReport rep{"ordered-field", seed, n, {}};
    Sampler s(seed);
    auto& out = rep.results;
    const std::string q = "Q";
    using detail::run_law;
    using detail::show;
    using detail::show_all;
    // draws from a small pool so that a = b and chains a < b < c both occur
    auto pick = [&] { return s.coin(4) ? Rational(Integer(static_cast<std::int64_t>(s.uniform(0, 4)) - 2)) : s.rational(); };
    const Rational zero(0);
    out.push_back(run_law("trichotomy", q, n, [&]() -> std::optional<std::string> {
        Rational a = pick();
        Rational b = pick();
        int count = static_cast<int>(a < b) + static_cast<int>(a == b) + static_cast<int>(b < a);
        if (count == 1) {
            return std::nullopt;
        }
        return show_all(a, b);
    }));
    out.push_back(run_law("transitivity", q, n, [&]() -> std::optional<std::string> {
        Rational a = pick();
        Rational b = pick();
        Rational c = pick();
        if (!(a < b && b < c) || a < c) {
            return std::nullopt;
        }
        return show_all(a, b, c);
    }));
    out.push_back(run_law("positives closed under + and *", q, n, [&]() -> std::optional<std::string> {
        Rational a = abs(s.nonzero_rational());
        Rational b = abs(s.nonzero_rational());
        if (zero < a + b && zero < a * b) {
            return std::nullopt;
        }
        return show_all(a, b);
    }));
    out.push_back(run_law("a < b iff 0 < b - a", q, n, [&]() -> std::optional<std::string> {
        Rational a = pick();
        Rational b = pick();
        if ((a < b) == (zero < b + (-a))) {
            return std::nullopt;
        }
        return show_all(a, b);
    }));
    return rep;
}

inline SuiteReport run_suite(std::string_view suite, std::uint64_t seed = default_seed,
                             std::size_t samples = default_samples) {
    if (suite == "ccs") {
        return ccs_suite(seed, samples);
    }
    if (suite == "group") {
        return group_suite(seed, samples);
    }
    if (suite == "field") {
        return field_suite(seed, samples);
    }
    if (suite == "ordered-field") {
        return ordered_field_suite(seed, samples);
    }
    throw std::invalid_argument("unknown law suite '" + std::string(suite) + "'");
}

}  // namespace tower::laws
