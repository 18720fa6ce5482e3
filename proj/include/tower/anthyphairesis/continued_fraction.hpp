#pragma once

/**
 * @file continued_fraction.hpp
 * @brief Continued fractions from anthyphairesis: finite expansions of
 * rationals, periodic expansions of quadratic surds, convergents.
 *
 * Incommensurability cannot be observed as a procedure that never stops.
 * What is computable is the dichotomy behind it:
 *   - a ratio of numbers has a finite expansion (cf_expand terminates), and
 *   - a quadratic surd has an eventually periodic expansion (surd_cf detects
 *     the first repeated state of the (P, Q) recurrence).
 * Each direction is exercised on its own class of inputs.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tower/anthyphairesis/euclid.hpp"
#include "tower/integer.hpp"
#include "tower/naturals.hpp"
#include "tower/rational.hpp"

namespace tower {

struct CFExpansion {
    /// a0, a1, ... (for periodic expansions: the pre-period, never empty)
    std::vector<Natural> quotients;
    /// Repeating block for quadratic surds.
    std::optional<std::vector<Natural>> periodic_tail;

    [[nodiscard]] bool is_periodic() const noexcept { return periodic_tail.has_value(); }

    /// i-th partial quotient, unrolling the period as needed. Finite
    /// expansions have exactly quotients.size() terms.
    [[nodiscard]] const Natural& term(std::size_t i) const {
        if (i < quotients.size()) {
            return quotients[i];
        }
        if (!periodic_tail) {
            throw domain_error("continued fraction has only " + std::to_string(quotients.size()) +
                               " terms");
        }
        return (*periodic_tail)[(i - quotients.size()) % periodic_tail->size()];
    }

    [[nodiscard]] std::optional<std::size_t> length() const {
        if (periodic_tail) {
            return std::nullopt;
        }
        return quotients.size();
    }

    /// "[5; 1, 2]", "[7]", "[1; (2)]", "[1; (1, 2)]"
    [[nodiscard]] std::string to_string() const {
        std::string out = "[" + quotients.front().to_string();
        bool first_after_head = true;
        auto sep = [&]() -> std::string {
            if (first_after_head) {
                first_after_head = false;
                return "; ";
            }
            return ", ";
        };
        for (std::size_t i = 1; i < quotients.size(); ++i) {
            out += sep() + quotients[i].to_string();
        }
        if (periodic_tail) {
            out += sep() + "(";
            for (std::size_t i = 0; i < periodic_tail->size(); ++i) {
                out += (i == 0 ? "" : ", ") + (*periodic_tail)[i].to_string();
            }
            out += ")";
        }
        return out + "]";
    }

    friend bool operator==(const CFExpansion&, const CFExpansion&) = default;
};

/// Builds a finite expansion in canonical form: a trailing 1 is merged into
/// its predecessor ([.., a, 1] -> [.., a+1]) so every rational has exactly one
/// expansion. Quotients after the first must be positive.
inline CFExpansion make_finite_cf(std::vector<Natural> quotients) {
    if (quotients.empty()) {
        throw domain_error("continued fraction needs at least one quotient");
    }
    for (std::size_t i = 1; i < quotients.size(); ++i) {
        if (quotients[i].is_zero()) {
            throw domain_error("partial quotients after the first must be positive");
        }
    }
    if (quotients.size() > 1 && quotients.back() == Natural(1U)) {
        quotients.pop_back();
        quotients.back() += Natural(1U);
    }
    return {std::move(quotients), std::nullopt};
}

/// Expansion of p/q; the quotients are exactly those of the anthyphairesis
/// trace of (p, q).
inline CFExpansion cf_expand(const Natural& p, const Natural& q) {
    if (q.is_zero()) {
        throw domain_error("continued fraction of p/0 is undefined");
    }
    AnthyphairesisTrace trace = detail::euclid_trace(p, q);
    std::vector<Natural> quotients;
    quotients.reserve(trace.steps.size());
    for (auto& step : trace.steps) {
        quotients.push_back(std::move(step.quotient));
    }
    return make_finite_cf(std::move(quotients));
}

inline CFExpansion cf_expand(const Rational& x) {
    if (x.is_negative()) {
        throw domain_error("continued fractions here expand non-negative ratios only");
    }
    return cf_expand(x.numerator().magnitude(), x.denominator());
}

/// Numerator/denominator pair of a convergent.
struct Convergent {
    Natural p;
    Natural q;

    [[nodiscard]] Rational value() const { return {Integer(p), q}; }
};

/// First n convergents (fewer if a finite expansion runs out), using
/// p_k = a_k p_{k-1} + p_{k-2}, q_k = a_k q_{k-1} + q_{k-2}.
inline std::vector<Convergent> convergent_pairs(const CFExpansion& e, std::size_t n) {
    if (n == 0) {
        throw domain_error("convergent count must be at least 1");
    }
    std::size_t count = e.is_periodic() ? n : std::min(n, e.quotients.size());
    std::vector<Convergent> out;
    out.reserve(count);
    Natural p_prev(1U), p_prev2(0U);
    Natural q_prev(0U), q_prev2(1U);
    for (std::size_t k = 0; k < count; ++k) {
        const Natural& a = e.term(k);
        Natural p = a * p_prev + p_prev2;
        Natural q = a * q_prev + q_prev2;
        p_prev2 = std::exchange(p_prev, p);
        q_prev2 = std::exchange(q_prev, q);
        out.push_back({std::move(p), std::move(q)});
    }
    return out;
}

inline std::vector<Rational> convergents(const CFExpansion& e, std::size_t n) {
    std::vector<Rational> out;
    for (const auto& c : convergent_pairs(e, n)) {
        out.push_back(c.value());
    }
    return out;
}

/// Value of a finite expansion.
inline Rational cf_reconstruct(const CFExpansion& e) {
    if (e.is_periodic()) {
        throw domain_error("periodic continued fraction is not a rational");
    }
    return convergent_pairs(e, e.quotients.size()).back().value();
}

/// 1 / (q_k q_{k+1}): bound on |value - p_k/q_k|.
inline Rational approximation_gap(const CFExpansion& e, std::size_t k) {
    if (!e.is_periodic() && k + 1 >= e.quotients.size()) {
        throw domain_error("approximation gap needs convergent " + std::to_string(k + 1) +
                           ", expansion has " + std::to_string(e.quotients.size()));
    }
    auto pairs = convergent_pairs(e, k + 2);
    return {Integer(1), pairs[k].q * pairs[k + 1].q};
}

/// State of the expansion of (P + sqrt(D)) / Q.
struct SurdState {
    Natural radicand;
    Integer p;
    Integer q;

    friend bool operator==(const SurdState&, const SurdState&) = default;
};

namespace detail {

// floor((P + sqrt(D)) / Q) for non-square D, with root = isqrt(D).
inline Integer surd_floor(const Integer& p, const Natural& root, const Integer& q) {
    if (q.is_positive()) {
        return floor_div(p + Integer(root), q.magnitude());
    }
    return floor_div(-p - Integer(root) - Integer(1), q.magnitude());
}

}  // namespace detail

struct SurdExpansion {
    CFExpansion expansion;
    /// States visited, one per extracted quotient, up to the first repeat.
    std::vector<SurdState> states;
};

/// Periodic expansion of (P + sqrt(D)) / Q for non-square D. If Q does not
/// divide D - P^2 the state is rescaled first so the recurrence stays exact.
inline SurdExpansion surd_expand(SurdState start) {
    const Natural& d0 = start.radicand;
    if (d0.is_zero() || is_perfect_square(d0)) {
        throw domain_error("radicand " + d0.to_string() +
                           " is a perfect square; its root is rational (see isqrt)");
    }
    if (start.q.is_zero()) {
        throw domain_error("surd state with zero denominator");
    }
    {
        Integer rem = Integer(d0) - start.p * start.p;
        bool divides = (rem.magnitude() % start.q.magnitude()).is_zero();
        if (!divides) {
            Integer abs_q = abs(start.q);
            start.radicand = d0 * start.q.magnitude() * start.q.magnitude();
            start.p = start.p * abs_q;
            start.q = start.q * abs_q;
        }
    }
    const Natural& d = start.radicand;
    const Natural root = isqrt(d);

    std::vector<Natural> quotients;
    std::vector<SurdState> states;
    std::map<std::pair<Integer, Integer>, std::size_t> seen;
    SurdState s = start;
    while (true) {
        auto key = std::make_pair(s.p, s.q);
        auto it = seen.find(key);
        if (it != seen.end()) {
            std::size_t i = it->second;
            std::vector<Natural> head(quotients.begin(), quotients.begin() + static_cast<std::ptrdiff_t>(i));
            std::vector<Natural> tail(quotients.begin() + static_cast<std::ptrdiff_t>(i), quotients.end());
            if (head.empty()) {
                // purely periodic: lift one period term into the head
                head.push_back(tail.front());
                std::rotate(tail.begin(), tail.begin() + 1, tail.end());
            }
            return {{std::move(head), std::move(tail)}, std::move(states)};
        }
        seen.emplace(key, quotients.size());
        states.push_back(s);
        Integer a = detail::surd_floor(s.p, root, s.q);
        if (a.is_negative()) {
            throw domain_error("surd value is negative; expansions here are for non-negative ratios");
        }
        Integer next_p = a * s.q - s.p;
        Integer numer = Integer(d) - next_p * next_p;
        // exact by the invariant Q | D - P^2
        Integer next_q = Integer(numer.sign() == s.q.sign() ? Sign::positive : Sign::negative,
                                 numer.magnitude() / s.q.magnitude());
        quotients.push_back(a.magnitude());
        s = {d, std::move(next_p), std::move(next_q)};
    }
}

/// Expansion of sqrt(D): head [a0] followed by the period.
inline CFExpansion surd_cf(const Natural& radicand) {
    if (radicand < Natural(2U)) {
        throw domain_error("surd expansion needs D >= 2");
    }
    return surd_expand({radicand, Integer(0), Integer(1)}).expansion;
}

}  // namespace tower
