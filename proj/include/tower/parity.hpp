#pragma once

/**
 * @file parity.hpp
 * @brief Pythagorean triples, the odd/even lemmas used against a common
 * measure of side and diagonal, the descent itself, and pebble diagrams.
 *
 * The lemmas are checked over brute-forced triples, not proved. For a
 * Pythagorean triple (a, b, c):
 *   1. c even => a and b even
 *   2. c even => (a/2, b/2, c/2) is Pythagorean
 *   3. 4 | c  => 4 | a and 4 | b
 *   4. c odd  => exactly one of a, b is odd
 *   5. two of a, b, c even => the third is even
 *   6. one of a, b, c odd => exactly two are odd
 */

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tower/naturals.hpp"

namespace tower {

struct Triple {
    Natural a;
    Natural b;
    Natural c;

    Triple(Natural x, Natural y, Natural z) : a(std::move(x)), b(std::move(y)), c(std::move(z)) {
        if (a.is_zero() || b.is_zero() || c.is_zero()) {
            throw domain_error("triple components must be positive");
        }
    }

    [[nodiscard]] std::string to_string() const {
        return "(" + a.to_string() + ", " + b.to_string() + ", " + c.to_string() + ")";
    }

    friend bool operator==(const Triple&, const Triple&) = default;
};

inline bool is_pythagorean(const Triple& t) { return t.a * t.a + t.b * t.b == t.c * t.c; }

/// Pythagorean triples with c <= c_max, both leg orders, sorted by (c, a).
inline std::vector<Triple> enumerate_triples(std::uint64_t c_max) {
    std::vector<Triple> out;
    for (std::uint64_t c = 1; c <= c_max; ++c) {
        for (std::uint64_t a = 1; a < c; ++a) {
            std::uint64_t b2 = c * c - a * a;
            Natural b = isqrt(Natural(b2));
            if (b * b == Natural(b2)) {
                out.emplace_back(Natural(a), std::move(b), Natural(c));
            }
        }
    }
    return out;
}

/// Halves every side; item 1 guarantees this applies when c is even.
inline Triple halve_triple(const Triple& t) {
    if (t.a.is_odd() || t.b.is_odd() || t.c.is_odd()) {
        throw domain_error("cannot halve " + t.to_string() + ": not all sides are even");
    }
    return {t.a >> 1, t.b >> 1, t.c >> 1};
}

constexpr std::size_t lemma_count = 6;

struct LemmaReport {
    int lemma_id;
    std::string statement;
    /// Triples whose hypothesis applied.
    std::size_t triples_checked = 0;
    std::vector<Triple> violations;
};

struct ParityReport {
    std::uint64_t c_max = 0;
    std::vector<Triple> triples;
    std::array<LemmaReport, lemma_count> lemmas;

    [[nodiscard]] std::size_t violation_count() const {
        std::size_t n = 0;
        for (const auto& l : lemmas) {
            n += l.violations.size();
        }
        return n;
    }
};

inline ParityReport check_parity_lemmas(std::uint64_t c_max) {
    ParityReport report;
    report.c_max = c_max;
    report.triples = enumerate_triples(c_max);
    report.lemmas = {{
        {1, "if c is even, then both a and b are even", 0, {}},
        {2, "if c is even, then (a/2, b/2, c/2) is also a Pythagorean triple", 0, {}},
        {3, "if c is a multiple of four, then so are a and b", 0, {}},
        {4, "if c is odd, then one of a, b is odd and the other is even", 0, {}},
        {5, "if any two of a, b, c are even, then the third is also even", 0, {}},
        {6, "if one of a, b, c is odd, then two are odd and one is even", 0, {}},
    }};
    const Natural four(4U);
    for (const Triple& t : report.triples) {
        auto check = [&](std::size_t idx, bool premise, auto&& conclusion) {
            if (!premise) {
                return;
            }
            ++report.lemmas[idx].triples_checked;
            if (!conclusion()) {
                report.lemmas[idx].violations.push_back(t);
            }
        };
        const int odd = static_cast<int>(t.a.is_odd()) + static_cast<int>(t.b.is_odd()) +
                        static_cast<int>(t.c.is_odd());
        const int even = 3 - odd;
        check(0, t.c.is_even(), [&] { return t.a.is_even() && t.b.is_even(); });
        check(1, t.c.is_even(), [&] {
            if (t.a.is_odd() || t.b.is_odd()) {
                return false;
            }
            return is_pythagorean(halve_triple(t));
        });
        check(2, (t.c % four).is_zero(), [&] { return (t.a % four).is_zero() && (t.b % four).is_zero(); });
        check(3, t.c.is_odd(), [&] { return t.a.is_odd() != t.b.is_odd(); });
        check(4, even >= 2, [&] { return even == 3; });
        check(5, odd >= 1, [&] { return odd == 2; });
    }
    return report;
}

struct DescentStep {
    Natural side;
    Natural diagonal;
};

enum class DescentOutcome {
    not_pythagorean,       // (a, a, c) fails a^2 + a^2 = c^2
    odd_diagonal_contradiction,  // chain reached odd c: lemma 4 makes a both even and odd
};

struct DescentVerdict {
    DescentOutcome outcome;
    std::vector<DescentStep> chain;
    Natural legs_square_sum;  // 2 a^2 of the input
    Natural diagonal_square;  // c^2 of the input
};

/// Follows the proof that no unit measures both side a and diagonal c: while
/// (a, a, c) is Pythagorean with c even, halve everything; an odd c would
/// contradict lemma 4.
inline DescentVerdict incommensurability_descent(const Natural& side, const Natural& diagonal) {
    if (side.is_zero() || diagonal.is_zero()) {
        throw domain_error("descent needs positive side and diagonal");
    }
    DescentVerdict v{DescentOutcome::not_pythagorean, {}, Natural(2U) * side * side, diagonal * diagonal};
    Natural a = side;
    Natural c = diagonal;
    while (true) {
        v.chain.push_back({a, c});
        if (!is_pythagorean(Triple(a, a, c))) {
            v.outcome = DescentOutcome::not_pythagorean;
            return v;
        }
        if (c.is_odd()) {
            v.outcome = DescentOutcome::odd_diagonal_contradiction;
            return v;
        }
        Triple half = halve_triple(Triple(a, a, c));
        a = half.a;
        c = half.c;
    }
}

/// Every (a, c) with a, c <= n and 2a^2 = c^2, by exhaustive search. The
/// descent says this is always empty.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> descent_search(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> found;
    for (std::uint64_t a = 1; a <= n; ++a) {
        const std::uint64_t lhs = 2 * a * a;
        for (std::uint64_t c = 1; c <= n; ++c) {
            if (c * c == lhs) {
                found.emplace_back(a, c);
            }
        }
    }
    return found;
}

struct IrrationalityWitness {
    Natural twice_q_squared;  // 2 q^2
    Natural p_squared;        // p^2
    bool p_squared_larger;
};

/// Refutes sqrt(2) = p/q for one candidate: 2q^2 and p^2 always differ.
inline IrrationalityWitness sqrt2_irrationality_witness(const Natural& p, const Natural& q) {
    if (p.is_zero() || q.is_zero()) {
        throw domain_error("witness needs positive p and q");
    }
    IrrationalityWitness w{Natural(2U) * q * q, p * p, false};
    if (w.twice_q_squared == w.p_squared) {
        throw std::logic_error("2q^2 = p^2 for q = " + q.to_string());
    }
    w.p_squared_larger = w.twice_q_squared < w.p_squared;
    return w;
}

enum class PebbleKind { odd_square, even_square, sum_of_odds };

struct PebbleDiagram {
    std::string text;
    std::string identity;  // e.g. "25 = 4·6 + 1"
    bool verified = false;
};

constexpr std::uint64_t pebble_budget = 99;

namespace detail {

// Lays out a grid of pebbles labelled by part; a '|' or '-' is drawn between
// neighbouring pebbles of different parts. Row 0 is printed at the bottom.
template <class PartOf>
std::string draw_partitioned_grid(std::uint64_t rows, std::uint64_t cols, PartOf&& part_of) {
    const std::string pebble = "∘";
    std::vector<std::string> lines;
    for (std::uint64_t r = 0; r < rows; ++r) {
        std::string line;
        for (std::uint64_t c = 0; c < cols; ++c) {
            line += pebble;
            if (c + 1 < cols) {
                line += part_of(r, c) != part_of(r, c + 1) ? "|" : " ";
            }
        }
        lines.push_back(line);
        if (r + 1 < rows) {
            std::string sep;
            for (std::uint64_t c = 0; c < cols; ++c) {
                sep += part_of(r, c) != part_of(r + 1, c) ? "-" : " ";
                if (c + 1 < cols) {
                    sep += " ";
                }
            }
            while (!sep.empty() && sep.back() == ' ') {
                sep.pop_back();
            }
            lines.push_back(sep);
        }
    }
    std::string out;
    for (auto it = lines.rbegin(); it != lines.rend(); ++it) {
        out += *it + "\n";
    }
    return out;
}

}  // namespace detail

/// Pebble pictures of the parity facts:
///  odd_square n = 2k+1: a centre pebble and four k x (k+1) rectangles in a
///    pinwheel, so n^2 = 4 k(k+1) + 1;
///  even_square n = 2k: four k x k quadrants, so n^2 = 4 k^2;
///  sum_of_odds: `count` rows of `value` pebbles (value odd, count even); the
///    single pebble left over in each row pairs up with the next row's.
inline PebbleDiagram pebble_render(PebbleKind kind, std::uint64_t n, std::uint64_t value = 0) {
    if (n == 0 || n > pebble_budget || value > pebble_budget) {
        throw domain_error("pebble diagrams are limited to 1..99 pebbles per side");
    }
    PebbleDiagram d;
    switch (kind) {
    case PebbleKind::odd_square: {
        if (n % 2 == 0) {
            throw domain_error("odd-square needs an odd side");
        }
        const std::uint64_t k = n / 2;
        // part 0 is the centre; parts 1-4 are the pinwheel arms
        d.text = detail::draw_partitioned_grid(n, n, [k](std::uint64_t r, std::uint64_t c) {
            if (r == k && c == k) {
                return 0;
            }
            if (r < k && c <= k) {
                return 1;
            }
            if (c > k && r <= k) {
                return 2;
            }
            if (r > k && c >= k) {
                return 3;
            }
            return 4;
        });
        const std::uint64_t arm = k * (k + 1);
        d.identity = std::to_string(n * n) + " = 4·" + std::to_string(arm) + " + 1";
        d.verified = n * n == 4 * arm + 1 && n * n % 4 == 1;
        break;
    }
    case PebbleKind::even_square: {
        if (n % 2 != 0) {
            throw domain_error("even-square needs an even side");
        }
        const std::uint64_t k = n / 2;
        d.text = detail::draw_partitioned_grid(n, n, [k](std::uint64_t r, std::uint64_t c) {
            return static_cast<int>(r >= k) * 2 + static_cast<int>(c >= k);
        });
        d.identity = std::to_string(n * n) + " = 4·" + std::to_string(k * k);
        d.verified = n * n == 4 * k * k && n * n % 4 == 0;
        break;
    }
    case PebbleKind::sum_of_odds: {
        if (n % 2 != 0) {
            throw domain_error("sum-of-odds needs an even multitude");
        }
        if (value % 2 == 0) {
            throw domain_error("sum-of-odds needs an odd value");
        }
        // each row: the even bulk, then its leftover pebble
        d.text = detail::draw_partitioned_grid(n, value, [value](std::uint64_t r, std::uint64_t c) {
            if (c + 1 < value) {
                return static_cast<int>(2 * r);
            }
            return static_cast<int>(2 * (r / 2) + 1);
        });
        const std::uint64_t sum = n * value;
        d.identity = std::to_string(n) + "·" + std::to_string(value) + " = " + std::to_string(sum) +
                     " = 2·" + std::to_string(sum / 2);
        d.verified = sum % 2 == 0;
        break;
    }
    }
    return d;
}

}  // namespace tower
